//! Definitional oracles. Quantifiers range over every open, subset or
//! subfamily, with none of the reductions the library relies on.
#![allow(dead_code)]

use soberlens::{FinLattice, FinSpace, PointSet};

pub fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    PointSet::full(n).subsets()
}

/// Every subfamily of `items`, smallest masks first.
pub fn families<T: Copy>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    assert!(items.len() < 32, "too many items to enumerate subfamilies");
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &t)| t)
            .collect()
    })
}

// ---- topologies ----

/// Closes a subbasis under finite intersections, then under unions.
pub fn generate_topology(n: usize, subbasis: &[PointSet]) -> Vec<PointSet> {
    let full = PointSet::full(n);
    let mut basis = vec![full];
    for &s in subbasis {
        let extra: Vec<PointSet> = basis.iter().map(|&b| b & s).collect();
        for b in extra {
            if !basis.contains(&b) {
                basis.push(b);
            }
        }
    }
    let mut opens = vec![PointSet::EMPTY];
    for &b in &basis {
        let extra: Vec<PointSet> = opens.iter().map(|&u| u | b).collect();
        for u in extra {
            if !opens.contains(&u) {
                opens.push(u);
            }
        }
    }
    opens.sort();
    opens
}

pub fn closed_sets(s: &FinSpace) -> Vec<PointSet> {
    s.opens().iter().map(|u| u.complement(s.n())).collect()
}

pub fn closure(s: &FinSpace, a: PointSet) -> PointSet {
    closed_sets(s)
        .into_iter()
        .filter(|&c| a.is_subset(c))
        .fold(s.full(), |acc, c| acc & c)
}

/// Intersection of the open sets containing `a`.
pub fn saturation(s: &FinSpace, a: PointSet) -> PointSet {
    s.opens()
        .iter()
        .filter(|&&u| a.is_subset(u))
        .fold(s.full(), |acc, &u| acc & u)
}

pub fn spec_leq(s: &FinSpace, x: usize, y: usize) -> bool {
    s.opens().iter().all(|u| !u.contains(x) || u.contains(y))
}

pub fn downset(s: &FinSpace, a: PointSet) -> PointSet {
    (0..s.n())
        .filter(|&x| a.iter().any(|y| spec_leq(s, x, y)))
        .collect()
}

pub fn is_t0(s: &FinSpace) -> bool {
    (0..s.n()).all(|x| (0..x).all(|y| s.opens().iter().any(|u| u.contains(x) != u.contains(y))))
}

pub fn is_saturated(s: &FinSpace, a: PointSet) -> bool {
    saturation(s, a) == a
}

/// For `x, y` and every open `W ⊇ ↑x ∩ ↑y` there are opens `U ∋ x`,
/// `V ∋ y` with `U ∩ V ⊆ W`.
pub fn weakly_hausdorff(s: &FinSpace) -> bool {
    let opens = s.opens();
    (0..s.n()).all(|x| {
        (0..s.n()).all(|y| {
            let k = saturation(s, PointSet::singleton(x)) & saturation(s, PointSet::singleton(y));
            opens.iter().filter(|&&w| k.is_subset(w)).all(|&w| {
                opens.iter().filter(|u| u.contains(x)).any(|&u| {
                    opens
                        .iter()
                        .filter(|v| v.contains(y))
                        .any(|&v| (u & v).is_subset(w))
                })
            })
        })
    })
}

pub fn is_irreducible(s: &FinSpace, c: PointSet) -> bool {
    let opens = s.opens();
    !c.is_empty()
        && opens.iter().all(|&u| {
            opens
                .iter()
                .all(|&v| !(u.intersects(c) && v.intersects(c)) || (u & v).intersects(c))
        })
}

pub fn sober(s: &FinSpace) -> bool {
    closed_sets(s)
        .into_iter()
        .filter(|&c| is_irreducible(s, c))
        .all(|c| {
            (0..s.n())
                .filter(|&x| closure(s, PointSet::singleton(x)) == c)
                .count()
                == 1
        })
}

/// Largest number of opens for which directed families are enumerated.
pub const FAMILY_ORACLE_OPENS: usize = 12;

/// Directed families of opens, each with its union.
pub fn directed_open_families(s: &FinSpace) -> Vec<(PointSet, Vec<PointSet>)> {
    let opens = s.opens();
    assert!(opens.len() <= FAMILY_ORACLE_OPENS);
    families(opens)
        .filter(|fam| {
            !fam.is_empty()
                && fam.iter().all(|&u| {
                    fam.iter()
                        .all(|&v| fam.iter().any(|&w| (u | v).is_subset(w)))
                })
        })
        .map(|fam| (fam.iter().fold(PointSet::EMPTY, |acc, &u| acc | u), fam))
        .collect()
}

/// Every directed open cover of `a` has a member containing `a`.
pub fn compact_in(directed: &[(PointSet, Vec<PointSet>)], a: PointSet) -> bool {
    directed
        .iter()
        .filter(|(union, _)| a.is_subset(*union))
        .all(|(_, fam)| fam.iter().any(|&u| a.is_subset(u)))
}

pub fn compact(s: &FinSpace, a: PointSet) -> bool {
    compact_in(&directed_open_families(s), a)
}

pub fn compact_saturated(s: &FinSpace) -> Vec<PointSet> {
    let dir = directed_open_families(s);
    subsets(s.n())
        .filter(|&a| is_saturated(s, a) && compact_in(&dir, a))
        .collect()
}

pub fn coherent(s: &FinSpace) -> bool {
    let dir = directed_open_families(s);
    let ks = compact_saturated(s);
    ks.iter()
        .all(|&k| ks.iter().all(|&l| compact_in(&dir, k & l)))
}

pub fn weakly_coherent(s: &FinSpace) -> bool {
    let dir = directed_open_families(s);
    (0..s.n()).all(|x| {
        (0..s.n()).all(|y| {
            compact_in(
                &dir,
                saturation(s, PointSet::singleton(x)) & saturation(s, PointSet::singleton(y)),
            )
        })
    })
}

/// Scott-open filters of `O X` against compact saturated sets, via
/// `F ↦ ⋂F` and `K ↦ {U | K ⊆ U}`. Checks both maps are mutually inverse
/// and order-reversing and returns the number of pairs.
pub fn hofmann_mislove(s: &FinSpace, include_empty: bool) -> Result<usize, String> {
    let opens = s.opens();
    let dir = directed_open_families(s);
    let full = s.full();
    let filters: Vec<Vec<PointSet>> = families(opens)
        .filter(|f| {
            f.contains(&full)
                && f.iter()
                    .all(|&u| opens.iter().all(|&v| !u.is_subset(v) || f.contains(&v)))
                && f.iter().all(|&u| f.iter().all(|&v| f.contains(&(u & v))))
                && dir
                    .iter()
                    .all(|(union, fam)| !f.contains(union) || fam.iter().any(|u| f.contains(u)))
        })
        .filter(|f| include_empty || !f.contains(&PointSet::EMPTY))
        .collect();
    let ks: Vec<PointSet> = compact_saturated(s)
        .into_iter()
        .filter(|k| include_empty || !k.is_empty())
        .collect();
    let meet_of = |f: &Vec<PointSet>| f.iter().fold(full, |acc, &u| acc & u);
    let nbhds = |k: PointSet| -> Vec<PointSet> {
        opens.iter().copied().filter(|&u| k.is_subset(u)).collect()
    };
    if filters.len() != ks.len() {
        return Err(format!(
            "{} filters, {} compact saturated sets",
            filters.len(),
            ks.len()
        ));
    }
    for f in &filters {
        let k = meet_of(f);
        if !ks.contains(&k) || nbhds(k) != *f {
            return Err(format!("filter {f:?} does not round-trip through {k}"));
        }
    }
    for &k in &ks {
        if meet_of(&nbhds(k)) != k {
            return Err(format!("{k} does not round-trip"));
        }
    }
    for f in &filters {
        for g in &filters {
            let sub = f.iter().all(|u| g.contains(u));
            if sub != meet_of(g).is_subset(meet_of(f)) {
                return Err(format!("order not reversed between {f:?} and {g:?}"));
            }
        }
    }
    Ok(filters.len())
}

/// T0, directed subsets have suprema, and every open is Scott-open.
pub fn monotone_convergence(s: &FinSpace) -> bool {
    is_t0(s)
        && subsets(s.n()).filter(|d| !d.is_empty()).all(|d| {
            let directed = d.iter().all(|x| {
                d.iter()
                    .all(|y| d.iter().any(|z| spec_leq(s, x, z) && spec_leq(s, y, z)))
            });
            if !directed {
                return true;
            }
            let ubs: Vec<usize> = (0..s.n())
                .filter(|&z| d.iter().all(|x| spec_leq(s, x, z)))
                .collect();
            let sup = ubs
                .iter()
                .copied()
                .find(|&z| ubs.iter().all(|&w| spec_leq(s, z, w)));
            match sup {
                None => false,
                Some(z) => s.opens().iter().all(|u| !u.contains(z) || u.intersects(d)),
            }
        })
}

/// Limits of the ultrafilter of supersets of `{x}`: points every open
/// neighbourhood of which contains `x`.
pub fn ultrafilter_limits(s: &FinSpace, x: usize) -> PointSet {
    (0..s.n())
        .filter(|&y| s.opens().iter().all(|u| !u.contains(y) || u.contains(x)))
        .collect()
}

/// Every ultrafilter's limit set is empty or the closure of exactly one
/// point. Ultrafilters on a finite set are principal.
pub fn locally_strongly_sober(s: &FinSpace) -> bool {
    (0..s.n()).all(|x| {
        let lim = ultrafilter_limits(s, x);
        lim.is_empty()
            || (0..s.n())
                .filter(|&z| closure(s, PointSet::singleton(z)) == lim)
                .count()
                == 1
    })
}

// ---- lattices ----

pub fn elements(l: &FinLattice) -> PointSet {
    PointSet::full(l.m())
}

pub fn lub(l: &FinLattice, s: PointSet) -> usize {
    let ubs: Vec<usize> = (0..l.m())
        .filter(|&z| s.iter().all(|x| l.leq(x, z)))
        .collect();
    ubs.iter()
        .copied()
        .find(|&z| ubs.iter().all(|&w| l.leq(z, w)))
        .expect("complete lattice")
}

pub fn glb(l: &FinLattice, s: PointSet) -> usize {
    let lbs: Vec<usize> = (0..l.m())
        .filter(|&z| s.iter().all(|x| l.leq(z, x)))
        .collect();
    lbs.iter()
        .copied()
        .find(|&z| lbs.iter().all(|&w| l.leq(w, z)))
        .expect("complete lattice")
}

pub fn meet(l: &FinLattice, a: usize, b: usize) -> usize {
    glb(l, PointSet::from([a, b]))
}

pub fn join(l: &FinLattice, a: usize, b: usize) -> usize {
    lub(l, PointSet::from([a, b]))
}

pub fn is_directed(l: &FinLattice, d: PointSet) -> bool {
    !d.is_empty()
        && d.iter().all(|a| {
            d.iter()
                .all(|b| d.iter().any(|c| l.leq(a, c) && l.leq(b, c)))
        })
}

/// Directed subsets with their suprema.
pub fn directed_subsets(l: &FinLattice) -> Vec<(PointSet, usize)> {
    subsets(l.m())
        .filter(|&d| is_directed(l, d))
        .map(|d| (d, lub(l, d)))
        .collect()
}

pub fn waybelow(l: &FinLattice, directed: &[(PointSet, usize)], u: usize, v: usize) -> bool {
    directed
        .iter()
        .filter(|&&(_, sup)| l.leq(v, sup))
        .all(|&(d, _)| d.iter().any(|e| l.leq(u, e)))
}

pub fn is_upset(l: &FinLattice, f: PointSet) -> bool {
    f.iter()
        .all(|a| (0..l.m()).all(|b| !l.leq(a, b) || f.contains(b)))
}

/// Non-empty upsets closed under binary meets.
pub fn filters(l: &FinLattice) -> Vec<PointSet> {
    subsets(l.m())
        .filter(|&f| {
            !f.is_empty()
                && is_upset(l, f)
                && f.iter()
                    .all(|a| f.iter().all(|b| f.contains(meet(l, a, b))))
        })
        .collect()
}

pub fn is_filter(l: &FinLattice, f: PointSet) -> bool {
    filters(l).contains(&f)
}

pub fn scott_open(l: &FinLattice, directed: &[(PointSet, usize)], f: PointSet) -> bool {
    is_upset(l, f)
        && directed
            .iter()
            .all(|&(d, sup)| !f.contains(sup) || d.intersects(f))
}

pub fn completely_prime(l: &FinLattice, f: PointSet) -> bool {
    subsets(l.m()).all(|s| !f.contains(lub(l, s)) || s.intersects(f))
}

/// `{u ∧ v | u ∈ f, v ∈ g}`.
pub fn filter_join(l: &FinLattice, f: PointSet, g: PointSet) -> PointSet {
    f.iter()
        .flat_map(|a| g.iter().map(move |b| (a, b)))
        .map(|(a, b)| meet(l, a, b))
        .collect()
}

/// The join of any two Scott-open filters is a Scott-open filter.
pub fn locally_temperate(l: &FinLattice) -> bool {
    let directed = directed_subsets(l);
    let so: Vec<PointSet> = filters(l)
        .into_iter()
        .filter(|&f| scott_open(l, &directed, f))
        .collect();
    so.iter().all(|&f| {
        so.iter().all(|&g| {
            let j = filter_join(l, f, g);
            is_filter(l, j) && scott_open(l, &directed, j)
        })
    })
}

/// Locally temperate with `{⊤}` Scott-open.
pub fn temperate(l: &FinLattice) -> bool {
    let directed = directed_subsets(l);
    let top = lub(l, elements(l));
    locally_temperate(l) && scott_open(l, &directed, PointSet::singleton(top))
}

/// `u ≪ v` and `u ≪ w` imply `u ≪ v ∧ w`.
pub fn stable(l: &FinLattice) -> bool {
    let directed = directed_subsets(l);
    let m = l.m();
    (0..m).all(|u| {
        (0..m).all(|v| {
            (0..m).all(|w| {
                !(waybelow(l, &directed, u, v) && waybelow(l, &directed, u, w))
                    || waybelow(l, &directed, u, meet(l, v, w))
            })
        })
    })
}

pub fn distributive(l: &FinLattice) -> bool {
    let m = l.m();
    (0..m).all(|a| {
        (0..m).all(|b| {
            (0..m).all(|c| meet(l, a, join(l, b, c)) == join(l, meet(l, a, b), meet(l, a, c)))
        })
    })
}

// ---- lenses ----

pub fn lenses(s: &FinSpace) -> Vec<PointSet> {
    let closed = closed_sets(s);
    let mut out: Vec<PointSet> = subsets(s.n())
        .filter(|&q| is_saturated(s, q))
        .flat_map(|q| closed.iter().map(move |&c| q & c))
        .filter(|l| !l.is_empty())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Conditions (1) to (3), with (3) over every open `U ⊇ Q`.
pub fn is_quasi_lens(s: &FinSpace, q: PointSet, c: PointSet) -> bool {
    is_saturated(s, q)
        && closed_sets(s).contains(&c)
        && q.intersects(c)
        && q.is_subset(saturation(s, q & c))
        && s.opens()
            .iter()
            .filter(|&&u| q.is_subset(u))
            .all(|&u| c.is_subset(closure(s, u & c)))
}

pub fn quasi_lenses(s: &FinSpace) -> Vec<(PointSet, PointSet)> {
    let closed = closed_sets(s);
    let mut out: Vec<(PointSet, PointSet)> = subsets(s.n())
        .filter(|&q| is_saturated(s, q))
        .flat_map(|q| closed.iter().map(move |&c| (q, c)))
        .filter(|&(q, c)| is_quasi_lens(s, q, c))
        .collect();
    out.sort();
    out
}

pub fn tem_leq(s: &FinSpace, l: PointSet, m: PointSet) -> bool {
    saturation(s, m).is_subset(saturation(s, l)) && closure(s, l).is_subset(closure(s, m))
}

pub fn em_leq(s: &FinSpace, l: PointSet, m: PointSet) -> bool {
    saturation(s, m).is_subset(saturation(s, l)) && downset(s, l).is_subset(downset(s, m))
}

/// Specialization order of the Vietoris topology on lenses: `L ≤ M` when
/// every `□U` or `◇U` containing `L` contains `M`.
pub fn vietoris_leq(s: &FinSpace, l: PointSet, m: PointSet) -> bool {
    s.opens()
        .iter()
        .all(|&u| (!l.is_subset(u) || m.is_subset(u)) && (!l.intersects(u) || m.intersects(u)))
}

// ---- sweeps ----

pub fn exhaustive_spaces(max_n: usize) -> Vec<FinSpace> {
    (0..=max_n)
        .flat_map(soberlens::spaces::enumerate::all_spaces)
        .collect()
}
