//! Lenses, quasi-lenses and their Vietoris hyperspaces over finite spaces.
//!
//! A lens is a non-empty `Q ∩ C` with `Q` compact saturated and `C` closed.
//! A quasi-lens is a pair `(Q, C)` such that `Q` meets `C`,
//! `Q ⊆ ↑(Q ∩ C)`, and `C ⊆ cl(U ∩ C)` for every open `U ⊇ Q`. The maps
//! `ι(L) = (↑L, cl L)` and `ρ(Q, C) = Q ∩ C` go back and forth.
//!
//! All carriers are listed in increasing bit-pattern order (quasi-lenses by
//! `(q, c)`), and hyperspaces index their points in that order.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spaces::{
    build_space, compact_saturated_sets, specialization_preorder, FinSpace, PointSet, Preorder,
    MAX_POINTS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Lens(pub PointSet);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuasiLens {
    pub q: PointSet,
    pub c: PointSet,
}

impl fmt::Display for Lens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for QuasiLens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.c)
    }
}

/// `L ≠ ∅` and `L = ↑L ∩ cl(L)`.
pub fn is_lens(space: &FinSpace, l: PointSet) -> bool {
    !l.is_empty() && l.is_subset(space.full()) && l == space.upset(l) & space.closure(l)
}

/// The three quasi-lens conditions, with condition (3) checked against
/// every open `U ⊇ Q`. Returns the first failing condition.
pub fn check_quasi_lens(space: &FinSpace, ql: QuasiLens) -> Result<(), String> {
    let QuasiLens { q, c } = ql;
    if !q.is_subset(space.full()) || !c.is_subset(space.full()) {
        return Err(format!("{ql} is not over the {}-point carrier", space.n()));
    }
    if space.upset(q) != q {
        return Err(format!("{q} is not saturated"));
    }
    if !space.is_closed(c) {
        return Err(format!("{c} is not closed"));
    }
    if !q.intersects(c) {
        return Err("condition (1): Q does not meet C".into());
    }
    if !q.is_subset(space.upset(q & c)) {
        return Err("condition (2): Q ⊄ ↑(Q ∩ C)".into());
    }
    if let Some(u) = space
        .open_supersets(q)
        .find(|&u| !c.is_subset(space.closure(u & c)))
    {
        return Err(format!("condition (3) fails for the open U = {u}"));
    }
    Ok(())
}

/// Lenses as `Q ∩ C` over compact saturated `Q` and closed `C`.
///
/// # Panics
///
/// If the result differs from the fixed-point enumeration
/// `{L ≠ ∅ | L = ↑L ∩ cl L}`.
pub fn lenses(space: &FinSpace) -> Vec<Lens> {
    let by_pairs = lenses_by_intersections(space);
    let by_fixed_point = lenses_by_fixed_point(space);
    assert_eq!(
        by_pairs,
        by_fixed_point,
        "lens enumerations disagree on a {}-point space",
        space.n()
    );
    by_pairs
}

pub fn lenses_by_intersections(space: &FinSpace) -> Vec<Lens> {
    let closed = space.closed_sets();
    let found: BTreeSet<PointSet> = compact_saturated_sets(space)
        .iter()
        .flat_map(|&q| closed.iter().map(move |&c| q & c))
        .filter(|l| !l.is_empty())
        .collect();
    found.into_iter().map(Lens).collect()
}

pub fn lenses_by_fixed_point(space: &FinSpace) -> Vec<Lens> {
    space
        .full()
        .subsets()
        .filter(|&l| is_lens(space, l))
        .map(Lens)
        .collect()
}

/// All quasi-lenses, ordered by `(q, c)`.
pub fn quasi_lenses(space: &FinSpace) -> Vec<QuasiLens> {
    let closed = space.closed_sets();
    let mut out: Vec<QuasiLens> = compact_saturated_sets(space)
        .iter()
        .flat_map(|&q| closed.iter().map(move |&c| QuasiLens { q, c }))
        .filter(|&ql| check_quasi_lens(space, ql).is_ok())
        .collect();
    out.sort();
    out
}

/// `ι(L) = (↑L, cl L)`.
pub fn iota(space: &FinSpace, l: Lens) -> Result<QuasiLens> {
    if !is_lens(space, l.0) {
        return Err(Error::NotALens(format!("{l} is not a lens")));
    }
    Ok(QuasiLens {
        q: space.upset(l.0),
        c: space.closure(l.0),
    })
}

/// `ρ(Q, C) = Q ∩ C`.
pub fn rho(space: &FinSpace, ql: QuasiLens) -> Result<Lens> {
    check_quasi_lens(space, ql).map_err(Error::NotAQuasiLens)?;
    Ok(Lens(ql.q & ql.c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperspaceKind {
    LensVietoris,
    QuasiVietoris,
}

/// A hyperspace and the carrier it indexes.
#[derive(Debug, Clone)]
pub struct Hyperspace {
    pub space: FinSpace,
    pub lenses: Vec<Lens>,
    pub quasi_lenses: Vec<QuasiLens>,
    /// `(□U, ◇U)` for the `i`-th open `U` of the base space.
    pub subbasis: Vec<(PointSet, PointSet)>,
}

fn check_carrier(size: usize) -> Result<()> {
    if size > MAX_POINTS {
        Err(Error::TooManyPoints {
            size,
            limit: MAX_POINTS,
        })
    } else {
        Ok(())
    }
}

fn index_set<T>(items: &[T], pred: impl Fn(&T) -> bool) -> PointSet {
    items
        .iter()
        .enumerate()
        .filter(|(_, t)| pred(t))
        .map(|(i, _)| i)
        .collect()
}

/// Topology generated by `□U` and `◇U` over every open `U` of the base.
///
/// For lenses `□U` holds the lenses inside `U` and `◇U` those meeting `U`;
/// for quasi-lenses `□U` asks `Q ⊆ U` and `◇U` asks `C` to meet `U`.
pub fn hyperspace(space: &FinSpace, kind: HyperspaceKind) -> Result<Hyperspace> {
    let opens = space.opens();
    match kind {
        HyperspaceKind::LensVietoris => {
            let ls = lenses(space);
            check_carrier(ls.len())?;
            let subbasis: Vec<(PointSet, PointSet)> = opens
                .iter()
                .map(|&u| {
                    (
                        index_set(&ls, |l| l.0.is_subset(u)),
                        index_set(&ls, |l| l.0.intersects(u)),
                    )
                })
                .collect();
            let flat: Vec<PointSet> = subbasis.iter().flat_map(|&(b, d)| [b, d]).collect();
            Ok(Hyperspace {
                space: build_space(ls.len(), &flat)?,
                lenses: ls,
                quasi_lenses: Vec::new(),
                subbasis,
            })
        }
        HyperspaceKind::QuasiVietoris => {
            let qs = quasi_lenses(space);
            check_carrier(qs.len())?;
            let subbasis: Vec<(PointSet, PointSet)> = opens
                .iter()
                .map(|&u| {
                    (
                        index_set(&qs, |ql| ql.q.is_subset(u)),
                        index_set(&qs, |ql| ql.c.intersects(u)),
                    )
                })
                .collect();
            let flat: Vec<PointSet> = subbasis.iter().flat_map(|&(b, d)| [b, d]).collect();
            Ok(Hyperspace {
                space: build_space(qs.len(), &flat)?,
                lenses: Vec::new(),
                quasi_lenses: qs,
                subbasis,
            })
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HyperspaceReport {
    pub lens_count: usize,
    pub quasi_lens_count: usize,
    pub iota_injective: Option<bool>,
    pub iota_surjective: Option<bool>,
    /// `ι⁻¹(□^q U) = □U` and `ι⁻¹(◇^q U) = ◇U` for every open `U`.
    pub iota_preimages_match: Option<bool>,
    pub iota_homeomorphism: Option<bool>,
    /// `ρ ∘ ι = id` and `ι ∘ ρ = id`.
    pub round_trips: Option<bool>,
    pub tem_equals_em: Option<bool>,
    pub tem_equals_vietoris_specialization: Option<bool>,
    pub all_downsets_closed: Option<bool>,
    pub witnesses: Vec<String>,
}

/// `L ⊑TEM L'` iff `↑L ⊇ ↑L'` and `cl L ⊆ cl L'`.
pub fn tem_leq(space: &FinSpace, l: Lens, m: Lens) -> bool {
    space.upset(m.0).is_subset(space.upset(l.0)) && space.closure(l.0).is_subset(space.closure(m.0))
}

/// `L ⊑EM L'` iff `↑L ⊇ ↑L'` and `↓L ⊆ ↓L'`.
pub fn em_leq(space: &FinSpace, l: Lens, m: Lens) -> bool {
    let down =
        |a: PointSet| -> PointSet { a.iter().fold(PointSet::EMPTY, |acc, x| acc | space.down(x)) };
    space.upset(m.0).is_subset(space.upset(l.0)) && down(l.0).is_subset(down(m.0))
}

/// `⊑TEM` as a preorder over `lenses(space)` indices.
pub fn tem_preorder(space: &FinSpace, ls: &[Lens]) -> Result<Preorder> {
    let up = ls
        .iter()
        .map(|&l| index_set(ls, |&m| tem_leq(space, l, m)))
        .collect();
    Preorder::from_upsets(up)
}

/// Compares `⊑TEM`, `⊑EM` and the specialization preorder of the lens
/// hyperspace, and checks that `↓L` is closed for every lens.
pub fn order_report(space: &FinSpace) -> Result<HyperspaceReport> {
    let hyper = hyperspace(space, HyperspaceKind::LensVietoris)?;
    let ls = &hyper.lenses;
    let mut report = HyperspaceReport {
        lens_count: ls.len(),
        quasi_lens_count: quasi_lenses(space).len(),
        ..Default::default()
    };
    let vietoris = specialization_preorder(&hyper.space);
    let mut tem_em = true;
    let mut tem_vietoris = true;
    for (i, &l) in ls.iter().enumerate() {
        for (j, &m) in ls.iter().enumerate() {
            let tem = tem_leq(space, l, m);
            if tem != em_leq(space, l, m) {
                tem_em = false;
                report
                    .witnesses
                    .push(format!("TEM and EM disagree on ({l}, {m})"));
            }
            if tem != vietoris.leq(i, j) {
                tem_vietoris = false;
                report.witnesses.push(format!(
                    "TEM and Vietoris specialization disagree on ({l}, {m})"
                ));
            }
        }
    }
    let mut downsets_closed = true;
    for &l in ls {
        let down =
            l.0.iter()
                .fold(PointSet::EMPTY, |acc, x| acc | space.down(x));
        if !space.is_closed(down) {
            downsets_closed = false;
            report.witnesses.push(format!("↓{l} is not closed"));
        }
    }
    report.tem_equals_em = Some(tem_em);
    report.tem_equals_vietoris_specialization = Some(tem_vietoris);
    report.all_downsets_closed = Some(downsets_closed);
    Ok(report)
}

/// Checks that `ι` is injective, transports the subbasic opens, and is a
/// homeomorphism with inverse `ρ`.
pub fn check_embedding(space: &FinSpace) -> Result<HyperspaceReport> {
    let lh = hyperspace(space, HyperspaceKind::LensVietoris)?;
    let qh = hyperspace(space, HyperspaceKind::QuasiVietoris)?;
    let ls = &lh.lenses;
    let qs = &qh.quasi_lenses;
    let mut report = HyperspaceReport {
        lens_count: ls.len(),
        quasi_lens_count: qs.len(),
        ..Default::default()
    };

    let image: Vec<QuasiLens> = ls.iter().map(|&l| iota(space, l)).collect::<Result<_>>()?;
    let image_idx: Vec<Option<usize>> = image.iter().map(|ql| qs.binary_search(ql).ok()).collect();
    let distinct: BTreeSet<QuasiLens> = image.iter().copied().collect();
    let injective = distinct.len() == image.len();
    let surjective = image_idx.iter().all(Option::is_some) && distinct.len() == qs.len();
    if !surjective {
        for ql in qs.iter().filter(|ql| !distinct.contains(ql)) {
            report
                .witnesses
                .push(format!("{ql} is not in the image of ι"));
        }
    }

    let mut preimages = true;
    for (k, (&(lbox, ldia), &(qbox, qdia))) in lh.subbasis.iter().zip(&qh.subbasis).enumerate() {
        let pull = |target: PointSet| -> PointSet {
            (0..ls.len())
                .filter(|&i| image_idx[i].is_some_and(|j| target.contains(j)))
                .collect()
        };
        if pull(qbox) != lbox || pull(qdia) != ldia {
            preimages = false;
            report.witnesses.push(format!(
                "subbasic preimages differ for the open {}",
                space.opens()[k]
            ));
        }
    }

    let mut round_trips = true;
    for &l in ls {
        if rho(space, iota(space, l)?)? != l {
            round_trips = false;
            report.witnesses.push(format!("ρ(ι({l})) ≠ {l}"));
        }
    }
    for &ql in qs {
        if iota(space, rho(space, ql)?)? != ql {
            round_trips = false;
            report.witnesses.push(format!("ι(ρ({ql})) ≠ {ql}"));
        }
    }

    // Finite topologies are determined by their specialization preorders,
    // so a bijection is a homeomorphism iff it preserves and reflects ≤.
    let homeomorphism = injective
        && surjective
        && (0..ls.len()).all(|i| {
            (0..ls.len()).all(|j| {
                let (a, b) = (image_idx[i].unwrap(), image_idx[j].unwrap());
                lh.space.leq(i, j) == qh.space.leq(a, b)
            })
        });

    report.iota_injective = Some(injective);
    report.iota_surjective = Some(surjective);
    report.iota_preimages_match = Some(preimages);
    report.iota_homeomorphism = Some(homeomorphism);
    report.round_trips = Some(round_trips);
    Ok(report)
}

/// A pair `(Q, C)` for which the lemma's hypothesis holds but not its
/// conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub q: PointSet,
    pub c: PointSet,
}

/// For every compact saturated `Q` (including `∅`) and closed `C`: if
/// `C ⊆ cl(U ∩ C)` for every open `U ⊇ Q`, then `C ⊆ cl(Q ∩ C)`.
///
/// `Q = ∅` is quantified literally: `U = ∅` is then an open neighbourhood,
/// so the hypothesis forces `C = ∅` and the conclusion holds.
pub fn lemma_hypothesis_check(space: &FinSpace) -> Result<(), LemmaViolation> {
    let closed = space.closed_sets();
    for &q in &compact_saturated_sets(space) {
        for &c in &closed {
            let hypothesis = space
                .open_supersets(q)
                .all(|u| c.is_subset(space.closure(u & c)));
            if hypothesis && !c.is_subset(space.closure(q & c)) {
                return Err(LemmaViolation { q, c });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(xs: [usize; N]) -> PointSet {
        PointSet::from(xs)
    }

    #[test]
    fn sierpinski_lenses() {
        let s = FinSpace::sierpinski();
        assert_eq!(
            lenses(&s),
            vec![Lens(set([0])), Lens(set([1])), Lens(set([0, 1]))]
        );
        assert_eq!(
            quasi_lenses(&s),
            vec![
                QuasiLens {
                    q: set([1]),
                    c: set([0, 1])
                },
                QuasiLens {
                    q: set([0, 1]),
                    c: set([0])
                },
                QuasiLens {
                    q: set([0, 1]),
                    c: set([0, 1])
                },
            ]
        );
    }

    #[test]
    fn discrete_lenses_are_nonempty_subsets() {
        let d = FinSpace::discrete(2);
        assert_eq!(lenses(&d).len(), 3);
        let qs = quasi_lenses(&d);
        assert_eq!(qs.len(), 3);
        assert!(qs.iter().all(|ql| ql.q == ql.c));
    }

    #[test]
    fn one_point() {
        let p = FinSpace::point();
        assert_eq!(lenses(&p), vec![Lens(set([0]))]);
        assert_eq!(
            quasi_lenses(&p),
            vec![QuasiLens {
                q: set([0]),
                c: set([0])
            }]
        );
        let h = hyperspace(&p, HyperspaceKind::LensVietoris).unwrap();
        assert_eq!(h.space.n(), 1);
        let h = hyperspace(&p, HyperspaceKind::QuasiVietoris).unwrap();
        assert_eq!(h.space.n(), 1);
        assert_eq!(check_embedding(&p).unwrap().iota_homeomorphism, Some(true));
    }

    #[test]
    fn iota_rho_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(
            iota(&s, Lens(set([1]))).unwrap(),
            QuasiLens {
                q: set([1]),
                c: set([0, 1])
            }
        );
        assert_eq!(
            rho(
                &s,
                QuasiLens {
                    q: set([0, 1]),
                    c: set([0])
                }
            )
            .unwrap(),
            Lens(set([0]))
        );
        assert!(iota(&s, Lens(PointSet::EMPTY)).is_err());
        assert!(rho(
            &s,
            QuasiLens {
                q: set([1]),
                c: set([0])
            }
        )
        .is_err());
    }

    #[test]
    fn sierpinski_vietoris_subbasis() {
        let s = FinSpace::sierpinski();
        let h = hyperspace(&s, HyperspaceKind::LensVietoris).unwrap();
        assert_eq!(h.space.n(), 3);
        // Open {1} is the second open; lens {1} has index 1.
        let (bx, dia) = h.subbasis[1];
        assert_eq!(bx, set([1]));
        assert_eq!(dia, set([1, 2]));
    }

    #[test]
    fn sierpinski_orders_and_embedding() {
        let s = FinSpace::sierpinski();
        assert!(tem_leq(&s, Lens(set([0])), Lens(set([0, 1]))));
        assert!(em_leq(&s, Lens(set([0])), Lens(set([0, 1]))));
        let r = order_report(&s).unwrap();
        assert_eq!(r.tem_equals_em, Some(true));
        assert_eq!(r.tem_equals_vietoris_specialization, Some(true));
        let e = check_embedding(&s).unwrap();
        assert_eq!(e.iota_homeomorphism, Some(true));
        assert_eq!((e.lens_count, e.quasi_lens_count), (3, 3));
    }

    #[test]
    fn lemma_on_sierpinski() {
        let s = FinSpace::sierpinski();
        assert!(lemma_hypothesis_check(&s).is_ok());
        let (q, c) = (set([1]), set([0, 1]));
        assert!(s.open_supersets(q).all(|u| c.is_subset(s.closure(u & c))));
        assert!(c.is_subset(s.closure(q & c)));
    }
}
