use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use serde::Serialize;

use super::bits::{PointSet, MAX_POINTS};
use crate::error::{Error, Result};

/// A topology on `{0, .., n-1}`.
///
/// Finite topologies are determined by the smallest open neighbourhood of
/// each point, so that is what is stored. The full list of opens is
/// produced on demand and cached; its length can reach `2^n`.
#[derive(Debug)]
pub struct FinSpace {
    n: usize,
    nbhd: Vec<PointSet>,
    opens: OnceLock<Vec<PointSet>>,
}

impl Clone for FinSpace {
    fn clone(&self) -> Self {
        FinSpace {
            n: self.n,
            nbhd: self.nbhd.clone(),
            opens: self.opens.clone(),
        }
    }
}

impl PartialEq for FinSpace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.nbhd == other.nbhd
    }
}

impl Eq for FinSpace {}

fn check_range(n: usize, set: PointSet) -> Result<()> {
    match set.max() {
        Some(x) if x >= n => Err(Error::PointOutOfRange { point: x, n }),
        _ => Ok(()),
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(Error::TooManyPoints {
            size: n,
            limit: MAX_POINTS,
        })
    } else {
        Ok(())
    }
}

/// Smallest topology on `n` points containing every member of `subbasis`.
///
/// The generated topology has the finite intersections of subbasic sets as
/// a basis, and the least basic set around `x` is the intersection of all
/// subbasic sets containing `x` (the empty intersection being the whole
/// carrier).
pub fn build_space(n: usize, subbasis: &[PointSet]) -> Result<FinSpace> {
    check_size(n)?;
    for &s in subbasis {
        check_range(n, s)?;
    }
    let full = PointSet::full(n);
    let nbhd = (0..n)
        .map(|x| {
            subbasis
                .iter()
                .filter(|s| s.contains(x))
                .fold(full, |acc, &s| acc & s)
        })
        .collect();
    Ok(FinSpace::from_neighbourhoods_unchecked(n, nbhd))
}

impl FinSpace {
    fn from_neighbourhoods_unchecked(n: usize, nbhd: Vec<PointSet>) -> Self {
        FinSpace {
            n,
            nbhd,
            opens: OnceLock::new(),
        }
    }

    /// Validates an explicit open-set family: it must contain `∅` and the
    /// carrier and be closed under binary unions and intersections.
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<FinSpace> {
        check_size(n)?;
        for &u in opens {
            check_range(n, u)?;
        }
        let full = PointSet::full(n);
        let family: BTreeSet<PointSet> = opens.iter().copied().collect();
        if !family.contains(&PointSet::EMPTY) {
            return Err(Error::NotATopology("the empty set is not open".into()));
        }
        if !family.contains(&full) {
            return Err(Error::NotATopology("the whole carrier is not open".into()));
        }
        let index: HashSet<PointSet> = family.iter().copied().collect();
        let list: Vec<PointSet> = family.into_iter().collect();
        for (i, &u) in list.iter().enumerate() {
            for &v in &list[i + 1..] {
                if !index.contains(&(u | v)) {
                    return Err(Error::NotATopology(format!("{u} ∪ {v} is not open")));
                }
                if !index.contains(&(u & v)) {
                    return Err(Error::NotATopology(format!("{u} ∩ {v} is not open")));
                }
            }
        }
        let nbhd = (0..n)
            .map(|x| {
                list.iter()
                    .filter(|u| u.contains(x))
                    .fold(full, |acc, &u| acc & u)
            })
            .collect();
        let space = FinSpace::from_neighbourhoods_unchecked(n, nbhd);
        let _ = space.opens.set(list);
        Ok(space)
    }

    /// One-point space.
    pub fn point() -> FinSpace {
        FinSpace::discrete(1)
    }

    /// The two-point space with opens `∅, {1}, {0,1}`.
    pub fn sierpinski() -> FinSpace {
        build_space(2, &[PointSet::from([1])]).expect("valid subbasis")
    }

    pub fn discrete(n: usize) -> FinSpace {
        let subbasis: Vec<_> = (0..n).map(PointSet::singleton).collect();
        build_space(n, &subbasis).expect("valid subbasis")
    }

    pub fn indiscrete(n: usize) -> FinSpace {
        build_space(n, &[]).expect("valid subbasis")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn neighbourhoods(&self) -> &[PointSet] {
        &self.nbhd
    }

    /// All open sets in increasing bit-pattern order.
    ///
    /// Opens are the unions of minimal neighbourhoods; they are generated
    /// once and cached. Exponential in the worst case.
    pub fn opens(&self) -> &[PointSet] {
        self.opens.get_or_init(|| {
            let mut family: BTreeSet<PointSet> = BTreeSet::from([PointSet::EMPTY]);
            let mut distinct: Vec<PointSet> = self.nbhd.clone();
            distinct.sort();
            distinct.dedup();
            for b in distinct {
                let grown: Vec<PointSet> = family.iter().map(|&u| u | b).collect();
                family.extend(grown);
            }
            family.into_iter().collect()
        })
    }

    /// Complements of the opens, in increasing bit-pattern order.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut closed: Vec<_> = self.opens().iter().map(|u| u.complement(self.n)).collect();
        closed.sort();
        closed
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        a.is_subset(self.full()) && a.iter().all(|x| self.nbhd[x].is_subset(a))
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        a.is_subset(self.full()) && self.is_open(a.complement(self.n))
    }

    /// `↑A` in the specialization preorder; also the least open superset.
    pub fn upset(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, x| acc | self.nbhd[x])
    }

    /// `↓A` in the specialization preorder; also the closure of `A`.
    pub fn downset(&self, a: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&y| self.nbhd[y].intersects(a))
            .collect()
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        self.downset(a)
    }

    pub fn up(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn down(&self, x: usize) -> PointSet {
        self.downset(PointSet::singleton(x))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.nbhd[x].contains(y)
    }

    pub fn check_subset(&self, a: PointSet) -> Result<()> {
        check_range(self.n, a)
    }

    /// Opens containing `a`, in order.
    pub fn open_supersets(&self, a: PointSet) -> impl Iterator<Item = PointSet> + '_ {
        self.opens()
            .iter()
            .copied()
            .filter(move |u| a.is_subset(*u))
    }

    /// Upward-closed sets, i.e. the saturated sets. Equal to [`FinSpace::opens`].
    pub fn saturated_sets(&self) -> &[PointSet] {
        self.opens()
    }
}

/// A reflexive, transitive relation on `{0, .., n-1}`, stored as the
/// up-set of every point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Preorder {
    n: usize,
    up: Vec<PointSet>,
}

impl Preorder {
    /// Builds a preorder from `(x, y)` pairs meaning `x ≤ y`.
    ///
    /// Reflexive pairs are added. With `close = true` the transitive
    /// closure is taken; otherwise a non-transitive input is rejected.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)], close: bool) -> Result<Preorder> {
        check_size(n)?;
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(x, y) in pairs {
            for p in [x, y] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
            }
            up[x].insert(y);
        }
        if close {
            transitive_closure(&mut up);
            Ok(Preorder { n, up })
        } else {
            Preorder::from_upsets(up)
        }
    }

    /// Validates a table of up-sets.
    pub fn from_upsets(up: Vec<PointSet>) -> Result<Preorder> {
        let n = up.len();
        check_size(n)?;
        for (x, &u) in up.iter().enumerate() {
            check_range(n, u)?;
            if !u.contains(x) {
                return Err(Error::NotAPreorder(format!("{x} ≤ {x} is missing")));
            }
            for y in u.iter() {
                if !up[y].is_subset(u) {
                    let z = (up[y] - u).min().unwrap_or_default();
                    return Err(Error::NotAPreorder(format!(
                        "{x} ≤ {y} ≤ {z} but not {x} ≤ {z}"
                    )));
                }
            }
        }
        Ok(Preorder { n, up })
    }

    /// The antichain (equality relation).
    pub fn discrete(n: usize) -> Preorder {
        Preorder {
            n,
            up: (0..n).map(PointSet::singleton).collect(),
        }
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Preorder {
        let full = PointSet::full(n);
        Preorder {
            n,
            up: (0..n).map(|x| full - PointSet::full(x)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn upsets(&self) -> &[PointSet] {
        &self.up
    }

    pub fn down(&self, x: usize) -> PointSet {
        (0..self.n).filter(|&y| self.up[y].contains(x)).collect()
    }

    pub fn is_upward_closed(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.up[x].is_subset(a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| self.up[x].iter().all(|y| y == x || !self.leq(y, x)))
    }

    /// Every `(x, y)` with `x ≤ y`, including reflexive pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| self.up[x].iter().map(move |y| (x, y)))
            .collect()
    }

    /// The preorder with `x ≤' y` iff `y ≤ x`.
    pub fn reversed(&self) -> Preorder {
        Preorder {
            n: self.n,
            up: (0..self.n).map(|x| self.down(x)).collect(),
        }
    }
}

fn transitive_closure(up: &mut [PointSet]) {
    // Warshall on bit rows.
    let n = up.len();
    for k in 0..n {
        let row_k = up[k];
        for row in up.iter_mut() {
            if row.contains(k) {
                *row = *row | row_k;
            }
        }
    }
}

/// `x ≤ y` iff every open neighbourhood of `x` contains `y`.
///
/// The least open neighbourhood of `x` is itself open, so the quantifier
/// over all opens collapses to membership in it.
pub fn specialization_preorder(space: &FinSpace) -> Preorder {
    Preorder {
        n: space.n,
        up: space.nbhd.clone(),
    }
}

/// The space whose opens are the upward-closed sets of `p`.
pub fn alexandroff_space(p: &Preorder) -> FinSpace {
    FinSpace::from_neighbourhoods_unchecked(p.n, p.up.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hulls {
    pub closure: PointSet,
    pub saturation: PointSet,
    pub upset: PointSet,
    pub downset: PointSet,
}

/// Closure and saturation computed from the open family, alongside the
/// order-theoretic up- and down-sets.
pub fn hulls(space: &FinSpace, a: PointSet) -> Result<Hulls> {
    space.check_subset(a)?;
    let full = space.full();
    let closure = space
        .opens()
        .iter()
        .map(|u| u.complement(space.n))
        .filter(|c| a.is_subset(*c))
        .fold(full, |acc, c| acc & c);
    let saturation = space.open_supersets(a).fold(full, |acc, u| acc & u);
    Ok(Hulls {
        closure,
        saturation,
        upset: space.upset(a),
        downset: space.downset(a),
    })
}
