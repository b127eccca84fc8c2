//! Decision procedures for space-level properties of finite spaces.
//!
//! Most quantifiers range over the open sets of the space. Where an
//! existential ranges over open neighbourhoods of a set `A`, it is enough to
//! test the least one (`↑A`): it is open, and shrinking `U` or `V` only
//! makes `U ∩ V ⊆ W` easier to satisfy. Families that are filtered or
//! directed have a least (resp. greatest) member once they are finite; where
//! the number of candidate families is small they are still enumerated
//! outright.

use serde::Serialize;

use super::bits::PointSet;
use super::space::FinSpace;
use crate::error::{Error, Result};

/// Largest carrier accepted by [`property_report`].
pub const PROPERTY_LIMIT: usize = 16;

/// Up to this many candidate sets, filtered families are enumerated
/// exhaustively (`2^k` families).
const EXHAUSTIVE_FAMILY_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompactnessMethod {
    OpenCover,
    FilteredClosed,
}

/// Compactness of a subset, shared between finite and symbolic spaces.
pub trait CompactnessOracle {
    type Set;

    fn is_compact(&self, a: &Self::Set, method: CompactnessMethod) -> Result<bool>;
}

/// The ultrafilter `{A | base_point ∈ A}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrincipalUltrafilter {
    pub base_point: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleClosed {
    pub set: PointSet,
    /// Points `x` with `↓x = set`. Sobriety asks for exactly one.
    pub generic_points: PointSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SpaceProperties {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub compact: bool,
    pub noetherian: bool,
    pub locally_compact: bool,
    pub core_compact: bool,
    pub sober: bool,
    pub well_filtered: bool,
    pub monotone_convergence: bool,
    pub coherent: bool,
    pub weakly_coherent: bool,
    pub weakly_hausdorff: bool,
    pub locally_strongly_sober: bool,
    pub stably_locally_compact: bool,
    /// Read as "locally strongly sober and compact"; the term has no
    /// definition to check against.
    pub strongly_sober_presumptive: bool,
}

/// Non-empty closed sets `C` such that whenever `C` meets two opens it
/// meets their intersection.
///
/// If `C` meets `U` at `x` and `V` at `y` then it also meets `↑x` and `↑y`,
/// which are open and smaller, so only pairs of minimal neighbourhoods of
/// points of `C` are tested.
pub fn irreducible_closed_sets(space: &FinSpace) -> Vec<IrreducibleClosed> {
    space
        .closed_sets()
        .into_iter()
        .filter(|c| !c.is_empty())
        .filter(|&c| {
            c.iter()
                .all(|x| c.iter().all(|y| (space.up(x) & space.up(y)).intersects(c)))
        })
        .map(|c| IrreducibleClosed {
            set: c,
            generic_points: generic_points(space, c),
        })
        .collect()
}

/// `{x | ↓x = c}`.
pub fn generic_points(space: &FinSpace, c: PointSet) -> PointSet {
    c.iter().filter(|&x| space.down(x) == c).collect()
}

impl CompactnessOracle for FinSpace {
    type Set = PointSet;

    fn is_compact(&self, a: &PointSet, method: CompactnessMethod) -> Result<bool> {
        self.check_subset(*a)?;
        Ok(match method {
            CompactnessMethod::OpenCover => compact_by_open_cover(self, *a),
            CompactnessMethod::FilteredClosed => {
                compact_by_filtered_closed(&FilteredFamilies::new(&self.closed_sets()), *a)
            }
        })
    }
}

pub fn is_compact(space: &FinSpace, a: PointSet, method: CompactnessMethod) -> Result<bool> {
    space.is_compact(&a, method)
}

/// Every open cover of `A` is refined by the cover `{↑x | x ∈ A}`: any
/// member containing `x` contains `↑x`. A finite subcover of the refinement
/// therefore lifts to one of the original cover, member for member.
fn compact_by_open_cover(space: &FinSpace, a: PointSet) -> bool {
    let mut covered = PointSet::EMPTY;
    let mut chosen = 0usize;
    let mut remaining = a;
    while let Some(x) = remaining.min() {
        let u = space.up(x);
        covered = covered | u;
        chosen += 1;
        remaining = a - covered;
    }
    a.is_subset(covered) && chosen <= a.len()
}

/// Filtered families drawn from a list of sets: either every family
/// (small lists) or the principal ones `{S' | S ⊆ S'}`, which contain every
/// finite filtered family's least member.
struct FilteredFamilies {
    /// `(intersection, members)` per family.
    families: Vec<(PointSet, Vec<PointSet>)>,
}

impl FilteredFamilies {
    fn new(sets: &[PointSet]) -> Self {
        let families = if sets.len() <= EXHAUSTIVE_FAMILY_LIMIT {
            let k = sets.len();
            (1u32..(1u32 << k))
                .filter_map(|mask| {
                    let members: Vec<PointSet> = (0..k)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| sets[i])
                        .collect();
                    let filtered = members.iter().all(|&s| {
                        members
                            .iter()
                            .all(|&t| members.iter().any(|&r| r.is_subset(s & t)))
                    });
                    filtered.then(|| {
                        let meet = members.iter().fold(!PointSet::EMPTY, |acc, &s| acc & s);
                        (meet, members)
                    })
                })
                .collect()
        } else {
            // A finite filtered family contains a lower bound of all its
            // members, hence its own intersection; only that member matters.
            sets.iter().map(|&s| (s, vec![s])).collect()
        };
        FilteredFamilies { families }
    }
}

fn compact_by_filtered_closed(families: &FilteredFamilies, a: PointSet) -> bool {
    families
        .families
        .iter()
        .all(|(meet, members)| a.intersects(*meet) || members.iter().any(|c| !a.intersects(*c)))
}

fn check_ultrafilter(space: &FinSpace, u: PrincipalUltrafilter) -> Result<usize> {
    let b = u.base_point;
    if b >= space.n() {
        return Err(Error::PointOutOfRange {
            point: b,
            n: space.n(),
        });
    }
    if space.n() > PROPERTY_LIMIT {
        return Err(Error::TooManyPoints {
            size: space.n(),
            limit: PROPERTY_LIMIT,
        });
    }
    Ok(b)
}

/// `lim 𝒰`: points every open neighbourhood of which lies in `𝒰`, that is
/// contains the base point.
pub fn ultrafilter_limits_by_definition(
    space: &FinSpace,
    u: PrincipalUltrafilter,
) -> Result<PointSet> {
    let b = check_ultrafilter(space, u)?;
    Ok((0..space.n())
        .filter(|&x| {
            space
                .opens()
                .iter()
                .filter(|o| o.contains(x))
                .all(|o| o.contains(b))
        })
        .collect())
}

/// `lim 𝒰 = ⋂_{A ∈ 𝒰} cl(A)`, over every member of the ultrafilter.
pub fn ultrafilter_limits_by_closures(
    space: &FinSpace,
    u: PrincipalUltrafilter,
) -> Result<PointSet> {
    let b = check_ultrafilter(space, u)?;
    let base = PointSet::singleton(b);
    let rest = space.full() - base;
    Ok(rest
        .subsets()
        .map(|s| space.closure(s | base))
        .fold(space.full(), |acc, c| acc & c))
}

/// `lim 𝒰` computed both ways.
///
/// # Panics
///
/// If the two computations disagree, which would be a bug.
pub fn ultrafilter_limits(space: &FinSpace, u: PrincipalUltrafilter) -> Result<PointSet> {
    let definitional = ultrafilter_limits_by_definition(space, u)?;
    let by_closures = ultrafilter_limits_by_closures(space, u)?;
    assert_eq!(
        definitional, by_closures,
        "limit set of the ultrafilter at {}: definition and closure formula disagree",
        u.base_point
    );
    Ok(definitional)
}

/// Definition of weak Hausdorffness on point pairs: every open `W ⊇ ↑x ∩ ↑y`
/// contains `U ∩ V` for some opens `U ∋ x`, `V ∋ y`.
pub fn weakly_hausdorff_pointwise(space: &FinSpace) -> bool {
    let n = space.n();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let meet = space.up(x) & space.up(y);
            // Least candidates are U = ↑x and V = ↑y.
            let best = space.up(x) & space.up(y);
            space.open_supersets(meet).all(|w| best.is_subset(w))
        })
    })
}

/// The same property on pairs of compact saturated sets: every open
/// `W ⊇ Q1 ∩ Q2` contains `U ∩ V` for opens `U ⊇ Q1`, `V ⊇ Q2`.
///
/// The least such `W` is `↑(Q1 ∩ Q2)`; a pair `U, V` that fits inside it
/// fits inside every larger `W`.
pub fn weakly_hausdorff_compact_pairs(space: &FinSpace) -> bool {
    let cs = compact_saturated_sets(space);
    cs.iter().enumerate().all(|(i, &q1)| {
        cs[i..].iter().all(|&q2| {
            let w = space.upset(q1 & q2);
            (space.upset(q1) & space.upset(q2)).is_subset(w)
        })
    })
}

/// Upward-closed sets that pass the compactness check.
pub fn compact_saturated_sets(space: &FinSpace) -> Vec<PointSet> {
    space
        .saturated_sets()
        .iter()
        .copied()
        .filter(|&q| compact_by_open_cover(space, q))
        .collect()
}

/// Whether both compactness methods agree on every subset.
pub fn compactness_methods_agree(space: &FinSpace) -> Option<PointSet> {
    let families = FilteredFamilies::new(&space.closed_sets());
    space
        .full()
        .subsets()
        .find(|&a| compact_by_open_cover(space, a) != compact_by_filtered_closed(&families, a))
}

fn is_directed(space: &FinSpace, d: PointSet) -> bool {
    !d.is_empty()
        && d.iter()
            .all(|x| d.iter().all(|y| (space.up(x) & space.up(y)).intersects(d)))
}

/// Least upper bound of `d` in the specialization order, if unique.
fn supremum(space: &FinSpace, d: PointSet) -> Option<usize> {
    let upper: PointSet = d.iter().fold(space.full(), |acc, x| acc & space.up(x));
    let least: Vec<usize> = upper
        .iter()
        .filter(|&s| upper.is_subset(space.up(s)))
        .collect();
    match least.as_slice() {
        [s] => Some(*s),
        _ => None,
    }
}

fn is_t0(space: &FinSpace) -> bool {
    let n = space.n();
    (0..n).all(|x| (0..n).all(|y| x == y || !(space.leq(x, y) && space.leq(y, x))))
}

fn monotone_convergence(space: &FinSpace) -> bool {
    if !is_t0(space) {
        return false;
    }
    space
        .full()
        .subsets()
        .filter(|&d| is_directed(space, d))
        .all(|d| match supremum(space, d) {
            None => false,
            Some(s) => space
                .opens()
                .iter()
                .filter(|u| u.contains(s))
                .all(|u| u.intersects(d)),
        })
}

fn well_filtered(space: &FinSpace, compact_saturated: &[PointSet]) -> bool {
    let families = FilteredFamilies::new(compact_saturated);
    families.families.iter().all(|(meet, members)| {
        space
            .open_supersets(*meet)
            .all(|u| members.iter().any(|q| q.is_subset(u)))
    })
}

/// Continuity of the open-set lattice: every open is the directed union of
/// the opens way below it. In a finite lattice a directed family contains
/// its union, so `U ≪ V` iff `U ⊆ V`.
fn core_compact(space: &FinSpace) -> bool {
    let opens = space.opens();
    opens.iter().all(|&v| {
        let below: Vec<PointSet> = opens
            .iter()
            .copied()
            .filter(|&u| space.open_supersets(v).all(|w| u.is_subset(w)))
            .collect();
        let directed = below.iter().all(|&a| {
            below
                .iter()
                .all(|&b| below.iter().any(|&c| (a | b).is_subset(c)))
        });
        let union = below.iter().fold(PointSet::EMPTY, |acc, &u| acc | u);
        !below.is_empty() && directed && union == v
    })
}

fn locally_strongly_sober(space: &FinSpace) -> Result<bool> {
    for b in 0..space.n() {
        let lim = ultrafilter_limits(space, PrincipalUltrafilter { base_point: b })?;
        if !lim.is_empty() && generic_points(space, lim).len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every property flag, each decided over the finite structure.
///
/// # Panics
///
/// If either pair of dual computations (weak Hausdorffness, ultrafilter
/// limits) disagrees.
pub fn property_report(space: &FinSpace) -> Result<SpaceProperties> {
    let n = space.n();
    if n > PROPERTY_LIMIT {
        return Err(Error::TooManyPoints {
            size: n,
            limit: PROPERTY_LIMIT,
        });
    }
    let t0 = is_t0(space);
    let t1 = (0..n).all(|x| space.is_closed(PointSet::singleton(x)));
    let hausdorff = (0..n).all(|x| (0..n).all(|y| x == y || !space.up(x).intersects(space.up(y))));
    let compact = compact_by_open_cover(space, space.full());
    let noetherian = space
        .full()
        .subsets()
        .all(|a| compact_by_open_cover(space, a));
    let locally_compact = (0..n).all(|x| {
        let base = space.up(x);
        compact_by_open_cover(space, base)
            && space
                .opens()
                .iter()
                .filter(|u| u.contains(x))
                .all(|u| base.is_subset(*u))
    });
    let sober = irreducible_closed_sets(space)
        .iter()
        .all(|c| c.generic_points.len() == 1);
    let cs = compact_saturated_sets(space);
    let coherent = cs
        .iter()
        .all(|&q1| cs.iter().all(|&q2| compact_by_open_cover(space, q1 & q2)));
    let weakly_coherent =
        (0..n).all(|x| (0..n).all(|y| compact_by_open_cover(space, space.up(x) & space.up(y))));
    let weakly_hausdorff = weakly_hausdorff_pointwise(space);
    assert_eq!(
        weakly_hausdorff,
        weakly_hausdorff_compact_pairs(space),
        "weak Hausdorffness: point-pair and compact-pair characterizations disagree"
    );
    let locally_strongly_sober = locally_strongly_sober(space)?;
    Ok(SpaceProperties {
        t0,
        t1,
        hausdorff,
        compact,
        noetherian,
        locally_compact,
        core_compact: core_compact(space),
        sober,
        well_filtered: well_filtered(space, &cs),
        monotone_convergence: monotone_convergence(space),
        coherent,
        weakly_coherent,
        weakly_hausdorff,
        locally_strongly_sober,
        stably_locally_compact: locally_compact && coherent && sober,
        strongly_sober_presumptive: locally_strongly_sober && compact,
    })
}
