//! Filters on finite lattices, their joins, temperance and the way-below
//! relation.
//!
//! Quantifiers over directed families use the principal families `↓d`.
//! A finite directed family contains its own supremum `d` and sits inside
//! `↓d`, so a property of the form "if `⋁D` is in `S` then some member of
//! `D` is in `S`" (or "above `u`") holds for every directed `D` exactly when
//! it holds for every `↓d`.

use serde::Serialize;

use super::lattice::{frame_report, ElemSet, FinLattice};
use crate::error::{Error, Result};
use crate::spaces::{FinSpace, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterKind {
    All,
    ScottOpen,
    CompletelyPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Filter {
    pub members: ElemSet,
    pub proper: bool,
    pub scott_open: bool,
    pub completely_prime: bool,
}

impl Filter {
    /// Validates `members` as a filter and computes its flags.
    pub fn new(l: &FinLattice, members: ElemSet) -> Result<Filter> {
        check_filter(l, members).map_err(Error::NotAFilter)?;
        Ok(Filter {
            members,
            proper: members != l.elements(),
            scott_open: is_scott_open(l, members),
            completely_prime: is_completely_prime(l, members),
        })
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

/// Non-empty, upward closed, closed under binary meets.
pub fn check_filter(l: &FinLattice, s: ElemSet) -> Result<(), String> {
    if !s.is_subset(l.elements()) {
        return Err(format!(
            "{s} is not a subset of the {}-element carrier",
            l.m()
        ));
    }
    if s.is_empty() {
        return Err("filters are non-empty".into());
    }
    for a in s.iter() {
        if !l.up(a).is_subset(s) {
            let b = (l.up(a) - s).min().unwrap_or_default();
            return Err(format!("{s} contains {a} but not {b} ≥ {a}"));
        }
        for b in s.iter() {
            if !s.contains(l.meet(a, b)) {
                return Err(format!("{s} contains {a} and {b} but not their meet"));
            }
        }
    }
    Ok(())
}

/// Upward closed, and whenever a directed family has its supremum in `s`
/// some member is already in `s`.
pub fn is_scott_open(l: &FinLattice, s: ElemSet) -> bool {
    l.is_upward_closed(s) && (0..l.m()).all(|d| !s.contains(d) || (l.down(d) & s).intersects(s))
}

/// `⋁ uᵢ ∈ Φ` implies some `uᵢ ∈ Φ`, for every family. On a finite lattice
/// every family's join is a finite join, so the empty family (`⊥ ∉ Φ`) and
/// binary joins cover all cases.
pub fn is_completely_prime(l: &FinLattice, s: ElemSet) -> bool {
    !s.contains(l.bottom())
        && (0..l.m()).all(|a| {
            (0..l.m()).all(|b| !s.contains(l.join(a, b)) || s.contains(a) || s.contains(b))
        })
}

/// Filters of the requested kind, ordered by member bit pattern.
///
/// A filter on a finite lattice contains the meet of its members and is
/// therefore `↑a` for some `a`; the candidates are the principal up-sets.
pub fn filters_of(l: &FinLattice, kind: FilterKind) -> Vec<Filter> {
    let mut all: Vec<Filter> = (0..l.m())
        .map(|a| Filter::new(l, l.up(a)).expect("principal up-sets are filters"))
        .collect();
    all.sort();
    all.dedup();
    match kind {
        FilterKind::All => all,
        FilterKind::ScottOpen => all.into_iter().filter(|f| f.scott_open).collect(),
        FilterKind::CompletelyPrime => all.into_iter().filter(|f| f.completely_prime).collect(),
    }
}

/// `F ∨ G = {u ∧ v | u ∈ F, v ∈ G}`.
///
/// On a distributive lattice this is the least filter containing both. On
/// other lattices the set may fail to be upward closed, which is reported
/// as an error.
pub fn filter_join(l: &FinLattice, f: &Filter, g: &Filter) -> Result<Filter> {
    for x in [f, g] {
        check_filter(l, x.members).map_err(Error::NotAFilter)?;
    }
    let members: ElemSet = f
        .members
        .iter()
        .flat_map(|u| g.members.iter().map(move |v| l.meet(u, v)))
        .collect();
    Filter::new(l, members).map_err(|e| match e {
        Error::NotAFilter(why) => Error::NotAFilter(format!(
            "join of {} and {} is not a filter: {why}",
            f.members, g.members
        )),
        other => other,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TemperanceReport {
    pub locally_temperate: bool,
    pub temperate: bool,
    /// False means the frame law failed; the quantifiers still ran.
    pub is_frame: bool,
    /// Scott-open filters whose join is not a Scott-open filter.
    pub failing_pair: Option<(ElemSet, ElemSet)>,
}

/// "Weakly temperate" is read as locally temperate.
pub const WEAKLY_TEMPERATE_NOTE: &str =
    "weakly temperate is reported as locally temperate (the weaker term is not separately defined)";

pub fn temperance_report(l: &FinLattice) -> TemperanceReport {
    let scott = filters_of(l, FilterKind::ScottOpen);
    let failing_pair = scott
        .iter()
        .flat_map(|f| scott.iter().map(move |g| (f, g)))
        .find(|(f, g)| match filter_join(l, f, g) {
            Ok(j) => !j.scott_open,
            Err(_) => true,
        })
        .map(|(f, g)| (f.members, g.members));
    let locally_temperate = failing_pair.is_none();
    let top_scott_open = is_scott_open(l, ElemSet::singleton(l.top()));
    TemperanceReport {
        locally_temperate,
        temperate: locally_temperate && top_scott_open,
        is_frame: frame_report(l).is_frame,
        failing_pair,
    }
}

/// Local temperance of `O X` computed on the opens themselves, for frames
/// with more elements than [`FinLattice`] holds.
///
/// Filters of a finite lattice are principal and every up-set is
/// Scott-open, so the check is that `↑U ∨ ↑V = ↑(U ∩ V)`: every open
/// `W ⊇ U ∩ V` is exhibited as `(U ∪ W) ∩ (V ∪ W)`. Returns the first pair
/// for which that fails.
pub fn opens_join_failure(space: &FinSpace) -> Option<(PointSet, PointSet)> {
    let opens = space.opens();
    opens.iter().enumerate().find_map(|(i, &u)| {
        opens[i..]
            .iter()
            .find(|&&v| {
                let m = u & v;
                !space.is_open(m)
                    || space.open_supersets(m).any(|w| {
                        let (a, b) = (u | w, v | w);
                        !(space.is_open(a) && space.is_open(b) && a & b == w)
                    })
            })
            .map(|&v| (u, v))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WayBelowReport {
    /// Row `u` is `↟u = {v | u ≪ v}`.
    pub waybelow: Vec<ElemSet>,
    pub continuous: bool,
    pub stable: bool,
    /// `≪` coincides with `≤`.
    pub equals_order: bool,
    pub locally_temperate: bool,
    /// For continuous frames: `stable == locally_temperate`. `None` when
    /// the lattice is not a continuous frame.
    pub stable_iff_locally_temperate: Option<bool>,
}

/// `u ≪ v`: every directed family whose supremum is above `v` has a
/// member above `u`.
pub fn waybelow(l: &FinLattice, u: usize, v: usize) -> bool {
    // Principal families ↓d with d ≥ v; the member of ↓d above u, if any,
    // can be taken to be d itself.
    l.up(v)
        .iter()
        .all(|d| l.down(d).iter().any(|e| l.leq(u, e)))
}

pub fn waybelow_and_stability(l: &FinLattice) -> WayBelowReport {
    let m = l.m();
    let rows: Vec<ElemSet> = (0..m)
        .map(|u| (0..m).filter(|&v| waybelow(l, u, v)).collect())
        .collect();
    let wb = |u: usize, v: usize| rows[u].contains(v);
    let equals_order = (0..m).all(|u| rows[u] == l.up(u));
    let continuous = (0..m).all(|v| {
        let below: ElemSet = (0..m).filter(|&u| wb(u, v)).collect();
        let directed = !below.is_empty()
            && below.iter().all(|a| {
                below
                    .iter()
                    .all(|b| below.iter().any(|c| l.leq(a, c) && l.leq(b, c)))
            });
        directed && l.join_all(below) == v
    });
    let stable = (0..m).all(|u| {
        rows[u]
            .iter()
            .all(|v| rows[u].iter().all(|w| wb(u, l.meet(v, w))))
    });
    let temperance = temperance_report(l);
    let stable_iff_locally_temperate =
        (continuous && temperance.is_frame).then_some(stable == temperance.locally_temperate);
    WayBelowReport {
        waybelow: rows,
        continuous,
        stable,
        equals_order,
        locally_temperate: temperance.locally_temperate,
        stable_iff_locally_temperate,
    }
}
