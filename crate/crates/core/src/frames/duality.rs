//! The `O ⊣ pt` adjunction on finite carriers and the Hofmann–Mislove
//! correspondence.

use serde::Serialize;

use super::filters::{filters_of, is_completely_prime, FilterKind};
use super::lattice::{lattice_of_opens, ElemSet, FinLattice};
use crate::error::Result;
use crate::spaces::{compact_saturated_sets, FinSpace, PointSet};

/// `pt L`: completely prime filters with opens `O_u = {x | u ∈ x}`.
#[derive(Debug, Clone)]
pub struct PointsSpace {
    pub space: FinSpace,
    /// Member sets of the completely prime filters; point `i` is `points[i]`.
    pub points: Vec<ElemSet>,
    /// `opens_of[u] = O_u`.
    pub opens_of: Vec<PointSet>,
}

pub fn points_space(l: &FinLattice) -> Result<PointsSpace> {
    let points: Vec<ElemSet> = filters_of(l, FilterKind::CompletelyPrime)
        .into_iter()
        .map(|f| f.members)
        .collect();
    let opens_of: Vec<PointSet> = (0..l.m())
        .map(|u| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| p.contains(u))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let space = FinSpace::from_opens(points.len(), &opens_of)?;
    Ok(PointsSpace {
        space,
        points,
        opens_of,
    })
}

/// Round-trip facts. Fields a given check does not compute are `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub sober_input: bool,
    pub unit_lands_in_points: Option<bool>,
    pub unit_injective: Option<bool>,
    pub unit_surjective: Option<bool>,
    pub unit_open_map: Option<bool>,
    pub unit_homeomorphism: Option<bool>,
    pub spatial: Option<bool>,
    pub hm_bijection: Option<bool>,
    pub hm_order_reversing: Option<bool>,
    pub hm_pairs: Option<usize>,
    pub witnesses: Vec<String>,
}

fn is_sober_finite(space: &FinSpace) -> bool {
    // Finite spaces are sober exactly when T0.
    let n = space.n();
    (0..n).all(|x| (0..n).all(|y| x == y || space.up(x) != space.up(y)))
}

/// Unit `x ↦ {U | x ∈ U}` into `pt(O X)` and counit `L → O(pt L)` for
/// `L = O X`.
pub fn stone_round_trip(space: &FinSpace) -> Result<DualityReport> {
    let ol = lattice_of_opens(space)?;
    let l = &ol.lattice;
    let pt = points_space(l)?;
    let mut report = DualityReport {
        sober_input: is_sober_finite(space),
        ..Default::default()
    };

    let unit: Vec<ElemSet> = (0..space.n())
        .map(|x| ol.elements_of(ol.opens.iter().copied().filter(|u| u.contains(x))))
        .collect();
    let lands = unit.iter().all(|&e| is_completely_prime(l, e));
    report.unit_lands_in_points = Some(lands);
    let image: Vec<Option<usize>> = unit
        .iter()
        .map(|e| pt.points.iter().position(|p| p == e))
        .collect();

    let mut injective = true;
    for x in 0..space.n() {
        for y in x + 1..space.n() {
            if image[x] == image[y] {
                injective = false;
                report
                    .witnesses
                    .push(format!("unit identifies points {x} and {y}"));
            }
        }
    }
    let hit: PointSet = image.iter().flatten().copied().collect();
    let surjective = hit == pt.space.full();
    if !surjective {
        report.witnesses.push(format!(
            "completely prime filters {} are not in the image",
            pt.space.full() - hit
        ));
    }
    let open_map = ol.opens.iter().all(|&u| {
        let img: PointSet = u.iter().filter_map(|x| image[x]).collect();
        pt.space.is_open(img)
    });
    report.unit_injective = Some(injective);
    report.unit_surjective = Some(surjective);
    report.unit_open_map = Some(open_map);
    report.unit_homeomorphism = Some(lands && injective && surjective && open_map);

    // Counit: u ↦ O_u must be an order isomorphism onto O(pt L).
    let m = l.m();
    let counit_embedding =
        (0..m).all(|u| (0..m).all(|v| l.leq(u, v) == pt.opens_of[u].is_subset(pt.opens_of[v])));
    let counit_onto = pt.space.opens().len() == m;
    let spatial = counit_embedding && counit_onto;
    if !spatial {
        report
            .witnesses
            .push("counit L → O(pt L) is not an isomorphism".into());
    }
    report.spatial = Some(spatial);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HmConvention {
    /// Pair `∅` with the improper filter.
    IncludeEmpty,
    /// Drop `∅` and the improper filter.
    ExcludeEmpty,
}

/// Checks that `F ↦ ⋂F` and `Q ↦ ■Q = {U | Q ⊆ U}` are mutually inverse,
/// inclusion-reversing bijections between Scott-open filters of `O X` and
/// compact saturated subsets of `X`.
pub fn hofmann_mislove_report(space: &FinSpace, convention: HmConvention) -> Result<DualityReport> {
    let ol = lattice_of_opens(space)?;
    let l = &ol.lattice;
    let mut report = DualityReport {
        sober_input: is_sober_finite(space),
        ..Default::default()
    };
    if !report.sober_input {
        report
            .witnesses
            .push("input is not sober; the correspondence is not guaranteed".into());
    }
    let keep_empty = convention == HmConvention::IncludeEmpty;
    let filters: Vec<ElemSet> = filters_of(l, FilterKind::ScottOpen)
        .into_iter()
        .filter(|f| keep_empty || f.proper)
        .map(|f| f.members)
        .collect();
    let compacts: Vec<PointSet> = compact_saturated_sets(space)
        .into_iter()
        .filter(|q| keep_empty || !q.is_empty())
        .collect();

    let intersect =
        |f: ElemSet| -> PointSet { f.iter().fold(space.full(), |acc, i| acc & ol.opens[i]) };
    let nbhds = |q: PointSet| -> ElemSet { ol.elements_of(space.open_supersets(q)) };

    let mut bijection = filters.len() == compacts.len();
    for &f in &filters {
        let q = intersect(f);
        if !compacts.contains(&q) || nbhds(q) != f {
            bijection = false;
            report
                .witnesses
                .push(format!("filter {f}: ⋂F = {q} does not map back"));
        }
    }
    for &q in &compacts {
        let f = nbhds(q);
        if !filters.contains(&f) || intersect(f) != q {
            bijection = false;
            report
                .witnesses
                .push(format!("compact saturated {q}: ■Q does not map back"));
        }
    }
    let order_reversing = filters.iter().all(|&f| {
        filters
            .iter()
            .all(|&g| f.is_subset(g) == intersect(g).is_subset(intersect(f)))
    });
    report.hm_bijection = Some(bijection);
    report.hm_order_reversing = Some(order_reversing);
    report.hm_pairs = Some(filters.len());
    Ok(report)
}
