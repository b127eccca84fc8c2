//! Batch sweeps: exhaustive small spaces, seeded random spaces and
//! lattices, and the symbolic certificate battery.
//!
//! Instances are generated sequentially from the seed and checked in
//! parallel; results are collected in generation order, so a report depends
//! only on its configuration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::panic::{self, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::{
    filters_of, frame_report, hofmann_mislove_report, lattice_of_opens, opens_join_failure,
    points_space, random_distributive_lattice, stone_round_trip, temperance_report,
    waybelow_and_stability, FilterKind, FinLattice, HmConvention,
};
use crate::io::{LatticeJson, SpaceJson};
use crate::powerdomain::{
    check_embedding, lemma_hypothesis_check, lenses_by_fixed_point, lenses_by_intersections,
    order_report,
};
use crate::spaces::enumerate::{all_preorders, random_space};
use crate::spaces::{
    alexandroff_space, compactness_methods_agree, property_report, specialization_preorder,
    ultrafilter_limits_by_closures, ultrafilter_limits_by_definition,
    weakly_hausdorff_compact_pairs, weakly_hausdorff_pointwise, FinSpace, PointSet,
    PrincipalUltrafilter, SpaceProperties, MAX_POINTS,
};
use crate::symbolic::{
    builtin_certificates, certificate_check, cn_counterexample_suite, cn_image_of_iota,
    cn_image_of_iota_by_search, cn_quasi_lens, representable_sets, CofinSet,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_POINTS: usize = 4;
/// Exhaustive sweeps above this size are refused.
pub const MAX_EXHAUSTIVE_POINTS: usize = 5;
/// Failures kept per check; counters still count every instance.
pub const MAX_WITNESSES_PER_CHECK: usize = 10;

const RANDOM_POINTS: std::ops::RangeInclusive<usize> = 6..=8;
const HYPERSPACE_POINTS: usize = 6;
const RANDOM_LATTICE_MAX: usize = 12;
/// Supports `{0, .., k-1}` for the quasi-lens classification sweep.
const CLASSIFICATION_SUPPORT: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    /// Property consistency laws on every swept space.
    Spaces,
    /// Pairs of independent algorithms for the same notion.
    Oracles,
    /// Stone round trip and the Hofmann–Mislove correspondence.
    Duality,
    /// Temperance of open-set frames against the space-side properties.
    Temperance,
    /// Way-below, stability and filters on finite frames and lattices.
    Frames,
    /// Lenses, quasi-lenses and their hyperspaces.
    Powerdomain,
    /// The symbolic infinite spaces and their certificates.
    Examples,
}

impl SuiteName {
    pub const ALL: [SuiteName; 7] = [
        SuiteName::Spaces,
        SuiteName::Oracles,
        SuiteName::Duality,
        SuiteName::Temperance,
        SuiteName::Frames,
        SuiteName::Powerdomain,
        SuiteName::Examples,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Spaces => "spaces",
            SuiteName::Oracles => "oracles",
            SuiteName::Duality => "duality",
            SuiteName::Temperance => "temperance",
            SuiteName::Frames => "frames",
            SuiteName::Powerdomain => "powerdomain",
            SuiteName::Examples => "examples",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Exhaustive sweep covers every topology on `0..=max_points` points.
    pub max_points: usize,
    /// Random spaces on 6 to 8 points.
    pub samples: usize,
    /// Random 6-point spaces for the duality and hyperspace suites.
    pub hyperspace_samples: usize,
    /// Random distributive lattices with at most 12 elements.
    pub lattice_samples: usize,
    pub suites: BTreeSet<SuiteName>,
    /// Include wall-clock times, which makes the report nondeterministic.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_points: DEFAULT_MAX_POINTS,
            samples: 1000,
            hyperspace_samples: 200,
            lattice_samples: 100,
            suites: SuiteName::ALL.into_iter().collect(),
            timing: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_points > MAX_EXHAUSTIVE_POINTS {
            return Err(Error::Input(format!(
                "max_points {} exceeds the exhaustive cap of {MAX_EXHAUSTIVE_POINTS}",
                self.max_points
            )));
        }
        if self.suites.is_empty() {
            return Err(Error::Input("no suites selected".into()));
        }
        Ok(())
    }

    fn has(&self, s: SuiteName) -> bool {
        self.suites.contains(&s)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counter {
    pub passed: usize,
    pub failed: usize,
}

/// The data needed to replay a failing instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InstanceData {
    Space { space: SpaceJson },
    Lattice { lattice: LatticeJson },
    Symbolic { description: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub instance: String,
    pub data: InstanceData,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub instance: String,
    pub n: usize,
    pub properties: SpaceProperties,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: SuiteConfig,
    pub passed: bool,
    /// Instance counts by source, plus the topology counts obtained by
    /// enumerating open families directly, for comparison.
    pub instances: BTreeMap<String, usize>,
    pub counters: BTreeMap<String, Counter>,
    pub witnesses: Vec<Witness>,
    pub records: Vec<InstanceRecord>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<BTreeMap<String, u64>>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.counters.values().map(|c| c.failed).sum()
    }

    pub fn counter(&self, check: &str) -> Counter {
        self.counters.get(check).copied().unwrap_or_default()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Which batteries run on a space.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Plan {
    pub spaces: bool,
    pub oracles: bool,
    pub temperance: bool,
    pub frames: bool,
    pub duality: bool,
    pub powerdomain: bool,
}

/// Results of the checks run on one instance.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub checks: Vec<(String, Result<(), String>)>,
    pub properties: Option<SpaceProperties>,
    pub skipped: Vec<String>,
}

impl Outcome {
    fn expect(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        let r = if ok { Ok(()) } else { Err(detail()) };
        self.checks.push((check.to_string(), r));
    }

    fn error(&mut self, check: &str, e: Error) {
        self.checks.push((check.to_string(), Err(e.to_string())));
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &str)> {
        self.checks
            .iter()
            .filter_map(|(c, r)| r.as_ref().err().map(|d| (c.as_str(), d.as_str())))
    }
}

fn flag_list(flags: &[(&str, bool)]) -> String {
    flags
        .iter()
        .map(|(name, v)| format!("{name}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Runs the requested batteries on a space.
pub fn check_space(s: &FinSpace, plan: Plan) -> Outcome {
    let mut out = Outcome::default();
    let t0 = specialization_preorder(s).is_antisymmetric();
    let props = if plan.spaces || plan.temperance {
        match property_report(s) {
            Ok(p) => Some(p),
            Err(e) => {
                out.error("property_report", e);
                None
            }
        }
    } else {
        None
    };

    if let (true, Some(p)) = (plan.spaces, props) {
        space_laws(s, &p, &mut out);
    }
    if plan.oracles {
        oracles(s, &mut out);
    }
    let small_frame = s.opens().len() <= MAX_POINTS;
    let ol = if (plan.temperance && t0) || plan.frames {
        match small_frame.then(|| lattice_of_opens(s)).transpose() {
            Ok(ol) => ol,
            Err(e) => {
                out.error("lattice_of_opens", e);
                return out;
            }
        }
    } else {
        None
    };
    if let (true, true, Some(p)) = (plan.temperance, t0, props) {
        // Frames too large for the lattice type are checked on the opens.
        let locally_temperate = match &ol {
            Some(ol) => temperance_report(&ol.lattice).locally_temperate,
            None => opens_join_failure(s).is_none(),
        };
        let all = locally_temperate && p.weakly_hausdorff && p.coherent && p.locally_strongly_sober;
        out.expect("t0_frame_temperance_conjunction", all, || {
            flag_list(&[
                ("locally_temperate", locally_temperate),
                ("weakly_hausdorff", p.weakly_hausdorff),
                ("coherent", p.coherent),
                ("locally_strongly_sober", p.locally_strongly_sober),
            ])
        });
    }
    if plan.frames {
        match &ol {
            Some(ol) => out.checks.extend(check_lattice(&ol.lattice).checks),
            None => out.skipped.push(format!(
                "open-set frame has {} elements, above {MAX_POINTS}",
                s.opens().len()
            )),
        }
    }
    if plan.duality {
        duality(s, t0, &mut out);
    }
    if plan.powerdomain {
        powerdomain(s, &mut out);
    }
    out.properties = props;
    out
}

fn space_laws(s: &FinSpace, p: &SpaceProperties, out: &mut Outcome) {
    out.expect(
        "alexandroff_round_trip",
        alexandroff_space(&specialization_preorder(s)) == *s,
        || "the Alexandroff space of the specialization preorder differs".into(),
    );
    out.expect("weakly_hausdorff_always", p.weakly_hausdorff, || {
        "a finite space is not weakly Hausdorff".into()
    });
    let middle = p.weakly_hausdorff && p.coherent && p.sober;
    let right = p.weakly_hausdorff && p.weakly_coherent && p.monotone_convergence;
    out.expect(
        "local_strong_sobriety_equivalence",
        p.locally_strongly_sober == middle && middle == right,
        || {
            flag_list(&[
                ("locally_strongly_sober", p.locally_strongly_sober),
                ("wh_coherent_sober", middle),
                ("wh_weakly_coherent_monotone_convergence", right),
            ])
        },
    );
    out.expect(
        "wh_monotone_convergence_implies_sober",
        !(p.weakly_hausdorff && p.monotone_convergence) || p.sober,
        || "weakly Hausdorff monotone convergence space is not sober".into(),
    );
    out.expect(
        "wh_weakly_coherent_implies_coherent",
        !(p.weakly_hausdorff && p.weakly_coherent) || p.coherent,
        || "weakly Hausdorff weakly coherent space is not coherent".into(),
    );
    out.expect(
        "stably_locally_compact_iff_locally_compact_and_lss",
        p.stably_locally_compact == (p.locally_compact && p.locally_strongly_sober),
        || {
            flag_list(&[
                ("stably_locally_compact", p.stably_locally_compact),
                ("locally_compact", p.locally_compact),
                ("locally_strongly_sober", p.locally_strongly_sober),
            ])
        },
    );
    let laws = [
        ("hausdorff => t1", !p.hausdorff || p.t1),
        ("t1 => t0", !p.t1 || p.t0),
        ("sober => t0", !p.sober || p.t0),
        ("sober => well_filtered", !p.sober || p.well_filtered),
        (
            "coherent => weakly_coherent",
            !p.coherent || p.weakly_coherent,
        ),
        ("sober <=> t0", p.sober == p.t0),
        (
            "monotone_convergence <=> t0",
            p.monotone_convergence == p.t0,
        ),
        (
            "hausdorff <=> t1 and wh",
            p.hausdorff == (p.t1 && p.weakly_hausdorff),
        ),
    ];
    let broken: Vec<&str> = laws.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    out.expect("implication_lattice", broken.is_empty(), || {
        broken.join("; ")
    });
}

fn oracles(s: &FinSpace, out: &mut Outcome) {
    let (a, b) = (
        weakly_hausdorff_pointwise(s),
        weakly_hausdorff_compact_pairs(s),
    );
    out.expect("weakly_hausdorff_methods_agree", a == b, || {
        format!("point pairs {a}, compact pairs {b}")
    });
    let disagreement = compactness_methods_agree(s);
    out.expect("compactness_methods_agree", disagreement.is_none(), || {
        format!("methods disagree on {}", disagreement.unwrap_or_default())
    });
    let mut limits = Ok(());
    for base_point in 0..s.n() {
        let u = PrincipalUltrafilter { base_point };
        match (
            ultrafilter_limits_by_definition(s, u),
            ultrafilter_limits_by_closures(s, u),
        ) {
            (Ok(x), Ok(y)) if x == y => {}
            (Ok(x), Ok(y)) => {
                limits = Err(format!(
                    "ultrafilter at {base_point}: definition {x}, closures {y}"
                ));
                break;
            }
            (Err(e), _) | (_, Err(e)) => {
                limits = Err(e.to_string());
                break;
            }
        }
    }
    out.checks
        .push(("ultrafilter_limit_methods_agree".into(), limits));
    let (x, y) = (lenses_by_intersections(s), lenses_by_fixed_point(s));
    out.expect("lens_enumerations_agree", x == y, || {
        format!("{} lenses from Q ∩ C, {} fixed points", x.len(), y.len())
    });
}

fn duality(s: &FinSpace, t0: bool, out: &mut Outcome) {
    for (check, convention) in [
        ("hofmann_mislove_with_empty", HmConvention::IncludeEmpty),
        ("hofmann_mislove_without_empty", HmConvention::ExcludeEmpty),
    ] {
        match hofmann_mislove_report(s, convention) {
            Ok(r) => out.expect(
                check,
                r.hm_bijection == Some(true) && r.hm_order_reversing == Some(true),
                || r.witnesses.join("; "),
            ),
            Err(e) => out.error(check, e),
        }
    }
    match stone_round_trip(s) {
        Ok(r) => {
            out.expect(
                "stone_unit_homeomorphism_iff_t0",
                r.unit_homeomorphism == Some(t0),
                || format!("t0={t0}, unit homeomorphism={:?}", r.unit_homeomorphism),
            );
            if !t0 {
                out.expect(
                    "stone_unit_not_injective_off_t0",
                    r.unit_injective == Some(false),
                    || "unit is injective on a non-T0 space".into(),
                );
            }
            out.expect("opens_lattice_spatial", r.spatial == Some(true), || {
                r.witnesses.join("; ")
            });
        }
        Err(e) => out.error("stone_round_trip", e),
    }
}

fn powerdomain(s: &FinSpace, out: &mut Outcome) {
    match check_embedding(s) {
        Ok(r) => {
            let w = || r.witnesses.join("; ");
            out.expect("iota_rho_round_trips", r.round_trips == Some(true), w);
            out.expect(
                "iota_preimages_match",
                r.iota_preimages_match == Some(true),
                w,
            );
            out.expect("iota_homeomorphism", r.iota_homeomorphism == Some(true), w);
        }
        Err(e) => out.error("check_embedding", e),
    }
    match order_report(s) {
        Ok(r) => {
            let w = || r.witnesses.join("; ");
            out.expect(
                "tem_equals_vietoris_specialization",
                r.tem_equals_vietoris_specialization == Some(true),
                w,
            );
            out.expect("tem_equals_em", r.tem_equals_em == Some(true), w);
            out.expect(
                "lens_downsets_closed",
                r.all_downsets_closed == Some(true),
                w,
            );
        }
        Err(e) => out.error("order_report", e),
    }
    let lemma = lemma_hypothesis_check(s);
    out.expect("closure_lemma", lemma.is_ok(), || {
        let v = lemma.unwrap_err();
        format!("Q = {}, C = {}", v.q, v.c)
    });
}

/// Frame-side checks on a finite lattice.
pub fn check_lattice(l: &FinLattice) -> Outcome {
    let mut out = Outcome::default();
    let fr = frame_report(l);
    let w = waybelow_and_stability(l);
    out.expect("waybelow_equals_order", w.equals_order, || {
        "way-below differs from the order".into()
    });
    if let Some(agree) = w.stable_iff_locally_temperate {
        out.expect("stable_iff_locally_temperate", agree, || {
            flag_list(&[
                ("stable", w.stable),
                ("locally_temperate", w.locally_temperate),
            ])
        });
    }
    if fr.is_boolean {
        out.expect("boolean_locally_temperate", w.locally_temperate, || {
            "Boolean algebra is not locally temperate".into()
        });
    }
    out.expect(
        "filters_are_scott_open",
        filters_of(l, FilterKind::All) == filters_of(l, FilterKind::ScottOpen),
        || "a filter is not Scott-open".into(),
    );
    if fr.is_frame {
        match points_space(l) {
            Ok(pt) => out.expect(
                "points_space_sober",
                specialization_preorder(&pt.space).is_antisymmetric(),
                || "pt L is not T0".into(),
            ),
            Err(e) => out.error("points_space", e),
        }
    }
    out
}

/// The symbolic battery: certificates, the cofinite counterexamples and
/// the quasi-lens classification sweep.
pub fn check_examples() -> Vec<(String, Result<(), String>)> {
    let mut out = Outcome::default();
    for cert in builtin_certificates() {
        let name = format!("certificate_{}_{}", cert.body.kind(), cert.space);
        match certificate_check(&cert) {
            Ok(v) => out.expect(&name, v.valid, || v.reason.clone()),
            Err(e) => out.error(&name, e),
        }
    }
    let r = cn_counterexample_suite();
    out.expect("cofinite_counterexamples", r.all_confirmed(), || {
        r.details.join("; ")
    });

    let sets = representable_sets(CLASSIFICATION_SUPPORT);
    let mut classification = Ok(());
    let mut image = Ok(());
    'outer: for q in &sets {
        for c in &sets {
            let v = cn_quasi_lens(q, c);
            if v.is_quasi_lens != v.classification && classification.is_ok() {
                classification = Err(format!(
                    "({q}, {c}): conditions {}, classification {}",
                    v.is_quasi_lens, v.classification
                ));
            }
            if cn_image_of_iota(q, c) != cn_image_of_iota_by_search(q, c) && image.is_ok() {
                image = Err(format!("({q}, {c}): image predicate disagrees with search"));
            }
            if classification.is_err() && image.is_err() {
                break 'outer;
            }
        }
    }
    out.checks
        .push(("cofinite_quasi_lens_classification".into(), classification));
    out.checks.push(("cofinite_image_of_iota".into(), image));
    let (q, c) = (CofinSet::finite([0]), CofinSet::nat());
    let ql = cn_quasi_lens(&q, &c).is_quasi_lens;
    let in_image = cn_image_of_iota(&q, &c);
    out.expect("cofinite_iota_not_surjective", ql && !in_image, || {
        format!("({q}, {c}): quasi-lens {ql}, in image {in_image}")
    });
    out.checks
}

/// Number of topologies on `n` points, by enumerating families of subsets
/// closed under binary unions and intersections.
pub fn count_topologies_by_open_families(n: usize) -> usize {
    assert!(n <= 4, "open-family enumeration is capped at 4 points");
    let full = PointSet::full(n);
    let middle: Vec<PointSet> = full
        .subsets()
        .filter(|&a| !a.is_empty() && a != full)
        .collect();
    let mut count = 0;
    for mask in 0u32..1 << middle.len() {
        let mut family: Vec<PointSet> = vec![PointSet::EMPTY, full];
        family.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a),
        );
        let member = |a: PointSet| family.contains(&a);
        let closed = family
            .iter()
            .all(|&a| family.iter().all(|&b| member(a | b) && member(a & b)));
        if closed {
            count += 1;
        }
    }
    count
}

struct Job {
    id: String,
    kind: JobKind,
}

enum JobKind {
    Space(FinSpace, Plan),
    Lattice(FinLattice),
}

impl Job {
    fn data(&self) -> InstanceData {
        match &self.kind {
            JobKind::Space(s, _) => InstanceData::Space {
                space: SpaceJson {
                    n: s.n(),
                    opens: None,
                    subbasis: Some(
                        s.neighbourhoods()
                            .iter()
                            .map(|u| u.iter().collect())
                            .collect(),
                    ),
                },
            },
            JobKind::Lattice(l) => InstanceData::Lattice {
                lattice: LatticeJson {
                    m: l.m(),
                    leq: l.order_pairs(),
                },
            },
        }
    }

    fn run(&self) -> Outcome {
        let result = panic::catch_unwind(AssertUnwindSafe(|| match &self.kind {
            JobKind::Space(s, plan) => check_space(s, *plan),
            JobKind::Lattice(l) => check_lattice(l),
        }));
        result.unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Outcome {
                checks: vec![("internal_consistency".into(), Err(msg))],
                ..Default::default()
            }
        })
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn build_jobs(config: &SuiteConfig, instances: &mut BTreeMap<String, usize>) -> Vec<Job> {
    let mut jobs = Vec::new();
    let exhaustive_plan = Plan {
        spaces: config.has(SuiteName::Spaces),
        oracles: config.has(SuiteName::Oracles),
        temperance: config.has(SuiteName::Temperance),
        frames: config.has(SuiteName::Frames),
        duality: config.has(SuiteName::Duality),
        powerdomain: config.has(SuiteName::Powerdomain),
    };
    let random_plan = Plan {
        duality: false,
        powerdomain: false,
        ..exhaustive_plan
    };
    let hyper_plan = Plan {
        duality: exhaustive_plan.duality,
        powerdomain: exhaustive_plan.powerdomain,
        ..Plan::default()
    };

    if exhaustive_plan != Plan::default() {
        for n in 0..=config.max_points {
            let mut posets = 0;
            for (i, p) in all_preorders(n).iter().enumerate() {
                let kind = if p.is_antisymmetric() {
                    posets += 1;
                    "partial_order"
                } else {
                    "preorder"
                };
                jobs.push(Job {
                    id: format!("exhaustive/n{n}/{i}/{kind}"),
                    kind: JobKind::Space(alexandroff_space(p), exhaustive_plan),
                });
            }
            let total = jobs.len() - instances.values().sum::<usize>();
            instances.insert(format!("exhaustive_n{n}_partial_orders"), posets);
            instances.insert(
                format!("exhaustive_n{n}_non_antisymmetric_preorders"),
                total - posets,
            );
        }
    }
    if random_plan != Plan::default() && config.samples > 0 {
        let mut rng = stream_rng(config.seed, 1);
        for i in 0..config.samples {
            let n = rng.gen_range(RANDOM_POINTS);
            jobs.push(Job {
                id: format!("random/{i}/n{n}"),
                kind: JobKind::Space(random_space(&mut rng, n), random_plan),
            });
        }
        instances.insert("random_spaces_6_to_8_points".into(), config.samples);
    }
    if hyper_plan != Plan::default() && config.hyperspace_samples > 0 {
        let mut rng = stream_rng(config.seed, 2);
        for i in 0..config.hyperspace_samples {
            jobs.push(Job {
                id: format!("random6/{i}"),
                kind: JobKind::Space(random_space(&mut rng, HYPERSPACE_POINTS), hyper_plan),
            });
        }
        instances.insert("random_spaces_6_points".into(), config.hyperspace_samples);
    }
    if config.has(SuiteName::Frames) {
        let fixed: Vec<(String, FinLattice)> = (0..=6)
            .map(|k| (format!("boolean/{k}"), FinLattice::boolean(k)))
            .chain((1..=6).map(|k| (format!("chain/{k}"), FinLattice::chain(k))))
            .chain([
                ("m3".to_string(), FinLattice::m3()),
                ("n5".to_string(), FinLattice::n5()),
            ])
            .collect();
        instances.insert("fixed_lattices".into(), fixed.len());
        jobs.extend(fixed.into_iter().map(|(id, l)| Job {
            id: format!("lattice/{id}"),
            kind: JobKind::Lattice(l),
        }));
        let mut rng = stream_rng(config.seed, 3);
        for i in 0..config.lattice_samples {
            jobs.push(Job {
                id: format!("lattice/random/{i}"),
                kind: JobKind::Lattice(random_distributive_lattice(&mut rng, RANDOM_LATTICE_MAX)),
            });
        }
        instances.insert(
            "random_distributive_lattices".into(),
            config.lattice_samples,
        );
    }
    jobs
}

struct Tally<'a> {
    report: &'a mut Report,
    per_check_witnesses: BTreeMap<String, usize>,
}

impl Tally<'_> {
    fn add(
        &mut self,
        check: &str,
        result: &Result<(), String>,
        id: &str,
        data: impl FnOnce() -> InstanceData,
    ) {
        let counter = self.report.counters.entry(check.to_string()).or_default();
        match result {
            Ok(()) => counter.passed += 1,
            Err(detail) => {
                counter.failed += 1;
                let kept = self
                    .per_check_witnesses
                    .entry(check.to_string())
                    .or_default();
                if *kept < MAX_WITNESSES_PER_CHECK {
                    *kept += 1;
                    self.report.witnesses.push(Witness {
                        check: check.to_string(),
                        instance: id.to_string(),
                        data: data(),
                        detail: detail.clone(),
                    });
                }
            }
        }
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        passed: false,
        instances: BTreeMap::new(),
        counters: BTreeMap::new(),
        witnesses: Vec::new(),
        records: Vec::new(),
        warnings: Vec::new(),
        wall_clock_ms: config.timing.then(BTreeMap::new),
    };
    if config.max_points == MAX_EXHAUSTIVE_POINTS {
        report.warnings.push(format!(
            "exhaustive sweep at {MAX_EXHAUSTIVE_POINTS} points covers 6942 topologies and takes minutes"
        ));
    }
    let started = Instant::now();
    let jobs = build_jobs(config, &mut report.instances);
    let outcomes: Vec<Outcome> = jobs.par_iter().map(Job::run).collect();

    let mut tally = Tally {
        report: &mut report,
        per_check_witnesses: BTreeMap::new(),
    };
    let mut skipped = 0;
    for (job, outcome) in jobs.iter().zip(&outcomes) {
        for (check, result) in &outcome.checks {
            tally.add(check, result, &job.id, || job.data());
        }
        skipped += outcome.skipped.len();
    }
    for (job, outcome) in jobs.iter().zip(outcomes) {
        if let (JobKind::Space(s, _), Some(p)) = (&job.kind, outcome.properties) {
            report.records.push(InstanceRecord {
                instance: job.id.clone(),
                n: s.n(),
                properties: p,
            });
        }
    }
    if skipped > 0 {
        report
            .instances
            .insert("frame_checks_skipped_over_64_opens".into(), skipped);
    }
    if let Some(times) = report.wall_clock_ms.as_mut() {
        times.insert("instances".into(), started.elapsed().as_millis() as u64);
    }

    if config.has(SuiteName::Examples) {
        let started = Instant::now();
        let mut tally = Tally {
            report: &mut report,
            per_check_witnesses: BTreeMap::new(),
        };
        for (check, result) in check_examples() {
            tally.add(&check, &result, "symbolic", || InstanceData::Symbolic {
                description: check.clone(),
            });
        }
        report
            .instances
            .insert("symbolic_certificates".into(), builtin_certificates().len());
        if let Some(times) = report.wall_clock_ms.as_mut() {
            times.insert("examples".into(), started.elapsed().as_millis() as u64);
        }
    }

    if config.has(SuiteName::Duality) {
        let mut tally = Tally {
            report: &mut report,
            per_check_witnesses: BTreeMap::new(),
        };
        for (name, l, expected) in [
            ("chain3", FinLattice::chain(3), FinSpace::sierpinski()),
            ("boolean4", FinLattice::boolean(2), FinSpace::discrete(2)),
        ] {
            let result = match points_space(&l) {
                Ok(pt) if pt.space == expected => Ok(()),
                Ok(pt) => Err(format!(
                    "pt has neighbourhoods {:?}",
                    pt.space.neighbourhoods()
                )),
                Err(e) => Err(e.to_string()),
            };
            tally.add("points_of_small_frames", &result, name, || {
                InstanceData::Lattice {
                    lattice: LatticeJson {
                        m: l.m(),
                        leq: l.order_pairs(),
                    },
                }
            });
        }
    }

    if config.max_points <= 4 && (config.has(SuiteName::Spaces) || config.has(SuiteName::Oracles)) {
        let mut tally = Tally {
            report: &mut report,
            per_check_witnesses: BTreeMap::new(),
        };
        for n in 0..=config.max_points {
            let by_families = count_topologies_by_open_families(n);
            let by_preorders = all_preorders(n).len();
            tally
                .report
                .instances
                .insert(format!("topologies_by_open_families_n{n}"), by_families);
            let result = if by_families == by_preorders {
                Ok(())
            } else {
                Err(format!(
                    "{by_families} open families, {by_preorders} preorders"
                ))
            };
            tally.add(
                "enumeration_counts_agree",
                &result,
                &format!("n{n}"),
                || InstanceData::Symbolic {
                    description: format!("topologies on {n} points"),
                },
            );
        }
    }

    report.passed = report.failures() == 0;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_family_counts() {
        let counts: Vec<usize> = (0..=3).map(count_topologies_by_open_families).collect();
        assert_eq!(counts, vec![1, 1, 4, 29]);
    }

    #[test]
    fn config_validation() {
        let mut c = SuiteConfig::default();
        assert!(c.validate().is_ok());
        c.max_points = 6;
        assert!(c.validate().is_err());
        c.max_points = 2;
        c.suites.clear();
        assert!(c.validate().is_err());
        assert_eq!("frames".parse::<SuiteName>().unwrap(), SuiteName::Frames);
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let config = SuiteConfig {
            max_points: 2,
            samples: 5,
            hyperspace_samples: 2,
            lattice_samples: 3,
            ..Default::default()
        };
        let a = run_suite(&config).unwrap();
        assert!(a.passed, "{:#?}", a.witnesses);
        assert_eq!(a.to_json(), run_suite(&config).unwrap().to_json());
        assert_eq!(a.instances["exhaustive_n2_partial_orders"], 3);
        assert_eq!(a.instances["exhaustive_n2_non_antisymmetric_preorders"], 1);
    }

    #[test]
    fn examples_only() {
        let config = SuiteConfig {
            suites: [SuiteName::Examples].into_iter().collect(),
            ..Default::default()
        };
        let r = run_suite(&config).unwrap();
        assert!(r.passed);
        assert_eq!(r.counter("cofinite_quasi_lens_classification").passed, 1);
        assert!(r.records.is_empty());
    }
}
