//! Cofinite ℕ: the space operations, its quasi-lenses and the image of ι,
//! and the battery of negative facts about it.

use serde::Serialize;

use super::backends::{EffectiveSpace, SymPoint, SymSet};
use super::certificate::{certificate_check, Certificate, CertificateBody};
use super::cofin::CofinSet;
use crate::error::{Error, Result};
use crate::spaces::{CompactnessMethod, CompactnessOracle};

const CN: EffectiveSpace = EffectiveSpace::CofiniteNat;

fn lift(a: &CofinSet) -> SymSet {
    SymSet::nats(a.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CofiniteOps {
    pub is_open: bool,
    pub is_closed: bool,
    pub is_compact_saturated: bool,
    pub closure: CofinSet,
}

pub fn cofinite_space_ops(a: &CofinSet) -> CofiniteOps {
    let s = lift(a);
    let compact = CN
        .is_compact(&s, CompactnessMethod::OpenCover)
        .expect("subsets of ℕ are valid");
    CofiniteOps {
        is_open: CN.is_open(&s),
        is_closed: CN.is_closed(&s),
        is_compact_saturated: compact && CN.upset(&s) == s,
        closure: CN.closure(&s).nats,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiLensVerdict {
    /// The three conditions, decided.
    pub is_quasi_lens: bool,
    /// `Q = C` finite non-empty, or `Q ≠ ∅` and `C = ℕ`.
    pub classification: bool,
    /// Why the decision is negative.
    pub reason: Option<String>,
}

/// Decides the quasi-lens conditions for `(q, c)` on cofinite ℕ.
///
/// Every subset is compact and saturated, so only `c` closed and the three
/// conditions remain:
/// 1. `q ∩ c ≠ ∅`;
/// 2. `q ⊆ ↑(q ∩ c) = q ∩ c`, that is `q ⊆ c`;
/// 3. `c ⊆ cl(U ∩ c)` for every open `U ⊇ q`. For `c = ℕ`, `cl U` is ℕ
///    unless `U = ∅`, which is only available when `q = ∅`. For finite `c`,
///    `cl(U ∩ c) = U ∩ c`, so the condition says `c` lies inside the
///    intersection of the opens containing `q`, which is the saturation of
///    `q`.
pub fn cn_quasi_lens_conditions(q: &CofinSet, c: &CofinSet) -> Result<(), String> {
    let (qs, cs) = (lift(q), lift(c));
    if !CN.is_closed(&cs) {
        return Err(format!("{c} is not closed"));
    }
    if !q.intersects(c) {
        return Err(format!("condition (1): {q} ∩ {c} = ∅"));
    }
    let meet = qs.intersection(&cs);
    if !qs.is_subset(&CN.upset(&meet)) {
        return Err(format!("condition (2): {q} ⊄ ↑({q} ∩ {c})"));
    }
    if c.is_nat() {
        if q.is_empty() {
            return Err("condition (3): U = ∅ contains Q but cl(∅) ⊉ ℕ".into());
        }
    } else if !cs.is_subset(&CN.upset(&qs)) {
        return Err(format!("condition (3): {c} ⊄ ⋂{{U open | U ⊇ {q}}}"));
    }
    Ok(())
}

pub fn cn_quasi_lens_classification(q: &CofinSet, c: &CofinSet) -> bool {
    (q == c && q.is_finite() && !q.is_empty()) || (!q.is_empty() && c.is_nat())
}

pub fn cn_quasi_lens(q: &CofinSet, c: &CofinSet) -> QuasiLensVerdict {
    let decided = cn_quasi_lens_conditions(q, c);
    QuasiLensVerdict {
        is_quasi_lens: decided.is_ok(),
        classification: cn_quasi_lens_classification(q, c),
        reason: decided.err(),
    }
}

/// `ι(L) = (↑L, cl L) = (L, cl L)`.
pub fn cn_iota(l: &CofinSet) -> Result<(CofinSet, CofinSet)> {
    if l.is_empty() {
        return Err(Error::NotALens("ι is defined on non-empty sets".into()));
    }
    let s = lift(l);
    Ok((CN.upset(&s).nats, CN.closure(&s).nats))
}

/// `(q = c` finite non-empty`) ∨ (q` infinite `∧ c = ℕ)`.
pub fn cn_image_of_iota(q: &CofinSet, c: &CofinSet) -> bool {
    (q == c && q.is_finite() && !q.is_empty()) || (!q.is_finite() && c.is_nat())
}

/// Searches for a preimage. Since `ρ ∘ ι = id`, the only candidate is
/// `q ∩ c`.
pub fn cn_image_of_iota_by_search(q: &CofinSet, c: &CofinSet) -> bool {
    let l = q.intersection(c);
    matches!(cn_iota(&l), Ok((q2, c2)) if &q2 == q && &c2 == c)
}

/// `L ⊑_TEM L'` on cofinite ℕ: `L ⊇ L'` and `cl L ⊆ cl L'`.
pub fn cn_tem_leq(l: &CofinSet, l2: &CofinSet) -> bool {
    let (a, b) = (lift(l), lift(l2));
    CN.upset(&b).is_subset(&CN.upset(&a)) && CN.closure(&a).is_subset(&CN.closure(&b))
}

/// `L ⊑_EM L'`: `L ⊇ L'` and `↓L ⊆ ↓L'`.
pub fn cn_em_leq(l: &CofinSet, l2: &CofinSet) -> bool {
    let (a, b) = (lift(l), lift(l2));
    CN.upset(&b).is_subset(&CN.upset(&a)) && CN.downset(&a).is_subset(&CN.downset(&b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub nat_irreducible_closed: bool,
    pub no_generic_point: bool,
    pub non_sober: bool,
    pub non_weakly_hausdorff: bool,
    pub closure_differs_from_downset: bool,
    pub tem_holds: bool,
    pub em_fails: bool,
    pub details: Vec<String>,
}

impl CounterexampleReport {
    pub fn all_confirmed(&self) -> bool {
        self.non_sober
            && self.non_weakly_hausdorff
            && self.closure_differs_from_downset
            && self.tem_holds
            && self.em_fails
    }
}

/// Points sampled for the pointwise part of the generic point check.
pub const GENERIC_POINT_SAMPLES: u64 = 64;

pub fn cn_counterexample_suite() -> CounterexampleReport {
    let mut details = Vec::new();
    let nat = CofinSet::nat();

    // (a) Non-empty opens are cofinite, and two cofinite sets meet in a
    // cofinite set (`Cofinite(a) ∩ Cofinite(b) = Cofinite(a ∪ b)`), which is
    // never empty. Also checked on every open with support below 6.
    let opens: Vec<CofinSet> = super::cofin::representable_sets(6)
        .into_iter()
        .filter(|u| !u.is_empty() && CN.is_open(&lift(u)))
        .collect();
    let pairwise = opens.iter().all(|u| opens.iter().all(|v| u.intersects(v)));
    let nat_irreducible_closed = CN.is_closed(&lift(&nat)) && pairwise;
    details.push(format!(
        "(a) ℕ closed and irreducible: {nat_irreducible_closed} ({} sampled non-empty opens pairwise meet)",
        opens.len()
    ));

    // cl{x} = {x} for every x: a finite set is closed. Sampled pointwise, and
    // the schema rule is that closure maps every finite set to itself.
    let sampled = (0..GENERIC_POINT_SAMPLES).all(|x| {
        let cl = cofinite_space_ops(&CofinSet::finite([x])).closure;
        cl == CofinSet::finite([x]) && cl != nat
    });
    let finite_closed = cofinite_space_ops(&CofinSet::finite([7, 11])).is_closed;
    let no_generic_point = sampled && finite_closed;
    let cert = certificate_check(&Certificate {
        space: EffectiveSpace::CofiniteNat,
        body: CertificateBody::NonSoberIrreducible {
            closed: SymSet::nats(nat.clone()),
        },
    });
    let non_sober =
        nat_irreducible_closed && no_generic_point && matches!(cert, Ok(ref v) if v.valid);
    details.push(format!(
        "(a) no generic point for ℕ (cl{{x}} = {{x}} on {GENERIC_POINT_SAMPLES} samples): {no_generic_point}; non-sober: {non_sober}"
    ));

    // (b)
    let wh = certificate_check(&Certificate {
        space: EffectiveSpace::CofiniteNat,
        body: CertificateBody::NonWeaklyHausdorffPair {
            x: SymPoint::Nat(0),
            y: SymPoint::Nat(1),
            w: SymSet::empty(),
        },
    });
    let non_weakly_hausdorff = matches!(wh, Ok(ref v) if v.valid);
    details.push(format!(
        "(b) x=0, y=1, W=∅: every U∋0, V∋1 meet in a cofinite set, non-wH: {non_weakly_hausdorff}"
    ));

    // (c)
    let l = CofinSet::cofinite([0]);
    let cl = CN.closure(&lift(&l)).nats;
    let down = CN.downset(&lift(&l)).nats;
    let closure_differs_from_downset = cl.is_nat() && down == l && cl != down;
    details.push(format!(
        "(c) L = {l}: cl L = {cl}, ↓L = {down}, differ: {closure_differs_from_downset}"
    ));

    // (d)
    let tem_holds = cn_tem_leq(&nat, &l);
    let em_fails = !cn_em_leq(&nat, &l);
    details.push(format!(
        "(d) L = ℕ, L' = {l}: TEM {tem_holds}, EM {}",
        !em_fails
    ));

    CounterexampleReport {
        nat_irreducible_closed,
        no_generic_point,
        non_sober,
        non_weakly_hausdorff,
        closure_differs_from_downset,
        tem_holds,
        em_fails,
        details,
    }
}
