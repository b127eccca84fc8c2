//! Witnesses for negative claims about the infinite backends, and their
//! checking rules.

use serde::{Deserialize, Serialize};

use super::backends::{EffectiveSpace, SymPoint, SymSet};
use super::cofin::CofinSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub space: EffectiveSpace,
    #[serde(flatten)]
    pub body: CertificateBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "payload",
    rename_all = "snake_case",
    deny_unknown_fields
)]
pub enum CertificateBody {
    /// The cover `{{p} | p ∈ target}`. When `pair` is given, `target` must
    /// also equal `↑x ∩ ↑y`, which shows the space is not weakly coherent.
    NonCompactSingletonCover {
        target: SymSet,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pair: Option<(SymPoint, SymPoint)>,
    },
    /// An irreducible closed set without a generic point.
    NonSoberIrreducible { closed: SymSet },
    /// `↑x ∩ ↑y ⊆ w`, yet no opens `U ∋ x`, `V ∋ y` have `U ∩ V ⊆ w`.
    NonWeaklyHausdorffPair { x: SymPoint, y: SymPoint, w: SymSet },
    /// A chain whose supremum lies in `open` while no member does.
    NonMonotoneConvergenceDirected {
        family: SymSet,
        supremum: SymPoint,
        open: SymSet,
    },
}

impl CertificateBody {
    pub fn kind(&self) -> &'static str {
        match self {
            CertificateBody::NonCompactSingletonCover { .. } => "non_compact_singleton_cover",
            CertificateBody::NonSoberIrreducible { .. } => "non_sober_irreducible",
            CertificateBody::NonWeaklyHausdorffPair { .. } => "non_weakly_hausdorff_pair",
            CertificateBody::NonMonotoneConvergenceDirected { .. } => {
                "non_monotone_convergence_directed"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub reason: String,
}

impl Verdict {
    fn ok(reason: impl Into<String>) -> Self {
        Verdict {
            valid: true,
            reason: reason.into(),
        }
    }

    fn reject(reason: impl Into<String>) -> Self {
        Verdict {
            valid: false,
            reason: reason.into(),
        }
    }
}

/// Parses a certificate from JSON.
pub fn parse_certificate(json: &str) -> Result<Certificate> {
    serde_json::from_str(json).map_err(|e| Error::MalformedCertificate(e.to_string()))
}

/// Checks a certificate against its backend.
///
/// `Err` means the certificate could not be checked at all (malformed
/// data, or a kind the backend does not support). `Ok` with
/// `valid == false` means it was checked and does not establish its claim.
pub fn certificate_check(cert: &Certificate) -> Result<Verdict> {
    let space = cert.space;
    let malformed = |e: Error| Error::MalformedCertificate(e.to_string());
    match &cert.body {
        CertificateBody::NonCompactSingletonCover { target, pair } => {
            space.validate(target).map_err(malformed)?;
            check_singleton_cover(space, target, pair.as_ref())
        }
        CertificateBody::NonSoberIrreducible { closed } => {
            if space != EffectiveSpace::CofiniteNat {
                return Err(unsupported(cert));
            }
            space.validate(closed).map_err(malformed)?;
            Ok(check_irreducible_cofinite(closed))
        }
        CertificateBody::NonWeaklyHausdorffPair { x, y, w } => {
            space.validate_point(*x).map_err(malformed)?;
            space.validate_point(*y).map_err(malformed)?;
            space.validate(w).map_err(malformed)?;
            Ok(check_non_wh_pair(space, *x, *y, w))
        }
        CertificateBody::NonMonotoneConvergenceDirected {
            family,
            supremum,
            open,
        } => {
            space.validate(family).map_err(malformed)?;
            space.validate_point(*supremum).map_err(malformed)?;
            space.validate(open).map_err(malformed)?;
            Ok(check_directed(space, family, *supremum, open))
        }
    }
}

fn unsupported(cert: &Certificate) -> Error {
    Error::UnsupportedCertificate {
        kind: cert.body.kind().into(),
        space: cert.space.to_string(),
    }
}

/// The cover by singletons of an infinite set is pairwise disjoint, so any
/// subcover must keep every member and none is finite.
fn check_singleton_cover(
    space: EffectiveSpace,
    target: &SymSet,
    pair: Option<&(SymPoint, SymPoint)>,
) -> Result<Verdict> {
    if target.is_finite() {
        return Ok(Verdict::reject(format!("{target} is finite")));
    }
    if !space.nat_singletons_open() {
        return Ok(Verdict::reject(format!(
            "singletons of naturals are not open in {space}"
        )));
    }
    for p in target.extras() {
        if !space.is_open(&SymSet::point(p)) {
            return Ok(Verdict::reject(format!("{{{p}}} is not open in {space}")));
        }
    }
    let Some(&(x, y)) = pair else {
        return Ok(Verdict::ok(format!(
            "{target} is covered by disjoint open singletons; not compact"
        )));
    };
    for p in [x, y] {
        space
            .validate_point(p)
            .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    }
    let meet = space
        .upset(&SymSet::point(x))
        .intersection(&space.upset(&SymSet::point(y)));
    if &meet != target {
        return Ok(Verdict::reject(format!(
            "↑{x} ∩ ↑{y} = {meet}, not {target}"
        )));
    }
    Ok(Verdict::ok(format!(
        "↑{x} ∩ ↑{y} = {target} is covered by disjoint open singletons; not compact, so not weakly coherent"
    )))
}

/// On cofinite ℕ a closed set is finite or ℕ. Two distinct points of a
/// finite closed set are separated by the cofinite opens missing the other,
/// so finite closed sets are irreducible only as singletons, which are
/// their own generic points. ℕ is irreducible because non-empty opens are
/// cofinite and meet, and `cl{x} = {x}` is never ℕ.
fn check_irreducible_cofinite(closed: &SymSet) -> Verdict {
    let space = EffectiveSpace::CofiniteNat;
    if !space.is_closed(closed) {
        return Verdict::reject(format!("{closed} is not closed"));
    }
    if closed.is_finite() {
        return Verdict::reject(format!(
            "{closed} is finite; not irreducible without a generic point"
        ));
    }
    let has_generic = (0..64).any(|x| space.closure(&SymSet::point(SymPoint::Nat(x))) == *closed);
    if has_generic {
        return Verdict::reject("a sampled point is generic");
    }
    Verdict::ok(format!(
        "{closed} is irreducible closed with no generic point; not sober"
    ))
}

/// Decides whether opens `U ∋ x`, `V ∋ y` with `U ∩ V ⊆ w` exist.
///
/// With minimal neighbourhoods the best choice is `U = ↑x`, `V = ↑y`. On
/// cofinite ℕ, if `w` is non-empty (hence cofinite) then `U = w ∪ {x}` and
/// `V = w ∪ {y}` are open with `U ∩ V ⊆ w ∪ ({x} ∩ {y})`; the extra point is
/// `x` itself when `x = y`, which is in `w` since `↑x ∩ ↑y = {x} ⊆ w`. If `w`
/// is empty, `U ∩ V` is a non-empty cofinite set.
fn check_non_wh_pair(space: EffectiveSpace, x: SymPoint, y: SymPoint, w: &SymSet) -> Verdict {
    if !space.is_open(w) {
        return Verdict::reject(format!("{w} is not open"));
    }
    let meet = space
        .upset(&SymSet::point(x))
        .intersection(&space.upset(&SymSet::point(y)));
    if !meet.is_subset(w) {
        return Verdict::reject(format!("↑{x} ∩ ↑{y} = {meet} ⊄ {w}"));
    }
    let separable = match (
        space.minimal_neighbourhood(x),
        space.minimal_neighbourhood(y),
    ) {
        (Some(u), Some(v)) => u.intersection(&v).is_subset(w),
        _ => {
            debug_assert_eq!(space, EffectiveSpace::CofiniteNat);
            !w.is_empty()
        }
    };
    if separable {
        Verdict::reject(format!("opens around {x} and {y} meet inside {w}"))
    } else {
        Verdict::ok(format!(
            "every U ∋ {x}, V ∋ {y} have U ∩ V ⊄ {w}; not weakly Hausdorff"
        ))
    }
}

fn check_directed(space: EffectiveSpace, family: &SymSet, sup: SymPoint, open: &SymSet) -> Verdict {
    if family.is_empty() {
        return Verdict::reject("the family is empty");
    }
    if !space.is_chain(family) {
        return Verdict::reject(format!("{family} is not a chain"));
    }
    if space.supremum(family) != Some(sup) {
        return Verdict::reject(format!("{sup} is not the supremum of {family}"));
    }
    if !space.is_open(open) {
        return Verdict::reject(format!("{open} is not open"));
    }
    if !open.contains(sup) {
        return Verdict::reject(format!("{open} does not contain {sup}"));
    }
    if open.intersects(family) {
        return Verdict::reject(format!("{open} meets the family"));
    }
    Verdict::ok(format!(
        "{open} is open, contains ⋁{family} = {sup} and misses the chain; not Scott-open, so not a monotone convergence space"
    ))
}

/// The certificates for the negative claims about the three backends.
pub fn builtin_certificates() -> Vec<Certificate> {
    let nat = SymSet::nats(CofinSet::nat());
    vec![
        Certificate {
            space: EffectiveSpace::ScottNatAb,
            body: CertificateBody::NonCompactSingletonCover {
                target: nat.clone(),
                pair: Some((SymPoint::A, SymPoint::B)),
            },
        },
        Certificate {
            space: EffectiveSpace::AlexNatOmega,
            body: CertificateBody::NonMonotoneConvergenceDirected {
                family: nat.clone(),
                supremum: SymPoint::Omega,
                open: SymSet::point(SymPoint::Omega),
            },
        },
        Certificate {
            space: EffectiveSpace::CofiniteNat,
            body: CertificateBody::NonSoberIrreducible { closed: nat },
        },
        Certificate {
            space: EffectiveSpace::CofiniteNat,
            body: CertificateBody::NonWeaklyHausdorffPair {
                x: SymPoint::Nat(0),
                y: SymPoint::Nat(1),
                w: SymSet::empty(),
            },
        },
    ]
}
