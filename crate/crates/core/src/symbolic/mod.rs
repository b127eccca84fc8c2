//! Finite-or-cofinite representations of three infinite spaces, with
//! decision procedures where the structure allows and certificate checks
//! elsewhere.

mod backends;
mod certificate;
mod cofin;
mod cofinite;

pub use backends::{Capabilities, EffectiveSpace, SymPoint, SymSet};
pub use certificate::{
    builtin_certificates, certificate_check, parse_certificate, Certificate, CertificateBody,
    Verdict,
};
pub use cofin::{cofin_algebra, representable_sets, CofinOp, CofinSet, CofinValue};
pub use cofinite::{
    cn_counterexample_suite, cn_em_leq, cn_image_of_iota, cn_image_of_iota_by_search, cn_iota,
    cn_quasi_lens, cn_quasi_lens_classification, cn_quasi_lens_conditions, cn_tem_leq,
    cofinite_space_ops, CofiniteOps, CounterexampleReport, QuasiLensVerdict, GENERIC_POINT_SAMPLES,
};
