use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} is out of range for a carrier of {n} points")]
    PointOutOfRange { point: usize, n: usize },

    #[error("carrier of {size} points exceeds the limit of {limit}")]
    TooManyPoints { size: usize, limit: usize },

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("not a preorder: {0}")]
    NotAPreorder(String),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("not a lens: {0}")]
    NotALens(String),

    #[error("not a quasi-lens: {0}")]
    NotAQuasiLens(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("certificate kind `{kind}` is not supported by backend `{space}`")]
    UnsupportedCertificate { kind: String, space: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
