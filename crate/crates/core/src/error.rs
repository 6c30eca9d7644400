use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid user-supplied configuration (profiles, ratios, grids).
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation was called outside its domain (empty corpus, k out of
    /// range, missing label, dimension mismatch).
    #[error("domain error: {0}")]
    Domain(String),

    /// A metric is mathematically undefined for the given inputs and the
    /// caller asked for a definite value.
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// An internal invariant was violated; this is a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
