use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("carrier did not return to vacuum within {cap} extension boxes")]
    Runaway { cap: usize },

    #[error("enumeration size {size} exceeds guard {limit}")]
    SizeGuard { size: u128, limit: u128 },

    #[error("internal consistency violated: {0}")]
    Integrity(String),

    #[error("solitons did not separate within {steps} steps")]
    Timeout { steps: usize },

    #[error("negative field component {value} at t={t}, n={n}, j={j}")]
    SolutionValidity { t: i64, n: i64, j: usize, value: i64 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
