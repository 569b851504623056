use thiserror::Error;

use crate::paradox::BukhReport;

/// Errors produced by the library and surfaced by the CLI with exit code 2
/// (except where the CLI maps a property failure to exit code 1).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exhaustive scan was requested on an instance above its size guard.
    #[error("capacity exceeded: {what} needs n <= {limit}, got n = {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    /// A construction step produced something its own argument rules out.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("construction failed after {} attempt(s)", .0.attempts.len())]
    ConstructionFailed(Box<BukhReport>),

    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
