use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by instance construction, data ingestion and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),

    /// The instance parameters are inconsistent (budget, sizes, ratio).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// An exponential routine was asked to enumerate more than it supports.
    #[error("capacity exceeded: {what} supports n <= {max}, got n = {n}")]
    Capacity { what: &'static str, max: usize, n: usize },

    /// The prior covariance is not symmetric positive definite.
    #[error("prior covariance is not symmetric positive definite: {0}")]
    NotPositiveDefinite(String),

    /// A dataset could not be parsed.
    #[error("{path}: {message}")]
    Ingest { path: PathBuf, message: String },

    /// An experiment config could not be parsed or validated.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInstance(msg.into())
    }

    pub(crate) fn ingest(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Ingest {
            path: path.into(),
            message: message.into(),
        }
    }

    /// True for errors that reflect bad input rather than a runtime limit.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Usage(_)
                | Error::InvalidInstance(_)
                | Error::Config(_)
                | Error::Ingest { .. }
                | Error::NotPositiveDefinite(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
