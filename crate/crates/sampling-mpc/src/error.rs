//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A function argument violated its precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A numeric input fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A request exceeded a built-in capacity limit (e.g. the prime table).
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A dynamical-system state was non-finite or otherwise unusable.
    #[error("invalid state: {0}")]
    InvalidState(String),
    /// Configuration failed validation before any work started.
    #[error("config error: {0}")]
    Config(String),
    /// A persisted artifact (dataset, checkpoint, tuning table) is unreadable.
    #[error("format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// True for errors that indicate bad configuration rather than a
    /// failure at runtime; the CLI maps these to exit code 2.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_) | Error::InvalidArgument(_))
    }
}
