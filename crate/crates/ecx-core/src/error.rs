//! Error type shared by every solver and parser in the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: violated invariants, bad files, mismatched domains.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exact search would exceed its configured limit.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Missing or unusable external configuration (e.g. no solver binary).
    #[error("configuration: {0}")]
    Config(String),

    /// An internal invariant failed; always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
