//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A text input could not be parsed. `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A structurally valid input violates a type invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// Too few or degenerate samples for a fit.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A metric was requested on an empty profile.
    #[error("no signal: empty profile")]
    NoSignal,

    /// A synthesis spec is internally inconsistent.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
