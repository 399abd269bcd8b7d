use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` is reserved for violated theorem-level consistency checks,
/// which indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("line {line}, column {column}: {message}")]
    Table {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("{0}")]
    Domain(String),

    #[error("enumeration cap exceeded: length {requested} > cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    /// True for failures that indicate a bug in this crate.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
