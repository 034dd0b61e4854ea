use thiserror::Error;

/// Errors raised by complex operations, invariant computations and the CLI surface.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate gluing: {0}")]
    DegenerateGluing(String),

    #[error("h-vector is not palindromic: {0}")]
    NotEulerian(String),

    #[error("resource cap exceeded: {0}")]
    Resource(String),

    #[error("could not draw a linear system of parameters: {0}")]
    UnluckyField(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
