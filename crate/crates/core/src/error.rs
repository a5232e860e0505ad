use thiserror::Error;

/// Errors surfaced by the library. Budget overruns are reported here only where
/// an operation cannot return a three-valued verdict instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("variable `{0}` has no value in the valuation")]
    Unbound(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("not subdirectly irreducible: {0}")]
    NotSubdirectlyIrreducible(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
