use thiserror::Error;

/// Errors raised by structure construction, queries and file handling.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid ground set: {0}")]
    InvalidGroundSet(String),

    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("structure has not been validated as a binary poset")]
    NotValidated,

    #[error("structure is not a binary poset")]
    NotBiPoset,

    #[error("{what}: requested {requested}, limit is {limit}")]
    ResourceLimit { what: &'static str, requested: u64, limit: u64 },

    #[error("{message}, line {line}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
