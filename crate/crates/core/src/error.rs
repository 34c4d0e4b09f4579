use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("submodule does not contain the relations: {0}")]
    NotASubmodule(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("module has {size} elements, above the enumeration bound {bound}")]
    TooLarge { size: String, bound: u64 },
    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
