use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficient domain mismatch")]
    DomainMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid PD code: {0}")]
    InvalidPd(String),
    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid symmetric union data: {0}")]
    InvalidUnion(String),
    #[error("{0}")]
    Domain(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
}
