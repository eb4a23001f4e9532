use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid cochain: {0}")]
    InvalidCochain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
