//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("radicand {0} is not a square-free nonzero integer")]
    NotSquareFree(i64),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("group too large: more than {0} elements")]
    GroupTooLarge(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("ring fails the fusion axioms: {0}")]
    NotAxiomatic(String),
    #[error("invalid subring: {0}")]
    InvalidSubring(String),
    #[error("unsupported action: {0}")]
    UnsupportedAction(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
