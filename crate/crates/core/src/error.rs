use thiserror::Error;

use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("invalid field: {0}")]
    Field(String),
    #[error("invalid scalar: {0}")]
    Scalar(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown product label {0:?}")]
    UnknownLabel(String),
    #[error("algebra does not declare product {0}")]
    MissingProduct(String),
    #[error("invalid algebra: {0}")]
    Invalid(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget exceeded: {candidates} candidates > budget {budget}; constrain with a pattern")]
    Budget { candidates: u128, budget: u128 },
    #[error("{path}: {message}")]
    Shape { path: String, message: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
