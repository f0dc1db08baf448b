use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("pole at {point}: {what}")]
    Pole { point: String, what: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {degree} exceeds truncation degree {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, MathError>;
