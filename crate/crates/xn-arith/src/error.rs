use thiserror::Error;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("radicand mismatch: {left} vs {right}")]
    RadicandMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} must be a positive non-square")]
    BadRadicand(String),
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(i128),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("level {n} is not admissible: {reason}")]
    InadmissibleLevel { n: i64, reason: String },
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i64, m: i64 },
    #[error("cannot parse decimal {0:?}")]
    BadDecimal(String),
}
