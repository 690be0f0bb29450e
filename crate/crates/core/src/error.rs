use thiserror::Error;

/// Errors raised by exact-arithmetic and structure operations.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u64 },

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("subspace is not a two-sided ideal: witness basis index {index}")]
    NotAnIdeal { index: usize },

    #[error("not a Hopf ideal: {reason}")]
    NotAHopfIdeal { reason: String },

    #[error("element is not an involutive grouplike: {reason}")]
    NotInvolutiveGrouplike { reason: String },

    #[error("element is not grouplike: {reason}")]
    NotGrouplike { reason: String },

    #[error("element of the tensor square is not invertible")]
    NotInvertible,

    #[error("not a twist: {reason}")]
    NotATwist { reason: String },

    #[error("action is not a group homomorphism: {reason}")]
    NotAHomomorphism { reason: String },

    #[error("invalid group table: {reason}")]
    InvalidGroupTable { reason: String },

    #[error("Yetter-Drinfeld datum rejected: chi_{i}(g_{j}) != -1")]
    YdConditionFailed { i: usize, j: usize },

    #[error("precondition failed: {reason}")]
    Precondition { reason: String },

    #[error("enumeration incomplete: {reason}")]
    Indeterminate { reason: String },

    #[error("parse error in field `{field}`: {reason}")]
    Parse { field: String, reason: String },
}

impl ExactError {
    pub fn precondition(reason: impl Into<String>) -> Self {
        ExactError::Precondition {
            reason: reason.into(),
        }
    }
}
