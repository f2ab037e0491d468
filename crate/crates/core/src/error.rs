use thiserror::Error;

/// Failures raised while building families or evaluating bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a family needs at least one test vector")]
    EmptyFamily,

    #[error("vector has zero dimension")]
    ZeroDimension,

    #[error("non-finite coordinate in {0}")]
    NonFinite(String),

    #[error("real-field family has a non-zero imaginary part in {0}")]
    NotReal(String),

    #[error("reference vector is zero")]
    DegenerateReference,

    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coefficient {index} = {value} lies outside the disk")]
    OutsideDisk { index: usize, value: String },

    #[error("no extremal family exists: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, BoundError>;
