//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong in exact computations: contract violations
/// (mismatched rings, bad indices) and genuinely impossible requests
/// (inverting zero, quotient bases of positive-dimensional ideals).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operands belong to different polynomial rings")]
    RingMismatch,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions incompatible: {0}")]
    DimensionMismatch(String),

    #[error("an ideal needs at least one generator")]
    EmptyGeneratorList,

    #[error("ideal generators must be nonzero")]
    ZeroGenerator,

    #[error("colon ideal divisor must be nonzero")]
    ZeroDivisorPolynomial,

    #[error("ideal is not zero-dimensional for this operation")]
    NotZeroDimensional,

    #[error("point does not satisfy the generators (generator {index} is nonzero there)")]
    PointNotOnVariety { index: usize },

    #[error("inconsistent local data: tangent dimension 0 with local length {local_dim}")]
    InconsistentInput { local_dim: usize },

    #[error("codimension {codim} exceeds ambient dimension {ambient}")]
    BadCodim { codim: usize, ambient: usize },

    #[error("subspaces live in different ambient dimensions")]
    AmbientMismatch,

    #[error("degenerate-draw budget exhausted after {redraws} redraws")]
    RedrawLimitExceeded { redraws: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("rank n={n} is not supported here (need n >= {min})")]
    UnsupportedN { n: usize, min: usize },

    #[error("coefficient field mode does not match the requested scalar type")]
    CoeffFieldMismatch,

    #[error("the quantum parameter must be nonzero when specialized")]
    ZeroQuantumParameter,

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
