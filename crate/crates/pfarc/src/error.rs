use thiserror::Error;

/// Errors surfaced by the algebraic core.
///
/// Verification *failures* (a rank mismatch, a non-dominating pair) are
/// verdicts carried in reports, not errors; this type covers contract
/// violations only.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index ({u},{v}) with jet weight {k} out of bounds for p = {p}")]
    IndexOutOfBounds { u: u32, v: u32, k: u32, p: u32 },

    #[error("operands live over different generator alphabets: {lhs} vs {rhs}")]
    AlphabetMismatch { lhs: String, rhs: String },

    #[error("sequence {0:?} has odd length")]
    OddLength(Vec<u32>),

    #[error("rows {0:?} are not strictly increasing")]
    NonMonotoneRows(Vec<u32>),

    #[error("size violation: sequence of size {j} cannot be compared against element of size {e}")]
    SizeViolation { j: usize, e: usize },

    #[error("polynomial is not homogeneous of a single bidegree")]
    NonHomogeneous,

    #[error("linear solve produced a non-integer coefficient for {context}: this contradicts the integral basis certificate")]
    NonIntegralSolution { context: String },

    #[error("vector has support outside the graded piece: {0}")]
    PieceMembership(String),

    #[error("input is not a standard product")]
    NotStandard,

    #[error("target is not in the span of the supplied vectors")]
    NotInSpan,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
