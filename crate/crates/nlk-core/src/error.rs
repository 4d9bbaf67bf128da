use thiserror::Error;

/// Errors surfaced by the exact kernels.
///
/// Mathematical *violations* (a bracket table failing the fundamental
/// identity, a form failing invariance) are not errors: checkers return a
/// [`crate::report::ViolationReport`] instead. `Error` covers misuse of an
/// operation: mismatched dimensions, unmet preconditions, bad parameters.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed scalar literal: {0:?}")]
    ScalarSyntax(String),

    #[error("bracket tuple {0:?} is not strictly increasing in 1..=dim")]
    BadTuple(Vec<usize>),

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("subspace is not isotropic")]
    NotIsotropic,

    #[error("bilinear form is not symmetric")]
    NotSymmetric,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("metric algebra has not passed verification; run verify() first")]
    Unverified,

    #[error("verification of a constructed algebra failed: {0}")]
    VerificationFailed(String),

    #[error("classification invariants are inconsistent: {0}")]
    Inconsistent(String),

    #[error("linear system has no solution")]
    NoSolution,
}

pub type Result<T> = std::result::Result<T, Error>;
