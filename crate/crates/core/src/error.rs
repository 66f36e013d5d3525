use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("subspace is not invariant under the acting algebra")]
    NotInvariant,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("invalid Lie type: {0}")]
    InvalidType(String),
    #[error("partition {partition} is not admissible for {ty}")]
    InadmissiblePartition { ty: String, partition: String },
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("sl2 completion failed: {0}")]
    CompletionFailed(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartanMatrix(String),
    #[error("invalid parabolic spec: {0}")]
    InvalidSpec(String),
    #[error("ad h is not diagonalizable with integer eigenvalues")]
    NotIntegerDiagonalizable,
    #[error("no regular element found after {0} samples")]
    RegularElementNotFound(usize),
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
    #[error("symbolic certification exceeded its budget: {0}")]
    CertifyBudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
