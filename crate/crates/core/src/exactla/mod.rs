//! Exact rational linear algebra.

pub mod certify;
mod elim;
pub mod matrix;
pub mod pencil;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use certify::{certify_rank, symbolic_rank, CertifiedRank, CertifyRoute};
pub use matrix::QMatrix;
pub use pencil::{MatrixPencil, RankEstimate};
pub use rational::{rat, ratio, Rational};
pub use subspace::Subspace;

/// Exact rank of `m`.
pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}

/// Right kernel of `m`.
pub fn kernel(m: &QMatrix) -> Subspace {
    m.kernel()
}

/// Some solution of `a·x = b`, or `None` if inconsistent.
pub fn solve(a: &QMatrix, b: &[Rational]) -> crate::Result<Option<Vec<Rational>>> {
    a.solve(b)
}
