//! Structure-constant Lie algebras, their representations and invariant forms.

pub mod algebra;
pub mod form;
pub mod json;
pub mod rep;

pub use algebra::{linear_combination, semidirect, LieAlgebra, SparseVec};
pub use form::BilinearForm;
pub use rep::Representation;
