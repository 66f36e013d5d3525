use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rational};

use super::algebra::LieAlgebra;

/// A finite-dimensional representation: one matrix per basis vector of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    module_dim: usize,
    action: Vec<QMatrix>,
}

impl Representation {
    pub fn new(algebra: Arc<LieAlgebra>, module_dim: usize, action: Vec<QMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::LengthMismatch {
                expected: algebra.dim(),
                got: action.len(),
            });
        }
        if let Some(m) = action.iter().find(|m| m.rows() != module_dim || m.cols() != module_dim) {
            return Err(Error::LengthMismatch {
                expected: module_dim,
                got: m.rows().max(m.cols()),
            });
        }
        Ok(Representation {
            algebra,
            module_dim,
            action,
        })
    }

    /// Zero action on a module of dimension `module_dim`.
    pub fn trivial(algebra: Arc<LieAlgebra>, module_dim: usize) -> Self {
        let action = vec![QMatrix::zeros(module_dim, module_dim); algebra.dim()];
        Representation {
            algebra,
            module_dim,
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn acting_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self, i: usize) -> &QMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[QMatrix] {
        &self.action
    }

    /// Matrix of an arbitrary algebra element.
    pub fn matrix_of(&self, x: &[Rational]) -> Result<QMatrix> {
        self.algebra.check(x)?;
        let mut m = QMatrix::zeros(self.module_dim, self.module_dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !num_traits::Zero::is_zero(c) {
                m = m.add(&a.scale(c))?;
            }
        }
        Ok(m)
    }

    /// `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` on all basis pairs.
    pub fn validate(&self) -> bool {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self
                    .matrix_of(
                        &self
                            .algebra
                            .bracket(&self.algebra.basis_vector(i), &self.algebra.basis_vector(j))
                            .expect("basis vectors"),
                    )
                    .expect("matching sizes");
                let rhs = self.action[i].commutator(&self.action[j]).expect("square matrices");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}
