use crate::error::{Error, Result};
use crate::exactla::matrix::dot;
use crate::exactla::{QMatrix, Rational, Subspace};

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: QMatrix,
}

impl BilinearForm {
    pub fn new(gram: QMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::LengthMismatch {
                expected: gram.rows(),
                got: gram.cols(),
            });
        }
        if gram != gram.transpose() {
            return Err(Error::CrossCheckFailed("Gram matrix is not symmetric".into()));
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        Ok(dot(x, &self.gram.mul_vec(y)?))
    }

    /// Functional `y ↦ form(x, y)` as a dual coordinate vector.
    pub fn functional(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.gram.mul_vec(x)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Gram matrix of the form restricted to the echelon basis of `s`.
    pub fn restricted_gram(&self, s: &Subspace) -> Result<QMatrix> {
        s.basis().mul(&self.gram)?.mul(&s.basis().transpose())
    }

    pub fn is_nondegenerate_on(&self, s: &Subspace) -> Result<bool> {
        Ok(self.restricted_gram(s)?.rank() == s.dim())
    }
}
