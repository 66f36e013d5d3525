//! Kernel vectors of the Kirillov form from trace invariants.
//!
//! Let `ρ` be a representation whose trace form `B(x, y) = tr ρ(x)ρ(y)` is
//! nondegenerate, and write `ξ = B(X, ·)`. For every `j`, the vector `Y_j` with
//! `B(Y_j, b) = tr(ρ(X)^j ρ(b))` lies in `z(X)`, which is the kernel of `K(ξ)`.
//! These are polynomial in `ξ`, so `m` of them independent at one point are
//! independent on a dense open set and bound the generic rank by `dim − m`.

use crate::error::{Error, Result};
use crate::exactla::{MatrixPencil, QMatrix, Rational, Subspace};
use crate::liecore::LieAlgebra;

#[derive(Clone, Debug)]
pub struct TraceRep {
    mats: Vec<QMatrix>,
    gram_inv: QMatrix,
}

impl TraceRep {
    /// Checks that `mats` is a representation of `l` with nondegenerate trace form.
    pub fn new(l: &LieAlgebra, mats: Vec<QMatrix>) -> Result<Self> {
        let n = l.dim();
        if mats.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: mats.len(),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = mats[i].commutator(&mats[j])?;
                let mut rhs = QMatrix::zeros(lhs.rows(), lhs.cols());
                for (k, c) in l.structure(i, j) {
                    rhs = rhs.add(&mats[*k].scale(c))?;
                }
                if lhs != rhs {
                    return Err(Error::CrossCheckFailed(format!(
                        "matrices do not represent [{}, {}]",
                        l.labels()[i],
                        l.labels()[j]
                    )));
                }
            }
        }
        Self::unchecked(mats)
    }

    /// The adjoint representation; needs a nondegenerate Killing form.
    pub fn adjoint(l: &LieAlgebra) -> Result<Self> {
        if !l.validate() {
            return Err(Error::CrossCheckFailed("structure constants fail Jacobi".into()));
        }
        Self::unchecked((0..l.dim()).map(|i| l.ad_basis(i)).collect())
    }

    fn unchecked(mats: Vec<QMatrix>) -> Result<Self> {
        let n = mats.len();
        let gram = QMatrix::from_fn(n, n, |i, j| {
            mats[i].mul(&mats[j]).expect("square matrices of one size").trace()
        });
        let gram_inv = gram
            .inverse()?
            .ok_or_else(|| Error::CrossCheckFailed("trace form is degenerate".into()))?;
        Ok(TraceRep { mats, gram_inv })
    }

    /// Rank of the trace-invariant kernel vectors at `xi`, stopping once `needed` is
    /// reached. Each vector is checked to lie in the kernel of `p(xi)`.
    pub fn kernel_rank(&self, p: &MatrixPencil, xi: &[Rational], needed: usize) -> Result<usize> {
        let n = self.mats.len();
        if needed == 0 {
            return Ok(0);
        }
        let x = self.gram_inv.mul_vec(xi)?;
        let size = self.mats[0].rows();
        let mut xm = QMatrix::zeros(size, size);
        for (c, m) in x.iter().zip(&self.mats) {
            if !num_traits::Zero::is_zero(c) {
                xm = xm.add(&m.scale(c))?;
            }
        }
        let kxi = p.evaluate(xi)?;
        let mut power = QMatrix::identity(size);
        let mut found = Subspace::zero(n);
        for _ in 1..size.max(2) {
            power = power.mul(&xm)?;
            let t: Vec<Rational> = self
                .mats
                .iter()
                .map(|m| power.mul(m).map(|pm| pm.trace()))
                .collect::<Result<_>>()?;
            let y = self.gram_inv.mul_vec(&t)?;
            if kxi.mul_vec(&y)?.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                return Err(Error::CrossCheckFailed(
                    "trace invariant vector outside the kernel".into(),
                ));
            }
            found = found.sum(&Subspace::from_vectors(n, vec![y])?)?;
            if found.dim() >= needed {
                break;
            }
        }
        Ok(found.dim())
    }
}
