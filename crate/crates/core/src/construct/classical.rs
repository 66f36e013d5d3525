//! Classical Lie algebras as subalgebras of `gl_N`.
//!
//! `sl_N` is the traceless matrices. `so_N` and `sp_N` preserve the antidiagonal form
//! `J` with `J[i][N-1-i] = 1` (symmetric) or `±1` (skew, `+1` on the first half), so
//! upper-triangular matrices meet the algebra in a Borel subalgebra. The basis is the
//! echelon basis of the algebra inside `gl_N` (row-major), so the coordinates of a
//! matrix are its entries at the pivot positions.

use std::sync::Arc;

use num_traits::Zero;

use super::types::{ClassicalType, Family};
use crate::error::{Error, Result};
use crate::exactla::{rat, QMatrix, Rational, Subspace};
use crate::liecore::LieAlgebra;

#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    ty: ClassicalType,
    n: usize,
    form: Option<QMatrix>,
    basis: Subspace,
    algebra: Arc<LieAlgebra>,
}

type SparseMat = Vec<(usize, usize, Rational)>;

fn sparse_of_row(n: usize, row: &[Rational]) -> SparseMat {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k / n, k % n, c.clone()))
        .collect()
}

fn sparse_commutator(n: usize, a: &SparseMat, b: &SparseMat) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n * n];
    for (i, k, x) in a {
        for (k2, j, y) in b {
            if k == k2 {
                out[i * n + j] += x * y;
            }
        }
    }
    for (i, k, y) in b {
        for (k2, j, x) in a {
            if k == k2 {
                out[i * n + j] -= y * x;
            }
        }
    }
    out
}

/// Antidiagonal form: symmetric ones, or `+1` above and `-1` below the centre.
pub fn antidiagonal_form(n: usize, symmetric: bool) -> QMatrix {
    QMatrix::from_fn(n, n, |i, j| {
        if i + j + 1 != n {
            rat(0)
        } else if symmetric || i < n / 2 {
            rat(1)
        } else {
            rat(-1)
        }
    })
}

impl MatrixAlgebra {
    pub fn new(ty: ClassicalType) -> Result<Self> {
        let n = ty.matrix_size();
        let n2 = n * n;
        let (form, constraints) = match ty.form_is_symmetric() {
            None => {
                let trace = QMatrix::from_fn(1, n2, |_, k| if k / n == k % n { rat(1) } else { rat(0) });
                (None, trace)
            }
            Some(symmetric) => {
                let j = antidiagonal_form(n, symmetric);
                // (XᵀJ + JX)[a][b] = X[b'][a]·J[b'][b] + J[a][a']·X[a'][b], with i' = n-1-i
                let mut m = QMatrix::zeros(n2, n2);
                for a in 0..n {
                    for b in 0..n {
                        let (ap, bp) = (n - 1 - a, n - 1 - b);
                        m.add_at(a * n + b, bp * n + a, j.get(bp, b));
                        m.add_at(a * n + b, ap * n + b, j.get(a, ap));
                    }
                }
                (Some(j), m)
            }
        };
        let basis = constraints.kernel();
        if basis.dim() != ty.dim() {
            return Err(Error::CrossCheckFailed(format!(
                "{ty} has dimension {} but the constraint kernel has {}",
                ty.dim(),
                basis.dim()
            )));
        }
        let labels = basis
            .pivots()
            .iter()
            .map(|&k| {
                let (a, b) = (k / n + 1, k % n + 1);
                match ty.family() {
                    Family::A if a == b => format!("H{a}"),
                    Family::A => format!("E{a},{b}"),
                    _ => format!("X{a},{b}"),
                }
            })
            .collect();
        let mats: Vec<SparseMat> = (0..basis.dim()).map(|i| sparse_of_row(n, basis.vector(i))).collect();
        let pivots = basis.pivots().to_vec();
        let algebra = LieAlgebra::from_bracket_fn(labels, |i, j| {
            let c = sparse_commutator(n, &mats[i], &mats[j]);
            Ok(pivots.iter().map(|&p| c[p].clone()).collect())
        })?;
        Ok(MatrixAlgebra {
            ty,
            n,
            form,
            basis,
            algebra: Arc::new(algebra),
        })
    }

    pub fn ty(&self) -> ClassicalType {
        self.ty
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> Option<&QMatrix> {
        self.form.as_ref()
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    /// The algebra as a subspace of `gl_N` in row-major coordinates.
    pub fn gl_subspace(&self) -> &Subspace {
        &self.basis
    }

    pub fn matrix_of(&self, x: &[Rational]) -> Result<QMatrix> {
        let flat = self.basis.combine(x)?;
        Ok(QMatrix::from_fn(self.n, self.n, |i, j| flat[i * self.n + j].clone()))
    }

    /// Coordinates of a matrix lying in the algebra.
    pub fn element_of(&self, m: &QMatrix) -> Result<Vec<Rational>> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: m.rows(),
            });
        }
        let flat: Vec<Rational> = (0..self.n * self.n)
            .map(|k| m.get(k / self.n, k % self.n).clone())
            .collect();
        self.basis
            .coordinates(&flat)?
            .ok_or_else(|| Error::SolveFailed(format!("matrix is not in {}", self.ty)))
    }

    /// Basis matrices: the defining representation.
    pub fn basis_matrices(&self) -> Vec<QMatrix> {
        (0..self.basis.dim())
            .map(|i| {
                self.matrix_of(&self.algebra.basis_vector(i))
                    .expect("basis coordinates")
            })
            .collect()
    }

    /// Subspace of the algebra made of the matrices whose entries vanish wherever
    /// `keep(row, col)` is false.
    pub fn pattern_subspace(&self, keep: impl Fn(usize, usize) -> bool) -> Result<Subspace> {
        let n = self.n;
        let pattern = Subspace::from_vectors(
            n * n,
            (0..n * n)
                .filter(|&k| keep(k / n, k % n))
                .map(|k| {
                    let mut v = vec![Rational::zero(); n * n];
                    v[k] = rat(1);
                    v
                })
                .collect(),
        )?;
        let inter = self.basis.intersect(&pattern)?;
        let coords = (0..inter.dim())
            .map(|i| {
                Ok(self
                    .basis
                    .coordinates(inter.vector(i))?
                    .expect("intersection lies in the algebra"))
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.algebra.dim(), coords)
    }
}

/// `classical(t)`: the matrix realization as a standalone algebra.
pub fn classical(t: ClassicalType) -> Result<LieAlgebra> {
    Ok((*MatrixAlgebra::new(t)?.algebra).clone())
}
