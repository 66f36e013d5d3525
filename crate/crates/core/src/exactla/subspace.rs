//! Linear subspaces of `Q^n` held in reduced row-echelon form.
//!
//! The echelon basis is canonical, so structural equality is subspace equality.

use num_traits::Zero;

use super::matrix::{axpy, is_zero_vec, QMatrix};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: QMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: QMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: QMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let m = QMatrix::from_rows(ambient, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &QMatrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The echelon basis, one row per basis vector.
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::LengthMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo this subspace; it vanishes at every pivot.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v)?;
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let s = -w[p].clone();
                axpy(&mut w, &s, self.basis.row(r));
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// `Σ c_i b_i` for coordinates `c` in the echelon basis.
    pub fn combine(&self, coords: &[Rational]) -> Result<Vec<Rational>> {
        if coords.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        let mut v = vec![Rational::zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            axpy(&mut v, c, self.basis.row(r));
        }
        Ok(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for r in 0..self.dim() {
            if !other.contains(self.vector(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let (ds, dt) = (self.dim(), other.dim());
        // Columns are the basis vectors of both spaces; kernel vectors (a, b) give a·S = b·T.
        let m = QMatrix::from_fn(self.ambient, ds + dt, |i, j| {
            if j < ds {
                self.basis.get(j, i).clone()
            } else {
                -other.basis.get(j - ds, i)
            }
        });
        let ker = m.kernel();
        let vectors = (0..ker.dim())
            .map(|r| self.combine(&ker.vector(r)[..ds]))
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.ambient, vectors)
    }

    pub fn is_direct(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim() + other.dim())
    }

    /// Image of this subspace under `m` (acting on column vectors).
    pub fn image_under(&self, m: &QMatrix) -> Result<Subspace> {
        let vectors = (0..self.dim())
            .map(|r| m.mul_vec(self.vector(r)))
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(m.rows(), vectors)
    }

    /// Preimage `{v : m·v ∈ self}` of this subspace under `m`.
    pub fn preimage_under(&self, m: &QMatrix) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, m.rows()));
        }
        // m·v ∈ S  ⟺  the non-pivot coordinates of reduce(m·v) vanish.
        let quotient = self.quotient_matrix();
        Ok(quotient.mul(m)?.kernel())
    }

    /// Matrix of the projection `Q^n → Q^n / S`, reading the non-pivot coordinates
    /// of the canonical representative.
    pub fn quotient_matrix(&self) -> QMatrix {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&c| !is_pivot[c]).collect();
        // reduce(e_j) = e_j − Σ_r [j = p_r] row_r; read off at free columns.
        let mut q = QMatrix::zeros(free.len(), self.ambient);
        for (i, &c) in free.iter().enumerate() {
            q.set(i, c, Rational::from_integer(1.into()));
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            for (i, &c) in free.iter().enumerate() {
                let v = self.basis.get(r, c);
                if !v.is_zero() {
                    q.set(i, p, -v);
                }
            }
        }
        q
    }

    /// Annihilator `{x : ⟨x, v⟩ = 0 for all v in S}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }
}
