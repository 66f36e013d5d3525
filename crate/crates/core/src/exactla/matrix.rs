//! Dense matrices over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use super::elim;
use super::rational::{rat, Rational};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major rational matrix. `0×n` and `n×0` shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(QMatrix { rows: n, cols, data })
    }

    /// Convenience for tests and literals. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                r.iter().map(|&x| rat(x)).collect()
            })
            .collect();
        Self::from_rows(cols, rows).expect("checked above")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn add(&self, other: &QMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &QMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &QMatrix) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &QMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(QMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    fn check_same_shape(&self, other: &QMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        elim::integer_rank(elim::integer_rows(self), self.cols)
    }

    /// Reduced row-echelon form with zero rows dropped, plus the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows = elim::integer_rows(self);
        let pivots = elim::echelon(&mut rows, self.cols, true);
        let mut data = Vec::with_capacity(pivots.len() * self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            let lead = Rational::from_integer(rows[r][p].clone());
            data.extend(rows[r].iter().map(|x| Rational::from_integer(x.clone()) / &lead));
        }
        (
            QMatrix {
                rows: pivots.len(),
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    /// Right kernel `{v : self·v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.cols, vectors).expect("kernel vectors have the ambient length")
    }

    /// Some `x` with `self·x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let aug = QMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Determinant of a square matrix by rational Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                let f = a.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(c, j) * &f;
                    a.data[i * n + j] -= v;
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<QMatrix>> {
        if !self.is_square() {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        Ok(Some(QMatrix::from_fn(n, n, |i, j| r.get(i, n + j).clone())))
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// `a + s·b`, entrywise.
pub fn axpy(a: &mut [Rational], s: &Rational, b: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += s * y;
        }
    }
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
