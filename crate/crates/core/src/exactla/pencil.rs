//! Matrices whose entries are linear forms in `k` variables.

use num_traits::Zero;
use serde::Serialize;

use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::par;
use crate::rng::{random_point, RandomCfg};

/// A linear form stored sparsely as `(variable, coefficient)` pairs, sorted by variable.
pub type LinearForm = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPencil {
    rows: usize,
    cols: usize,
    num_vars: usize,
    entries: Vec<LinearForm>,
}

/// Outcome of a randomized generic-rank estimate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankEstimate {
    pub rank: usize,
    pub trial_ranks: Vec<usize>,
    /// The first sample point attaining `rank`.
    #[serde(skip)]
    pub witness: Vec<Rational>,
}

impl MatrixPencil {
    pub fn zeros(rows: usize, cols: usize, num_vars: usize) -> Self {
        MatrixPencil {
            rows,
            cols,
            num_vars,
            entries: vec![Vec::new(); rows * cols],
        }
    }

    /// Builds a pencil from dense coefficient vectors of length `num_vars`.
    pub fn from_dense(rows: usize, cols: usize, num_vars: usize, coeffs: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let mut p = Self::zeros(rows, cols, num_vars);
        if coeffs.len() != rows {
            return Err(Error::LengthMismatch {
                expected: rows,
                got: coeffs.len(),
            });
        }
        for (i, row) in coeffs.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != num_vars {
                    return Err(Error::LengthMismatch {
                        expected: num_vars,
                        got: v.len(),
                    });
                }
                let form = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                p.entries[i * cols + j] = form;
            }
        }
        Ok(p)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn entry(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.entries[i * self.cols + j]
    }

    /// Sets entry `(i, j)`; zero coefficients are dropped and variables sorted.
    pub fn set_entry(&mut self, i: usize, j: usize, form: LinearForm) -> Result<()> {
        if let Some((v, _)) = form.iter().find(|(v, _)| *v >= self.num_vars) {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                got: v + 1,
            });
        }
        let mut form: LinearForm = form.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        form.sort_by_key(|(v, _)| *v);
        self.entries[i * self.cols + j] = form;
        Ok(())
    }

    /// Dense coefficient vector of entry `(i, j)`.
    pub fn coefficient_vector(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.num_vars];
        for (k, c) in self.entry(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.num_vars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.entry(i, j).to_vec();
            }
        }
        t
    }

    /// True when `entry(i, j) = −entry(j, i)` for all `i, j`.
    pub fn is_skew(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                let a = self.entry(i, j);
                let b = self.entry(j, i);
                if a.len() != b.len() || a.iter().zip(b).any(|((va, ca), (vb, cb))| va != vb || *ca != -cb) {
                    return false;
                }
            }
        }
        true
    }

    /// Entrywise evaluation at `xi`.
    pub fn evaluate(&self, xi: &[Rational]) -> Result<QMatrix> {
        if xi.len() != self.num_vars {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                got: xi.len(),
            });
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |i, j| {
            let mut s = Rational::zero();
            for (k, c) in self.entry(i, j) {
                if !xi[*k].is_zero() {
                    s += c * &xi[*k];
                }
            }
            s
        }))
    }

    /// Generic rank estimate: the maximum rank over `cfg.trials` integer sample points.
    ///
    /// Sample points come from one seeded stream, so a run with more trials extends a
    /// run with fewer. The result is a lower bound for the true generic rank; it is
    /// wrong only when every sample lands on the degeneracy locus, which by
    /// Schwartz–Zippel has probability at most `(min(rows, cols) / (2·bound + 1))^trials`.
    pub fn generic_rank(&self, cfg: &RandomCfg) -> usize {
        self.estimate_rank(cfg).rank
    }

    pub fn estimate_rank(&self, cfg: &RandomCfg) -> RankEstimate {
        let cfg = cfg.normalized();
        let mut rng = cfg.rng();
        let points: Vec<Vec<Rational>> = (0..cfg.trials)
            .map(|_| random_point(&mut rng, self.num_vars, cfg.coeff_bound))
            .collect();
        let full = self.rows.min(self.cols);
        let trial_ranks: Vec<usize> = if self.is_zero() {
            vec![0; points.len()]
        } else {
            par::map(&points, |xi| {
                self.evaluate(xi).expect("sample point has num_vars entries").rank()
            })
        };
        let rank = trial_ranks.iter().copied().max().unwrap_or(0);
        let best = trial_ranks.iter().position(|&r| r == rank).unwrap_or(0);
        debug_assert!(rank <= full);
        RankEstimate {
            rank,
            witness: points.into_iter().nth(best).unwrap_or_default(),
            trial_ranks,
        }
    }
}
