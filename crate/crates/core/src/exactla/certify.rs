//! Deterministic generic rank of a pencil.
//!
//! A sampled evaluation always gives a valid lower bound. The matching upper bound
//! comes from one of two exact routes:
//!
//! * polynomial kernel witnesses: vectors of polynomials `w(ξ)` with `P(ξ)·w(ξ) ≡ 0`,
//!   checked symbolically, and linearly independent at some point; `m` such vectors
//!   bound the rank by `cols − m`;
//! * fraction-free symbolic elimination over `Z[ξ]`, bounded by a term budget.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::QMatrix;
use super::pencil::{MatrixPencil, RankEstimate};
use super::poly::{Monomial, Poly};
use super::rational::{denominator_lcm, Rational};
use crate::error::{Error, Result};

/// Default cap on the number of live polynomial terms during symbolic elimination.
pub const DEFAULT_TERM_BUDGET: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertifyRoute {
    /// A sample already attains `min(rows, cols)`.
    FullRank,
    KernelWitness,
    /// Kernel vectors built from trace invariants of a representation.
    TraceInvariants,
    SymbolicElimination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedRank {
    pub rank: usize,
    pub route: CertifyRoute,
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128()
        .ok_or_else(|| Error::CertifyBudgetExceeded("coefficient exceeds i128".into()))
}

/// Rows of the pencil as integer polynomials; each row is scaled by its denominators,
/// which changes neither the rank nor the right kernel.
pub fn integer_rows(p: &MatrixPencil) -> Result<Vec<Vec<Poly>>> {
    let mut out = Vec::with_capacity(p.rows());
    for i in 0..p.rows() {
        let l = denominator_lcm((0..p.cols()).flat_map(|j| p.entry(i, j).iter().map(|(_, c)| c)));
        let mut row = Vec::with_capacity(p.cols());
        for j in 0..p.cols() {
            let form = p
                .entry(i, j)
                .iter()
                .map(|(v, c)| Ok((*v, to_i128(&(c.numer() * (&l / c.denom())))?)))
                .collect::<Result<Vec<_>>>()?;
            row.push(Poly::linear(&form)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// Exact generic rank by fraction-free elimination over `Z[ξ]` with full pivoting.
///
/// Each surviving entry after step `k` is a `(k+1)`-minor, so the rank is the
/// number of steps before the trailing block vanishes identically.
pub fn symbolic_rank(p: &MatrixPencil, term_budget: usize) -> Result<usize> {
    let mut m = integer_rows(p)?;
    let (rows, cols) = (p.rows(), p.cols());
    let mut prev = Poly::constant(1);
    let mut k = 0;
    while k < rows.min(cols) {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if !e.is_zero() && best.is_none_or(|(_, _, t)| e.num_terms() < t) {
                    best = Some((i, j, e.num_terms()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        let pivot = m[k][k].clone();
        let mut live = 0usize;
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..cols {
                let mut num = pivot.mul(&row[j])?;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num = num.sub(&lead.mul(&pivot_row[j])?)?;
                }
                let q = num
                    .exact_div(&prev)?
                    .ok_or_else(|| Error::CrossCheckFailed("inexact division in symbolic elimination".into()))?;
                live += q.num_terms();
                if live > term_budget {
                    return Err(Error::CertifyBudgetExceeded(format!(
                        "more than {term_budget} terms at elimination step {k}"
                    )));
                }
                row[j] = q;
            }
        }
        prev = pivot;
        k += 1;
    }
    Ok(k)
}

/// True when `P(ξ)·w(ξ)` vanishes identically for every witness `w`.
pub fn witnesses_annihilate(p: &MatrixPencil, witnesses: &[Vec<Poly>]) -> Result<bool> {
    let rows = integer_rows(p)?;
    for w in witnesses {
        if w.len() != p.cols() {
            return Err(Error::LengthMismatch {
                expected: p.cols(),
                got: w.len(),
            });
        }
        for row in &rows {
            let mut acc = Poly::zero();
            for (e, wj) in row.iter().zip(w) {
                if e.is_zero() || wj.is_zero() {
                    continue;
                }
                for (m, c) in e.terms() {
                    acc.add_scaled(wj, *c, m)?;
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Evaluates polynomial vectors at `point`.
pub fn evaluate_witnesses(witnesses: &[Vec<Poly>], point: &[Rational]) -> QMatrix {
    let cols = witnesses.first().map_or(0, Vec::len);
    QMatrix::from_fn(witnesses.len(), cols, |i, j| witnesses[i][j].evaluate(point))
}

/// Upgrades a sampled rank estimate to an exact generic rank.
///
/// Witnesses are optional; without them (or when they do not close the gap) the
/// symbolic elimination route runs under `term_budget`.
pub fn certify_rank(
    p: &MatrixPencil,
    estimate: &RankEstimate,
    witnesses: &[Vec<Poly>],
    term_budget: usize,
) -> Result<CertifiedRank> {
    let full = p.rows().min(p.cols());
    if estimate.rank == full {
        return Ok(CertifiedRank {
            rank: full,
            route: CertifyRoute::FullRank,
        });
    }
    if !witnesses.is_empty() && witnesses_annihilate(p, witnesses)? {
        let independent = evaluate_witnesses(witnesses, &estimate.witness).rank();
        if estimate.rank + independent == p.cols() {
            return Ok(CertifiedRank {
                rank: estimate.rank,
                route: CertifyRoute::KernelWitness,
            });
        }
    }
    let rank = symbolic_rank(p, term_budget)?;
    if rank < estimate.rank {
        return Err(Error::CrossCheckFailed(format!(
            "symbolic rank {rank} below a sampled rank {}",
            estimate.rank
        )));
    }
    Ok(CertifiedRank {
        rank,
        route: CertifyRoute::SymbolicElimination,
    })
}

/// Integer polynomial vector from a rational linear combination of polynomial vectors,
/// scaled to clear denominators.
pub fn combine_scaled(coeffs: &QMatrix, polys: &[Poly]) -> Result<Vec<Poly>> {
    let mut out = Vec::with_capacity(coeffs.rows());
    let l = denominator_lcm((0..coeffs.rows()).flat_map(|i| coeffs.row(i).iter()));
    for i in 0..coeffs.rows() {
        let mut acc = Poly::zero();
        for (j, c) in coeffs.row(i).iter().enumerate() {
            if c.is_zero() || polys[j].is_zero() {
                continue;
            }
            let s = to_i128(&(c.numer() * (&l / c.denom())))?;
            acc.add_scaled(&polys[j], s, &Monomial::one())?;
        }
        out.push(acc);
    }
    Ok(out)
}
