//! Eigenspace gradings `g = ⊕ g(i)` by a semisimple element.

use std::collections::BTreeMap;

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};

use crate::construct::Sl2Triple;
use crate::error::{Error, Result};
use crate::exactla::{rat, QMatrix, Rational, Subspace};
use crate::liecore::LieAlgebra;
use crate::par;

/// Nonzero eigenspaces of `ad h`, keyed by eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPieces {
    ambient: usize,
    pieces: BTreeMap<i64, Subspace>,
}

impl GradedPieces {
    pub fn pieces(&self) -> &BTreeMap<i64, Subspace> {
        &self.pieces
    }

    /// `g(i)`, the zero subspace when `i` is not an eigenvalue.
    pub fn piece(&self, i: i64) -> Subspace {
        self.pieces
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.pieces.iter().map(|(i, s)| (*i, s.dim())).collect()
    }

    pub fn max_degree(&self) -> i64 {
        self.pieces.keys().next_back().copied().unwrap_or(0)
    }

    /// `⊕_{i ∈ range} g(i)`.
    pub fn sum_where(&self, keep: impl Fn(i64) -> bool) -> Result<Subspace> {
        let mut out = Subspace::zero(self.ambient);
        for (i, s) in &self.pieces {
            if keep(*i) {
                out = out.sum(s)?;
            }
        }
        Ok(out)
    }

    /// Pieces `s ∩ g(i)` of an `ad h`-stable subspace; errors if they do not add up to `s`.
    pub fn restrict(&self, s: &Subspace) -> Result<BTreeMap<i64, Subspace>> {
        let mut out = BTreeMap::new();
        let mut total = 0;
        for (i, p) in &self.pieces {
            let q = p.intersect(s)?;
            if !q.is_zero() {
                total += q.dim();
                out.insert(*i, q);
            }
        }
        if total != s.dim() {
            return Err(Error::CrossCheckFailed("subspace is not graded".into()));
        }
        Ok(out)
    }

    /// Eigenvalues on a graded subspace, with multiplicity, ascending.
    pub fn degrees_of(&self, s: &Subspace) -> Result<Vec<i64>> {
        Ok(self
            .restrict(s)?
            .into_iter()
            .flat_map(|(i, q)| std::iter::repeat_n(i, q.dim()))
            .collect())
    }
}

/// Eigenspace decomposition of `ad h`. Eigenvalues are searched among integers with
/// `|i| ≤ sqrt(tr (ad h)²)`; fails unless the eigenspaces fill the algebra.
pub fn grading(l: &LieAlgebra, h: &[Rational]) -> Result<GradedPieces> {
    let ad = l.ad(h)?;
    let n = l.dim();
    let tr = ad.mul(&ad)?.trace();
    if tr.is_negative() || !tr.is_integer() {
        return Err(Error::NotIntegerDiagonalizable);
    }
    let bound = tr.to_integer().to_u64().ok_or(Error::NotIntegerDiagonalizable)?.sqrt() as i64;
    let candidates: Vec<i64> = (-bound..=bound).collect();
    let id = QMatrix::identity(n);
    let spaces = par::map(&candidates, |&i| ad.sub(&id.scale(&rat(i))).map(|m| m.kernel()));
    let mut pieces = BTreeMap::new();
    let mut total = 0;
    for (i, s) in candidates.into_iter().zip(spaces) {
        let s = s?;
        if !s.is_zero() {
            total += s.dim();
            pieces.insert(i, s);
        }
    }
    if total != n {
        return Err(Error::NotIntegerDiagonalizable);
    }
    Ok(GradedPieces { ambient: n, pieces })
}

/// Checks `[g(i), g(j)] ⊆ g(i+j)` on all pairs of pieces.
pub fn is_bracket_compatible(l: &LieAlgebra, g: &GradedPieces) -> Result<bool> {
    for (i, a) in g.pieces() {
        for (j, b) in g.pieces() {
            if i > j {
                continue;
            }
            if !l.bracket_spaces(a, b)?.is_subspace_of(&g.piece(i + j))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Height read two ways: the top degree of the grading and the nilpotency degree of
/// `ad e` (largest `m` with `(ad e)^m ≠ 0`). Errors if they differ.
pub fn height(l: &LieAlgebra, t: &Sl2Triple, g: &GradedPieces) -> Result<usize> {
    let by_grading = g.max_degree().max(0) as usize;
    let ad = l.ad(&t.e)?;
    let mut power = ad.clone();
    let mut m = 0;
    while !power.is_zero() {
        m += 1;
        if m > l.dim() {
            return Err(Error::NotNilpotent);
        }
        power = power.mul(&ad)?;
    }
    if m != by_grading {
        return Err(Error::CrossCheckFailed(format!(
            "height {by_grading} from the grading, {m} from ad e"
        )));
    }
    Ok(m)
}
