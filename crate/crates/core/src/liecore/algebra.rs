//! Lie algebras given by structure constants on a labelled basis.
//!
//! Elements are plain coordinate vectors (`Vec<Rational>` of length `dim`); every
//! operation checks the length, which is how elements of a different algebra are caught.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::matrix::{axpy, is_zero_vec, QMatrix};
use crate::exactla::{Rational, Subspace};

use super::form::BilinearForm;
use super::rep::Representation;

/// Sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients, sorted.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `table[i * dim + j]` holds `[b_i, b_j]`.
    table: Vec<SparseVec>,
}

fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

fn normalize_sparse(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl LieAlgebra {
    /// Algebra from a full bracket table (both orders), without validation.
    pub fn from_table(labels: Vec<String>, table: Vec<SparseVec>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                got: table.len(),
            });
        }
        let table = table
            .into_iter()
            .map(|v| {
                if let Some((k, _)) = v.iter().find(|(k, _)| *k >= n) {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        got: k + 1,
                    });
                }
                Ok(normalize_sparse(v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra { labels, table })
    }

    /// Algebra from the brackets `[b_i, b_j]` with `i < j`; the rest follows by antisymmetry.
    pub fn from_brackets(labels: Vec<String>, brackets: Vec<(usize, usize, SparseVec)>) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![Vec::new(); n * n];
        for (i, j, v) in brackets {
            if i >= n || j >= n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: i.max(j) + 1,
                });
            }
            if i >= j {
                return Err(Error::Parse(format!("bracket pair ({i}, {j}) must have i < j")));
            }
            let neg = v.iter().map(|(k, c)| (*k, -c)).collect();
            table[i * n + j] = v;
            table[j * n + i] = neg;
        }
        Self::from_table(labels, table)
    }

    /// Algebra whose brackets are computed by `f(i, j)` for `i < j` as dense vectors.
    pub fn from_bracket_fn(
        labels: Vec<String>,
        mut f: impl FnMut(usize, usize) -> Result<Vec<Rational>>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j)?;
                if v.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        got: v.len(),
                    });
                }
                let s = sparse_from_dense(&v);
                if !s.is_empty() {
                    brackets.push((i, j, s));
                }
            }
        }
        Self::from_brackets(labels, brackets)
    }

    pub fn abelian(dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("a{}", i + 1)).collect();
        LieAlgebra {
            labels,
            table: vec![Vec::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub fn zero_element(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.dim()]
    }

    pub(crate) fn check(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), s.ambient_dim()));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check(x)?;
        self.check(y)?;
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = self.structure(i, j);
                if s.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in s {
                    out[*k] += &c * v;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<QMatrix> {
        self.check(x)?;
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.structure(i, j) {
                    m.add_at(*k, j, &(xi * c));
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.structure(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Killing form `Φ(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing(&self) -> BilinearForm {
        let n = self.dim();
        let mut gram = QMatrix::zeros(n, n);
        // tr(ad b_i ad b_j) = Σ_{l,k} c_{il}^k c_{jk}^l
        for i in 0..n {
            for j in i..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    for (k, c) in self.structure(i, l) {
                        for (m, d) in self.structure(j, *k) {
                            if *m == l {
                                s += c * d;
                            }
                        }
                    }
                }
                gram.set(i, j, s.clone());
                gram.set(j, i, s);
            }
        }
        BilinearForm::new(gram).expect("Killing Gram matrix is symmetric")
    }

    pub fn killing_pair(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        self.check(x)?;
        self.check(y)?;
        self.killing().pair(x, y)
    }

    /// Antisymmetry and the Jacobi identity on all basis triples.
    pub fn validate(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            if !self.structure(i, i).is_empty() {
                return false;
            }
            for j in i + 1..n {
                let a = self.structure(i, j);
                let b = self.structure(j, i);
                if a.len() != b.len() || a.iter().zip(b).any(|((ka, ca), (kb, cb))| ka != kb || *ca != -cb) {
                    return false;
                }
            }
        }
        self.jacobi_holds()
    }

    fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        // [b_i, [b_j, b_k]] + [b_j, [b_k, b_i]] + [b_k, [b_i, b_j]]
        let apply = |out: &mut Vec<Rational>, i: usize, inner: &[(usize, Rational)]| {
            for (m, c) in inner {
                for (k, d) in self.structure(i, *m) {
                    out[*k] += c * d;
                }
            }
        };
        let mut acc = vec![Rational::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    acc.iter_mut().for_each(|x| x.set_zero());
                    apply(&mut acc, i, self.structure(j, k));
                    apply(&mut acc, j, self.structure(k, i));
                    apply(&mut acc, k, self.structure(i, j));
                    if !is_zero_vec(&acc) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// `{x : [x, g] = 0 for all g in gens}`.
    pub fn centralizer(&self, gens: &[Vec<Rational>]) -> Result<Subspace> {
        let n = self.dim();
        let mut stack = QMatrix::zeros(0, n);
        for g in gens {
            self.check(g)?;
            if is_zero_vec(g) {
                continue;
            }
            stack = stack.vstack(&self.ad(g)?)?;
        }
        if stack.rows() == 0 {
            return Ok(Subspace::full(n));
        }
        Ok(stack.kernel())
    }

    pub fn centralizer_of(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        self.centralizer(&s.vectors())
    }

    /// Span of all brackets `[a, b]` with `a ∈ s`, `b ∈ t`.
    pub fn bracket_spaces(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        self.check_subspace(t)?;
        let mut vs = Vec::with_capacity(s.dim() * t.dim());
        for a in 0..s.dim() {
            for b in 0..t.dim() {
                vs.push(self.bracket(s.vector(a), t.vector(b))?);
            }
        }
        Subspace::from_vectors(self.dim(), vs)
    }

    /// `[x, s] = {[x, v] : v ∈ s}` as a subspace.
    pub fn bracket_with(&self, x: &[Rational], s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        s.image_under(&self.ad(x)?)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.bracket_spaces(s, s)?.is_subspace_of(s)
    }

    /// True when `[q, s] ⊆ s`.
    pub fn is_invariant_under(&self, q: &Subspace, s: &Subspace) -> Result<bool> {
        self.bracket_spaces(q, s)?.is_subspace_of(s)
    }

    /// `{x : [x, v] ∈ s for every basis vector v of s}`.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        if s.is_zero() || s.is_full() {
            return Ok(Subspace::full(n));
        }
        let quotient = s.quotient_matrix();
        // [x, v] = −ad(v)·x, so stack quotient·ad(v) over the basis of s.
        let mut stack = QMatrix::zeros(0, n);
        for r in 0..s.dim() {
            stack = stack.vstack(&quotient.mul(&self.ad(s.vector(r))?)?)?;
        }
        Ok(stack.kernel())
    }

    pub fn center(&self) -> Subspace {
        let all: Vec<_> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        self.centralizer(&all).expect("basis vectors have the right length")
    }

    /// `{x ∈ q : [x, q] = 0}` for a subalgebra `q`.
    pub fn centre_of_subspace(&self, q: &Subspace) -> Result<Subspace> {
        if !self.is_subalgebra(q)? {
            return Err(Error::NotASubalgebra);
        }
        q.intersect(&self.centralizer_of(q)?)
    }

    /// The subalgebra `q` as a standalone algebra on its echelon basis, with the
    /// embedding whose rows are the ambient coordinates of the new basis vectors.
    pub fn induced_subalgebra(&self, q: &Subspace) -> Result<(LieAlgebra, QMatrix)> {
        self.check_subspace(q)?;
        let d = q.dim();
        let labels: Vec<String> = (0..d).map(|i| format!("q{}", i + 1)).collect();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let b = self.bracket(q.vector(i), q.vector(j))?;
                let c = q.coordinates(&b)?.ok_or(Error::NotASubalgebra)?;
                let s = sparse_from_dense(&c);
                if !s.is_empty() {
                    brackets.push((i, j, s));
                }
            }
        }
        Ok((LieAlgebra::from_brackets(labels, brackets)?, q.basis().clone()))
    }

    /// Action of the subalgebra `q` (echelon basis) on the `q`-invariant subspace `v`.
    pub fn induced_rep(&self, q: &Subspace, v: &Subspace) -> Result<Representation> {
        self.check_subspace(q)?;
        self.check_subspace(v)?;
        let (sub, _) = self.induced_subalgebra(q)?;
        let m = v.dim();
        let mut action = Vec::with_capacity(q.dim());
        for a in 0..q.dim() {
            let mut mat = QMatrix::zeros(m, m);
            for j in 0..m {
                let b = self.bracket(q.vector(a), v.vector(j))?;
                let c = v.coordinates(&b)?.ok_or(Error::NotInvariant)?;
                for (i, x) in c.into_iter().enumerate() {
                    mat.set(i, j, x);
                }
            }
            action.push(mat);
        }
        Representation::new(std::sync::Arc::new(sub), m, action)
    }

    /// Adjoint representation.
    pub fn adjoint_rep(self: &std::sync::Arc<Self>) -> Representation {
        let action = (0..self.dim()).map(|i| self.ad_basis(i)).collect();
        Representation::new(self.clone(), self.dim(), action).expect("adjoint action has matching sizes")
    }

    /// `{x : form(x, v) = 0 for all v ∈ s}`.
    pub fn orthogonal_complement(&self, s: &Subspace, form: &BilinearForm) -> Result<Subspace> {
        self.check_subspace(s)?;
        if s.is_zero() {
            return Ok(Subspace::full(self.dim()));
        }
        Ok(s.basis().mul(form.gram())?.kernel())
    }

    /// Same algebra on the basis `b'_i = s_i b_i` (all `s_i` nonzero).
    pub fn rescaled(&self, factors: &[Rational]) -> Result<LieAlgebra> {
        self.check(factors)?;
        if factors.iter().any(Zero::is_zero) {
            return Err(Error::SolveFailed("zero rescaling factor".into()));
        }
        let n = self.dim();
        let table = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                self.table[ij]
                    .iter()
                    .map(|(k, c)| (*k, c * &factors[i] * &factors[j] / &factors[*k]))
                    .collect()
            })
            .collect();
        LieAlgebra::from_table(self.labels.clone(), table)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// `x` expressed through a subspace basis: `Σ c_i q_i`.
    pub fn lift(&self, q: &Subspace, coords: &[Rational]) -> Result<Vec<Rational>> {
        self.check_subspace(q)?;
        q.combine(coords)
    }
}

/// `Σ_i c_i v_i` for equal-length vectors.
pub fn linear_combination(coeffs: &[Rational], vectors: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// Semidirect product `V ⋊_ρ q` on the basis `(v_1.., s_1..)`.
///
/// `[(v1, s1), (v2, s2)] = (ρ(s1)v2 − ρ(s2)v1, [s1, s2])`, so `V` is an abelian ideal.
pub fn semidirect(q: &LieAlgebra, rho: &Representation) -> Result<LieAlgebra> {
    if rho.acting_dim() != q.dim() {
        return Err(Error::LengthMismatch {
            expected: q.dim(),
            got: rho.acting_dim(),
        });
    }
    let m = rho.module_dim();
    let k = q.dim();
    let mut labels: Vec<String> = (0..m).map(|i| format!("v{}", i + 1)).collect();
    labels.extend(q.labels().iter().cloned());
    let mut brackets = Vec::new();
    // [v_j, s_a] = −ρ(s_a) v_j
    for j in 0..m {
        for a in 0..k {
            let col: SparseVec = (0..m)
                .filter(|&i| !rho.action(a).get(i, j).is_zero())
                .map(|i| (i, -rho.action(a).get(i, j)))
                .collect();
            if !col.is_empty() {
                brackets.push((j, m + a, col));
            }
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            let s: SparseVec = q.structure(a, b).iter().map(|(c, v)| (m + c, v.clone())).collect();
            if !s.is_empty() {
                brackets.push((m + a, m + b, s));
            }
        }
    }
    LieAlgebra::from_brackets(labels, brackets)
}
