//! Chevalley bases from Cartan matrices.
//!
//! Convention: `cartan[i][j] = ⟨α_i^∨, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)`, Bourbaki
//! numbering. Structure constants `N_{α,β} = ±(p+1)` are fixed by declaring every
//! extraspecial pair positive and propagating with the standard relations
//!
//! * `N_{α,β} = −N_{β,α}` and `N_{−α,−β} = −N_{α,β}`;
//! * `N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)` whenever `x + y + z = 0`;
//! * the four-root relation for `α + β = ρ + σ` with `(ρ, σ)` extraspecial.
//!
//! The negative root vectors are then rescaled so that `Φ(e_α, e_{−α}) = 1`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};

use super::types::{CartanType, Family};
use crate::error::{Error, Result};
use crate::exactla::{rat, QMatrix, Rational};
use crate::liecore::{LieAlgebra, SparseVec};

/// Cartan matrix of a finite type in the convention above.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let r = t.rank();
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t {
        CartanType::Classical(c) => {
            for i in 0..r.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
            match c.family() {
                Family::A => {}
                // α_r short
                Family::B => link(r - 2, r - 1, -1, -2),
                // α_r long
                Family::C => link(r - 2, r - 1, -2, -1),
                Family::D => {
                    link(r - 2, r - 1, 0, 0);
                    link(r - 3, r - 1, -1, -1);
                }
            }
        }
        CartanType::E(_) => {
            // α1 − α3 − α4 − α5 − …, α2 − α4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..r - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::F4 => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        CartanType::G2 => link(0, 1, -3, -1),
    }
    a
}

/// Root system data with the chosen structure-constant signs.
#[derive(Clone, Debug)]
pub struct RootDatum {
    label: String,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)`, normalized so the shortest simple root has length² 2.
    simple_lengths: Vec<Rational>,
    /// Positive roots in the simple-root basis, sorted by height then lexicographically.
    positive: Vec<Vec<i64>>,
    /// `N_{α,β}` for all pairs of roots (indices into `roots()`) whose sum is a root.
    constants: HashMap<(usize, usize), i64>,
}

fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

impl RootDatum {
    pub fn from_type(t: CartanType) -> Result<Self> {
        Self::new(t.to_string(), cartan_matrix(t))
    }

    pub fn new(label: String, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let p = cartan.len();
        let bad = |m: &str| Error::InvalidCartanMatrix(m.to_string());
        if p == 0 || cartan.iter().any(|row| row.len() != p) {
            return Err(bad("matrix must be square and nonempty"));
        }
        for i in 0..p {
            if cartan[i][i] != 2 {
                return Err(bad("diagonal entries must be 2"));
            }
            for j in 0..p {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(bad("off-diagonal entries must be ≤ 0 with matching zero pattern"));
                }
            }
        }
        // symmetrize: a_ij·d_i = a_ji·d_j
        let mut d: Vec<Option<Rational>> = vec![None; p];
        for start in 0..p {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(Rational::one());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].clone().expect("visited");
                for j in 0..p {
                    if i == j || cartan[i][j] == 0 {
                        continue;
                    }
                    let dj = &di * rat(cartan[i][j]) / rat(cartan[j][i]);
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(x) if *x != dj => return Err(bad("matrix is not symmetrizable")),
                        Some(_) => {}
                    }
                }
            }
        }
        let d: Vec<Rational> = d.into_iter().map(|x| x.expect("all visited")).collect();
        let min = d.iter().min().expect("nonempty").clone();
        let simple_lengths: Vec<Rational> = d.iter().map(|x| x / &min * rat(2)).collect();
        // finite type: the symmetrized form must be positive definite
        let sym = QMatrix::from_fn(p, p, |i, j| rat(cartan[i][j]) * &simple_lengths[i] / rat(2));
        for k in 1..=p {
            let minor = QMatrix::from_fn(k, k, |i, j| sym.get(i, j).clone());
            if minor.determinant()? <= Rational::zero() {
                return Err(bad("matrix is not of finite type"));
            }
        }
        let positive = enumerate_positive_roots(&cartan)?;
        let mut datum = RootDatum {
            label,
            cartan,
            simple_lengths,
            positive,
            constants: HashMap::new(),
        };
        datum.constants = StructureConstants::compute(&datum)?;
        Ok(datum)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// All roots: positives first, then their negatives in the same order.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut r = self.positive.clone();
        r.extend(self.positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        r
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("nonempty root system")
    }

    /// `(β, γ)` for roots in the simple-root basis.
    pub fn inner(&self, b: &[i64], c: &[i64]) -> Rational {
        let p = self.rank();
        let mut s = Rational::zero();
        for i in 0..p {
            if b[i] == 0 {
                continue;
            }
            for j in 0..p {
                if c[j] != 0 {
                    s += rat(b[i] * c[j] * self.cartan[i][j]) * &self.simple_lengths[i] / rat(2);
                }
            }
        }
        s
    }

    /// `⟨α_i^∨, β⟩`.
    pub fn pairing(&self, i: usize, b: &[i64]) -> i64 {
        (0..self.rank()).map(|j| b[j] * self.cartan[i][j]).sum()
    }

    /// `N_{α,β}` by root index, `None` when `α + β` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> Option<i64> {
        self.constants.get(&(a, b)).copied()
    }
}

fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let p = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..p)
        .map(|i| {
            let mut v = vec![0; p];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for b in &layer {
            for i in 0..p {
                // α_i-string through b: b − pα_i … b + qα_i with p − q = ⟨α_i^∨, b⟩
                let mut down = 0;
                let mut c = b.clone();
                loop {
                    c[i] -= 1;
                    if known.contains(&c) {
                        down += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..p).map(|j| b[j] * cartan[i][j]).sum();
                if down - pair > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
        if roots.len() > 1000 {
            return Err(Error::InvalidCartanMatrix("root system is not finite".into()));
        }
    }
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    Ok(roots)
}

struct StructureConstants<'a> {
    datum: &'a RootDatum,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    npos: usize,
    memo: HashMap<(usize, usize), Rational>,
}

impl<'a> StructureConstants<'a> {
    fn compute(datum: &'a RootDatum) -> Result<HashMap<(usize, usize), i64>> {
        let roots = datum.roots();
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut sc = StructureConstants {
            datum,
            npos: datum.positive.len(),
            roots,
            index,
            memo: HashMap::new(),
        };
        let mut out = HashMap::new();
        let total = sc.roots.len();
        for a in 0..total {
            for b in 0..total {
                if sc.sum(a, b).is_some() {
                    let n = sc.n(a, b)?;
                    let v = n
                        .to_integer()
                        .to_i64()
                        .filter(|_| n.is_integer())
                        .ok_or_else(|| Error::CrossCheckFailed(format!("non-integral N = {n}")))?;
                    if v.abs() != sc.p_plus_one(a, b) {
                        return Err(Error::CrossCheckFailed(format!(
                            "|N| = {} but the root string gives {}",
                            v.abs(),
                            sc.p_plus_one(a, b)
                        )));
                    }
                    out.insert((a, b), v);
                }
            }
        }
        Ok(out)
    }

    fn neg(&self, a: usize) -> usize {
        if a < self.npos {
            a + self.npos
        } else {
            a - self.npos
        }
    }

    fn is_pos(&self, a: usize) -> bool {
        a < self.npos
    }

    fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&self.add(&self.roots[a], &self.roots[b])).copied()
    }

    fn len2(&self, a: usize) -> Rational {
        self.datum.inner(&self.roots[a], &self.roots[a])
    }

    /// `p + 1` where `p` is the largest integer with `β − pα` a root.
    fn p_plus_one(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut c = self.roots[b].clone();
        loop {
            c = c.iter().zip(&self.roots[a]).map(|(x, y)| x - y).collect();
            if self.index.contains_key(&c) {
                p += 1;
            } else {
                return p + 1;
            }
        }
    }

    /// The extraspecial pair `(ρ, σ)` of a non-simple positive root `x`.
    fn extraspecial(&self, x: usize) -> (usize, usize) {
        let p = self.datum.rank();
        for i in 0..p {
            let mut s = self.roots[x].clone();
            s[i] -= 1;
            if let Some(&j) = self.index.get(&s) {
                if self.is_pos(j) {
                    return (i, j);
                }
            }
        }
        unreachable!("every non-simple positive root has a simple summand")
    }

    fn n(&mut self, a: usize, b: usize) -> Result<Rational> {
        if let Some(v) = self.memo.get(&(a, b)) {
            return Ok(v.clone());
        }
        let v = self.n_uncached(a, b)?;
        self.memo.insert((a, b), v.clone());
        Ok(v)
    }

    fn n_uncached(&mut self, a: usize, b: usize) -> Result<Rational> {
        let g = self
            .sum(a, b)
            .ok_or_else(|| Error::CrossCheckFailed("N requested for a non-root sum".into()))?;
        match (self.is_pos(a), self.is_pos(b)) {
            (true, true) => self.n_positive(a, b, g),
            (false, false) => Ok(-self.n(self.neg(a), self.neg(b))?),
            (true, false) => {
                if self.is_pos(g) {
                    // N_{α,β} = (γ,γ)/(α,α) · N_{γ,−β}
                    let nb = self.neg(b);
                    Ok(self.len2(g) / self.len2(a) * self.n(g, nb)?)
                } else {
                    // N_{α,β} = −(γ,γ)/(β,β) · N_{α,−γ}
                    let ng = self.neg(g);
                    Ok(-(self.len2(g) / self.len2(b)) * self.n(a, ng)?)
                }
            }
            (false, true) => Ok(-self.n(b, a)?),
        }
    }

    fn n_positive(&mut self, a: usize, b: usize, xi: usize) -> Result<Rational> {
        let (r, s) = self.extraspecial(xi);
        let nrs = rat(self.p_plus_one(r, s));
        if (a, b) == (r, s) {
            return Ok(nrs);
        }
        if (a, b) == (s, r) {
            return Ok(-nrs);
        }
        // four-root relation with α + β − ρ − σ = 0
        let (nr, ns) = (self.neg(r), self.neg(s));
        let mut t = Rational::zero();
        if let Some(br) = self.sum(b, nr) {
            t += self.n(b, nr)? * self.n(a, ns)? / self.len2(br);
        }
        if let Some(ar) = self.sum(a, nr) {
            t += self.n(nr, a)? * self.n(b, ns)? / self.len2(ar);
        }
        Ok(t * self.len2(xi) / nrs)
    }
}

/// A Chevalley-basis realization: basis `e_α` (positive roots), `h_1..h_p`, then `e_{−α}`.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    datum: RootDatum,
    algebra: Arc<LieAlgebra>,
}

fn root_label(prefix: &str, r: &[i64]) -> String {
    let s: Vec<String> = r.iter().map(|x| x.abs().to_string()).collect();
    format!("{prefix}[{}]", s.join(""))
}

impl ChevalleyAlgebra {
    pub fn new(datum: RootDatum) -> Result<Self> {
        let p = datum.rank();
        let npos = datum.positive.len();
        let roots = datum.roots();
        let dim = 2 * npos + p;
        // basis index of root index k
        let root_basis = |k: usize| if k < npos { k } else { k + p };
        let mut labels: Vec<String> = datum.positive.iter().map(|r| root_label("e", r)).collect();
        labels.extend((1..=p).map(|i| format!("h{i}")));
        labels.extend(datum.positive.iter().map(|r| root_label("f", r)));
        let mut table: Vec<SparseVec> = vec![Vec::new(); dim * dim];
        let mut put = |i: usize, j: usize, v: SparseVec| {
            let neg = v.iter().map(|(k, c)| (*k, -c)).collect();
            table[i * dim + j] = v;
            table[j * dim + i] = neg;
        };
        for (k, r) in roots.iter().enumerate() {
            let bk = root_basis(k);
            for i in 0..p {
                let c = datum.pairing(i, r);
                if c != 0 {
                    put(npos + i, bk, vec![(bk, rat(c))]);
                }
            }
            if k < npos {
                // [e_β, e_{−β}] = h_β = Σ k_i (α_i,α_i)/(β,β) h_i
                let l = datum.inner(r, r);
                let h: SparseVec = (0..p)
                    .filter(|&i| r[i] != 0)
                    .map(|i| (npos + i, rat(r[i]) * &datum.simple_lengths[i] / &l))
                    .collect();
                put(bk, root_basis(k + npos), h);
            }
        }
        for (&(a, b), &n) in &datum.constants {
            if a < b {
                let s = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect::<Vec<_>>();
                let target = roots.iter().position(|r| *r == s).expect("sum is a root");
                put(root_basis(a), root_basis(b), vec![(root_basis(target), rat(n))]);
            }
        }
        let integral = LieAlgebra::from_table(labels, table)?;
        if !integral.validate() {
            return Err(Error::CrossCheckFailed(format!(
                "Chevalley constants for {} violate the Jacobi identity",
                datum.label
            )));
        }
        // rescale e_{−α} so that Φ(e_α, e_{−α}) = 1
        let killing = integral.killing();
        let mut factors = vec![Rational::one(); dim];
        for k in 0..npos {
            let c = killing.gram().get(k, root_basis(k + npos)).clone();
            if c.is_zero() {
                return Err(Error::CrossCheckFailed("Killing form vanishes on a root pair".into()));
            }
            factors[root_basis(k + npos)] = Rational::one() / c;
        }
        let algebra = integral.rescaled(&factors)?;
        Ok(ChevalleyAlgebra {
            datum,
            algebra: Arc::new(algebra),
        })
    }

    pub fn from_type(t: CartanType) -> Result<Self> {
        Self::new(RootDatum::from_type(t)?)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    fn npos(&self) -> usize {
        self.datum.positive.len()
    }

    /// Basis index of the root vector for `root` (in the simple-root basis).
    pub fn root_vector_index(&self, root: &[i64]) -> Option<usize> {
        let npos = self.npos();
        if let Some(k) = self.datum.positive.iter().position(|r| r == root) {
            return Some(k);
        }
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        self.datum
            .positive
            .iter()
            .position(|r| *r == neg)
            .map(|k| k + npos + self.rank())
    }

    pub fn root_vector(&self, root: &[i64]) -> Option<Vec<Rational>> {
        self.root_vector_index(root).map(|i| self.algebra.basis_vector(i))
    }

    /// Basis indices of `h_1..h_p`.
    pub fn cartan_indices(&self) -> std::ops::Range<usize> {
        self.npos()..self.npos() + self.rank()
    }

    pub fn positive_root_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.npos()).map(|i| self.algebra.basis_vector(i)).collect()
    }

    /// `Σ e_{α_i}` over the simple roots.
    pub fn regular_nilpotent(&self) -> Vec<Rational> {
        let mut e = self.algebra.zero_element();
        for i in 0..self.rank() {
            e[i] = Rational::one();
        }
        e
    }

    /// `(e_λ, e_{−λ})` for the highest root `λ`, with `Φ(e_λ, e_{−λ}) = 1`.
    pub fn extreme_root_vectors(&self) -> (Vec<Rational>, Vec<Rational>) {
        let l = self.datum.highest_root().to_vec();
        let neg: Vec<i64> = l.iter().map(|x| -x).collect();
        (
            self.root_vector(&l).expect("highest root"),
            self.root_vector(&neg).expect("lowest root"),
        )
    }

    /// Weight of each basis vector in the simple-root basis (zero on the Cartan part).
    pub fn basis_weights(&self) -> Vec<Vec<i64>> {
        let p = self.rank();
        let mut w: Vec<Vec<i64>> = self.datum.positive.clone();
        w.extend(std::iter::repeat_n(vec![0; p], p));
        w.extend(
            self.datum
                .positive
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        w
    }
}

/// `chevalley(d)`: the algebra of a root datum.
pub fn chevalley(d: RootDatum) -> Result<LieAlgebra> {
    Ok((*ChevalleyAlgebra::new(d)?.algebra).clone())
}
