//! Conditions on the graded basis of the double centraliser, and the index
//! relations between `z(e)`, `n(e)` and `d(e)`.

use serde::Serialize;

use super::grading::GradedPieces;
use super::{multiple_of, Chain};
use crate::construct::Sl2Triple;
use crate::error::Result;
use crate::exactla::{Rational, Subspace};
use crate::index::{index_of_rep, index_of_subalgebra, IndexResult};
use crate::liecore::LieAlgebra;
use crate::rng::RandomCfg;

/// Powers `(k, e^k)` of a matrix nilpotent that lie in the algebra.
pub type Powers = Vec<(usize, Vec<Rational>)>;

/// Basis of `d` by which the conditions are evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeartBasis {
    pub vectors: Vec<Vec<Rational>>,
    /// Half-degrees `m_i`, weakly increasing.
    pub m: Vec<i64>,
    /// Exponents `k_i` when `e_i = e^{k_i}` in a matrix realization.
    pub powers: Option<Vec<usize>>,
}

impl HeartBasis {
    /// Eigenbasis ordered by degree, echelon order inside each eigenspace, with the
    /// degree-2 vector replaced by `e` itself.
    pub fn echelon(t: &Sl2Triple, g: &GradedPieces, d: &Subspace) -> Result<Self> {
        let mut vectors = Vec::new();
        let mut m = Vec::new();
        for (deg, piece) in g.restrict(d)? {
            for v in piece.vectors() {
                vectors.push(if deg == 2 && piece.dim() == 1 { t.e.clone() } else { v });
                m.push(deg / 2);
            }
        }
        Ok(HeartBasis {
            vectors,
            m,
            powers: None,
        })
    }

    /// Matrix powers `e^k` as the basis, accepted only if they are graded and span `d`.
    pub fn from_powers(g: &GradedPieces, d: &Subspace, powers: Powers) -> Result<Option<Self>> {
        let span = Subspace::from_vectors(d.ambient_dim(), powers.iter().map(|(_, v)| v.clone()).collect())?;
        if span != *d || powers.len() != d.dim() {
            return Ok(None);
        }
        let mut m = Vec::new();
        for (k, v) in &powers {
            if !g.piece(2 * *k as i64).contains(v)? {
                return Ok(None);
            }
            m.push(*k as i64);
        }
        Ok(Some(HeartBasis {
            m,
            powers: Some(powers.iter().map(|(k, _)| *k).collect()),
            vectors: powers.into_iter().map(|(_, v)| v).collect(),
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeartReport {
    pub m: Vec<i64>,
    pub basis: &'static str,
    /// `α_{ij}` with `[[f, e_j], e_i] = α_{ij} e_{i+j−1}`; `null` where the bracket is not
    /// a multiple of `e_{i+j−1}`. Rows `i`, columns `j`, both 1-based, `i + j − 1 ≤ l`.
    pub alpha: Vec<Vec<Option<String>>>,
    pub heart1: bool,
    pub simple_spectrum: bool,
    pub heart2: bool,
    /// First `(i, j)` violating the eigenvalue condition.
    pub heart2_failure: Option<(usize, usize)>,
    /// With a power basis: `[[e^a, f], e^b] = 2ab·e^{a+b−1}` entry by entry.
    pub power_formula: Option<bool>,
    /// After rescaling the basis (keeping `e_1 = e`), `α_{ij} = −2 m_i m_j`; evaluated
    /// when the bracket condition holds.
    pub normalized_formula: Option<bool>,
    /// Under the eigenvalue condition the `m_i` form an arithmetic progression from 1.
    pub progression: Option<bool>,
    /// Orbit count on `d` implied by the bracket condition, `dim d + 1`; derived, not counted.
    pub implied_orbit_count: Option<usize>,
}

pub fn heart_conditions(l: &LieAlgebra, t: &Sl2Triple, basis: &HeartBasis) -> Result<HeartReport> {
    let b = &basis.vectors;
    let len = b.len();
    let zero = Rational::from_integer(0.into());
    let mut alpha = vec![Vec::new(); len];
    let mut heart1 = true;
    let mut power_formula = basis.powers.as_ref().map(|_| true);
    for i in 1..=len {
        for j in 1..=len + 1 - i {
            let v = l.bracket(&l.bracket(&t.f, &b[j - 1])?, &b[i - 1])?;
            let a = multiple_of(&v, &b[i + j - 2]);
            if a.as_ref().is_none_or(|a| *a == zero) {
                heart1 = false;
            }
            if let (Some(k), Some(ok)) = (&basis.powers, power_formula.as_mut()) {
                let expected = Rational::from_integer((-2 * (k[i - 1] * k[j - 1]) as i64).into());
                *ok &= a.as_ref() == Some(&expected);
            }
            alpha[i - 1].push(a.map(|a| a.to_string()));
        }
    }
    let m = &basis.m;
    let simple_spectrum = m.windows(2).all(|w| w[0] < w[1]);
    let mut heart2_failure = None;
    'outer: for i in 1..=len {
        for j in 1..=len + 1 - i {
            if m[i - 1] + m[j - 1] - 1 != m[i + j - 2] {
                heart2_failure = Some((i, j));
                break 'outer;
            }
        }
    }
    let heart2 = simple_spectrum && heart2_failure.is_none();
    let progression = heart2.then(|| {
        let step = m.get(1).map_or(0, |m2| m2 - 1);
        m.iter().enumerate().all(|(i, &mi)| mi == 1 + i as i64 * step)
    });
    Ok(HeartReport {
        m: m.clone(),
        basis: if basis.powers.is_some() { "powers" } else { "echelon" },
        alpha,
        heart1,
        simple_spectrum,
        heart2,
        heart2_failure,
        power_formula,
        normalized_formula: if heart1 {
            Some(normalized_formula(l, t, basis)?)
        } else {
            None
        },
        progression,
        implied_orbit_count: heart1.then_some(len + 1),
    })
}

/// Rescales `e_{k+1}` to `[[f, e_2], e_k] / (−2 m_2 m_k)` and compares the whole table
/// with `−2 m_i m_j`; the comparison does not depend on the scaling of the input basis.
fn normalized_formula(l: &LieAlgebra, t: &Sl2Triple, basis: &HeartBasis) -> Result<bool> {
    let (b, m) = (&basis.vectors, &basis.m);
    let len = b.len();
    let mut nb: Vec<Vec<Rational>> = b.iter().take(2).cloned().collect();
    for k in 2..len {
        let v = l.bracket(&l.bracket(&t.f, &nb[1])?, &nb[k - 1])?;
        let s = Rational::from_integer((-2 * m[1] * m[k - 1]).into());
        let v: Vec<Rational> = v.iter().map(|x| x / &s).collect();
        if multiple_of(&v, &b[k]).is_none() {
            return Ok(false);
        }
        nb.push(v);
    }
    for i in 1..=len {
        for j in 1..=len + 1 - i {
            let v = l.bracket(&l.bracket(&t.f, &nb[j - 1])?, &nb[i - 1])?;
            let want = Rational::from_integer((-2 * m[i - 1] * m[j - 1]).into());
            if multiple_of(&v, &nb[i + j - 2]) != Some(want) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormaliserIndexReport {
    pub rank: usize,
    pub dim_d: usize,
    pub ind_z: IndexResult,
    pub ind_n: IndexResult,
    pub ind_n_on_z: IndexResult,
    pub ind_n_on_d: IndexResult,
    /// `ind n ≥ ind z − dim d ≥ rk − dim d`
    pub lower_bound_n: bool,
    /// `ind(n, z) ≥ ind z − dim d`
    pub lower_bound_n_on_z: bool,
    /// `ind z + ind n ≤ dim d + 2 ind(n, z)`
    pub sum_bound: bool,
    /// When `ind(n, d) = 0`: `ind(n, z) = ind n = ind z − dim d`.
    pub open_orbit_equalities: Option<bool>,
    /// `ind n = rk − dim d`
    pub conj_n: bool,
    /// `ind(n, z) = rk − dim d`
    pub conj_n_on_z: bool,
    pub parity_ok: bool,
    pub holds: bool,
}

pub fn normaliser_index_checks(
    l: &LieAlgebra,
    chain: &Chain,
    rank: usize,
    cfg: &RandomCfg,
) -> Result<NormaliserIndexReport> {
    let ind_z = index_of_subalgebra(l, &chain.z, &cfg.derive("z"))?;
    let ind_n = index_of_subalgebra(l, &chain.n, &cfg.derive("n"))?;
    let ind_n_on_z = index_of_rep(&l.induced_rep(&chain.n, &chain.z)?, &cfg.derive("n-on-z"))?;
    let ind_n_on_d = index_of_rep(&l.induced_rep(&chain.n, &chain.d)?, &cfg.derive("n-on-d"))?;
    let dd = chain.d.dim() as i64;
    let (iz, inn, inz, ind) = (
        ind_z.index as i64,
        ind_n.index as i64,
        ind_n_on_z.index as i64,
        ind_n_on_d.index,
    );
    let lower_bound_n = inn >= iz - dd && iz >= rank as i64;
    let lower_bound_n_on_z = inz >= iz - dd;
    let sum_bound = iz + inn <= dd + 2 * inz;
    let open_orbit_equalities = (ind == 0).then_some(inz == inn && inn == iz - dd);
    let target = rank as i64 - dd;
    let parity_ok = ind_z.parity_ok() && ind_n.parity_ok();
    Ok(NormaliserIndexReport {
        rank,
        dim_d: chain.d.dim(),
        lower_bound_n,
        lower_bound_n_on_z,
        sum_bound,
        open_orbit_equalities,
        conj_n: inn == target,
        conj_n_on_z: inz == target,
        parity_ok,
        holds: lower_bound_n && lower_bound_n_on_z && sum_bound && open_orbit_equalities != Some(false) && parity_ok,
        ind_z,
        ind_n,
        ind_n_on_z,
        ind_n_on_d,
    })
}

/// Which result predicts `ind z(e) = rk` for this orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexPrediction {
    /// `e` is regular: `z(e)` is abelian of dimension `rk`.
    Regular,
    /// `e` admits a regular semisimple `e + q` with `q` in the lowest piece.
    Springer,
    Subregular,
    HeightTwo,
    /// No proof covers this orbit; the equality is only conjectured.
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerIndexReport {
    pub ind_z: usize,
    pub rank: usize,
    pub equal: bool,
    pub at_least_rank: bool,
    pub prediction: IndexPrediction,
}

pub fn centralizer_index_check(
    ind_z: &IndexResult,
    rank: usize,
    dim_z: usize,
    height: usize,
    springer: bool,
) -> CentralizerIndexReport {
    let prediction = if dim_z == rank {
        IndexPrediction::Regular
    } else if springer {
        IndexPrediction::Springer
    } else if dim_z == rank + 2 {
        IndexPrediction::Subregular
    } else if height == 2 {
        IndexPrediction::HeightTwo
    } else {
        IndexPrediction::Open
    };
    CentralizerIndexReport {
        ind_z: ind_z.index,
        rank,
        equal: ind_z.index == rank,
        at_least_rank: ind_z.index >= rank,
        prediction,
    }
}
