//! The regular nilpotent orbit of a Chevalley algebra: the principal triple, the
//! element `f̂`, the Frobenius normaliser and the matrix `𝔇 = ([e_i, [e_j, f]])`.

use num_traits::{Pow, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use super::chain::centralizer_chain;
use super::grading::{grading, GradedPieces};
use super::{multiple_of, regular_semisimple, solve_bracket, SemisimpleCertificate};
use crate::construct::{ChevalleyAlgebra, Sl2Triple};
use crate::error::{Error, Result};
use crate::exactla::matrix::is_zero_vec;
use crate::exactla::{rat, QMatrix, Rational, Subspace};
use crate::index::{index_of_subalgebra, kirillov_pencil, IndexResult};
use crate::liecore::LieAlgebra;
use crate::rng::RandomCfg;

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Principal triple with `h` in the Cartan subalgebra and `α_i(h) = 2` on every simple
/// root, so the grading is twice the root height.
pub fn principal_triple(c: &ChevalleyAlgebra) -> Result<(Sl2Triple, GradedPieces)> {
    let l = c.algebra();
    let p = c.rank();
    let cartan: Vec<usize> = c.cartan_indices().collect();
    let simple: Vec<usize> = (0..p)
        .map(|i| {
            let mut r = vec![0; p];
            r[i] = 1;
            c.root_vector_index(&r).expect("simple roots are roots")
        })
        .collect();
    // [h_k, e_{α_i}] = a_{ik} e_{α_i}; solve Σ_k a_{ik} c_k = 2.
    let a = QMatrix::from_fn(p, p, |i, k| {
        l.bracket(&l.basis_vector(cartan[k]), &l.basis_vector(simple[i]))
            .expect("basis vectors")[simple[i]]
            .clone()
    });
    let coeffs = a
        .solve(&vec![rat(2); p])?
        .ok_or_else(|| Error::SolveFailed("Cartan matrix is singular".into()))?;
    let mut h = l.zero_element();
    for (k, x) in cartan.iter().zip(coeffs) {
        h[*k] = x;
    }
    let e = c.regular_nilpotent();
    let g = grading(l, &h)?;
    let f =
        solve_bracket(l, &e, &g.piece(-2), &h)?.ok_or_else(|| Error::CompletionFailed("no f in degree −2".into()))?;
    let t = Sl2Triple { e, h, f };
    if !t.is_valid(l)? {
        return Err(Error::CrossCheckFailed("principal triple relations".into()));
    }
    Ok((t, g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularSuiteReport {
    pub rank: usize,
    pub dim_z: usize,
    pub dim_n: usize,
    /// Root vectors sit in degree twice their height.
    pub grading_is_height: bool,
    pub f_hat_in_degree_minus_two: bool,
    pub f_hat_regular: bool,
    pub c_certificate: SemisimpleCertificate,
    pub z_c_in_z_e_plus_z_f_hat: bool,
    pub z_f_hat_complements_image: bool,
    pub bracket_space_complements_image: bool,
    pub n_is_kernel_of_ad_e_squared: bool,
    pub dual_pairing_nondegenerate: bool,
    pub kirillov_form_nonsingular: bool,
    pub ind_n: IndexResult,
    pub holds: bool,
}

pub fn regular_suite(c: &ChevalleyAlgebra, cfg: &RandomCfg) -> Result<RegularSuiteReport> {
    let l = c.algebra();
    let n = l.dim();
    let p = c.rank();
    let (t, g) = principal_triple(c)?;
    let chain = centralizer_chain(l, &t)?;
    let weights = c.basis_weights();
    let grading_is_height = (0..n).all(|k| {
        let ht: i64 = weights[k].iter().sum();
        g.piece(2 * ht).contains(&l.basis_vector(k)).unwrap_or(false)
    });
    let (e_top, e_low) = c.extreme_root_vectors();
    let h_top = l.bracket(&e_top, &e_low)?;
    let negative = g.sum_where(|i| i < 0)?;
    let f_hat = solve_bracket(l, &t.e, &negative, &h_top)?
        .ok_or_else(|| Error::SolveFailed("no f̂ in the negative part".into()))?;
    let f_hat_in_degree_minus_two = g.piece(-2).contains(&f_hat)?;
    let z_f_hat = l.centralizer(std::slice::from_ref(&f_hat))?;
    let f_hat_regular = z_f_hat.dim() == p;

    let z_e = &chain.z;
    let cc = add(&t.e, &e_low);
    let c_certificate = regular_semisimple(l, &cc, p)?;
    let z_c = l.centralizer(std::slice::from_ref(&cc))?;
    let z_c_in_z_e_plus_z_f_hat = z_e.is_direct(&z_f_hat)? && z_c.is_subspace_of(&z_e.sum(&z_f_hat)?)?;

    let image = l.bracket_with(&t.e, &Subspace::full(n))?;
    let complements = |s: &Subspace| -> Result<bool> { Ok(s.is_direct(&image)? && s.sum(&image)?.is_full()) };
    let z_f_hat_complements_image = complements(&z_f_hat)?;
    let a = l.bracket_with(&e_low, &l.bracket_with(&t.f, z_e)?)?;
    let bracket_space_complements_image = complements(&a)?;

    let ad_e = l.ad(&t.e)?;
    let ad_f = l.ad(&t.f)?;
    let ker_e2 = ad_e.mul(&ad_e)?.kernel();
    let ker_f2 = ad_f.mul(&ad_f)?.kernel();
    let n_is_kernel_of_ad_e_squared = ker_e2 == chain.n;
    let killing = l.killing();
    let pairing = QMatrix::from_fn(ker_e2.dim(), ker_f2.dim(), |i, j| {
        killing.pair(ker_e2.vector(i), ker_f2.vector(j)).expect("same ambient")
    });
    let dual_pairing_nondegenerate = pairing.is_square() && pairing.rank() == pairing.rows();

    let (n_alg, emb) = l.induced_subalgebra(&chain.n)?;
    let xi = (0..n_alg.dim())
        .map(|k| killing.pair(&e_low, emb.row(k)))
        .collect::<Result<Vec<_>>>()?;
    let kirillov_form_nonsingular = kirillov_pencil(&n_alg).evaluate(&xi)?.rank() == n_alg.dim();
    let ind_n = index_of_subalgebra(l, &chain.n, &cfg.derive("n"))?;

    let holds = grading_is_height
        && f_hat_in_degree_minus_two
        && f_hat_regular
        && c_certificate.holds
        && z_c_in_z_e_plus_z_f_hat
        && z_f_hat_complements_image
        && bracket_space_complements_image
        && n_is_kernel_of_ad_e_squared
        && dual_pairing_nondegenerate
        && kirillov_form_nonsingular
        && ind_n.index == 0;
    Ok(RegularSuiteReport {
        rank: p,
        dim_z: z_e.dim(),
        dim_n: chain.n.dim(),
        grading_is_height,
        f_hat_in_degree_minus_two,
        f_hat_regular,
        c_certificate,
        z_c_in_z_e_plus_z_f_hat,
        z_f_hat_complements_image,
        bracket_space_complements_image,
        n_is_kernel_of_ad_e_squared,
        dual_pairing_nondegenerate,
        kirillov_form_nonsingular,
        ind_n,
        holds,
    })
}

/// Change of basis inside a two-dimensional eigenspace of a repeated exponent.
/// Coefficients live in `Q(√discriminant)` and are written `a + b·√D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rechoice {
    /// 1-based positions of the two old basis vectors.
    pub positions: (usize, usize),
    /// `B(u, v)` with `[u, [v, f]] = B(u, v)·e_λ` on the eigenspace.
    pub block: [[String; 2]; 2],
    pub discriminant: String,
    /// The isotropic vector exists over `Q`.
    pub rational: bool,
    /// New vector placed at the first position.
    pub first: [String; 2],
    /// Isotropic vector placed at the second position.
    pub second: [String; 2],
    pub triangular: bool,
    pub mu: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DMatrixReport {
    pub exponents: Vec<i64>,
    pub exponent_duality: bool,
    pub symmetric: bool,
    pub nonsingular_at_lowest: bool,
    /// `c` in `det 𝔇(ξ_y) = c·Φ(e_λ, y)^p`.
    pub law_constant: String,
    pub law_points: usize,
    pub law_holds: bool,
    /// Exponents pairwise distinct: antidiagonal `μ_i e_λ`, zeros below it.
    pub triangular: Option<bool>,
    pub mu: Option<Vec<String>>,
    /// For one repeated exponent: the change of basis making `𝔇` triangular.
    pub rechoice: Option<Rechoice>,
    /// The determinant law failed although `𝔇` is nonsingular at `e_{−λ}`.
    pub identification_question: bool,
    pub holds: bool,
}

/// Coordinates of `v` in a basis given as rows.
fn coordinates(basis: &[Vec<Rational>], v: &[Rational]) -> Result<Vec<Rational>> {
    let m = QMatrix::from_rows(v.len(), basis.to_vec())?.transpose();
    m.solve(v)?
        .ok_or_else(|| Error::CrossCheckFailed("bracket left the centraliser".into()))
}

struct DMatrix {
    /// `entries[i][j] = [e_i, [e_j, f]]` in ambient coordinates.
    entries: Vec<Vec<Vec<Rational>>>,
}

impl DMatrix {
    fn new(l: &LieAlgebra, t: &Sl2Triple, basis: &[Vec<Rational>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(basis.len());
        for bi in basis {
            let row = basis
                .iter()
                .map(|bj| l.bracket(bi, &l.bracket(bj, &t.f)?))
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Ok(DMatrix { entries })
    }

    fn at(&self, l: &LieAlgebra, y: &[Rational]) -> Result<QMatrix> {
        let killing = l.killing();
        let p = self.entries.len();
        let mut m = QMatrix::zeros(p, p);
        for i in 0..p {
            for j in 0..p {
                m.set(i, j, killing.pair(&self.entries[i][j], y)?);
            }
        }
        Ok(m)
    }

    /// Zeros strictly below the antidiagonal and antidiagonal entries `μ_i e_λ`, `μ_i ≠ 0`.
    fn triangular(&self, e_top: &[Rational]) -> (bool, Vec<String>) {
        let p = self.entries.len();
        let mut ok = true;
        let mut mu = Vec::new();
        for i in 0..p {
            for j in 0..p {
                let v = &self.entries[i][j];
                if i + j > p - 1 {
                    ok &= is_zero_vec(v);
                } else if i + j == p - 1 {
                    match multiple_of(v, e_top) {
                        Some(a) if !a.is_zero() => mu.push(a.to_string()),
                        _ => ok = false,
                    }
                }
            }
        }
        (ok, mu)
    }
}

pub fn d_matrix_checks(c: &ChevalleyAlgebra, cfg: &RandomCfg) -> Result<DMatrixReport> {
    let l = c.algebra();
    let p = c.rank();
    let (t, g) = principal_triple(c)?;
    let chain = centralizer_chain(l, &t)?;
    let mut basis = Vec::new();
    let mut exponents = Vec::new();
    for (deg, piece) in g.restrict(&chain.z)? {
        for v in piece.vectors() {
            basis.push(v);
            exponents.push(deg / 2);
        }
    }
    let exponent_duality = (0..p).all(|i| exponents[i] + exponents[p - 1 - i] == exponents[p - 1] + 1);
    let dm = DMatrix::new(l, &t, &basis)?;
    for row in &dm.entries {
        for v in row {
            coordinates(&basis, v)?;
        }
    }
    let symmetric = (0..p).all(|i| (0..p).all(|j| dm.entries[i][j] == dm.entries[j][i]));

    let (e_top, e_low) = c.extreme_root_vectors();
    let killing = l.killing();
    let det_low = dm.at(l, &e_low)?.determinant()?;
    let nonsingular_at_lowest = !det_low.is_zero();
    let scale_low: Rational = killing.pair(&e_top, &e_low)?;
    let law_constant = &det_low / scale_low.clone().pow(p as u32);

    let z_f = l.centralizer(std::slice::from_ref(&t.f))?;
    let mut rng = cfg.derive("determinant-law").rng();
    let bound = cfg.normalized().coeff_bound as i64;
    let extra = 4.max(cfg.trials);
    let mut law_holds = true;
    for _ in 0..extra {
        let coeffs: Vec<Rational> = (0..z_f.dim()).map(|_| rat(rng.random_range(-bound..=bound))).collect();
        let y = z_f.combine(&coeffs)?;
        let lhs = dm.at(l, &y)?.determinant()?;
        let rhs = &law_constant * killing.pair(&e_top, &y)?.pow(p as u32);
        law_holds &= lhs == rhs;
    }

    let distinct = exponents.windows(2).all(|w| w[0] < w[1]);
    let (mut triangular, mut mu, mut rechoice) = (None, None, None);
    if distinct {
        let (ok, m) = dm.triangular(&e_top);
        triangular = Some(ok);
        mu = Some(m);
    } else if let Some(i) = exponents.windows(2).position(|w| w[0] == w[1]) {
        rechoice = rechoose(l, &t, &basis, (i, i + 1), &e_top)?;
        triangular = Some(rechoice.as_ref().is_some_and(|r| r.triangular));
    }
    let identification_question = nonsingular_at_lowest && !law_holds;
    let holds = exponent_duality && symmetric && nonsingular_at_lowest && triangular != Some(false);
    Ok(DMatrixReport {
        exponents,
        exponent_duality,
        symmetric,
        nonsingular_at_lowest,
        law_constant: law_constant.to_string(),
        law_points: extra + 1,
        law_holds,
        triangular,
        mu,
        rechoice,
        identification_question,
        holds,
    })
}

/// `a + b·√d` for a fixed rational `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Surd {
    a: Rational,
    b: Rational,
}

impl Surd {
    fn rational(a: Rational) -> Self {
        Surd { a, b: Rational::zero() }
    }

    fn mul(&self, o: &Surd, d: &Rational) -> Surd {
        Surd {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn show(&self, d: &Rational) -> String {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => self.a.to_string(),
            (true, false) => format!("{}*sqrt({d})", self.b),
            (false, false) if self.b.is_negative() => format!("{}-{}*sqrt({d})", self.a, -&self.b),
            (false, false) => format!("{}+{}*sqrt({d})", self.a, self.b),
        }
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Makes `𝔇` triangular by re-choosing the basis of the eigenspace at positions
/// `(a, b)`: the second new vector is isotropic for the binary form `B` read off the
/// `e_λ`-coefficients, the first pairs nontrivially with it. The isotropic vector is
/// `(−q + √D, p)` with `D = q² − pr`, so it may need a quadratic extension of `Q`.
fn rechoose(
    l: &LieAlgebra,
    t: &Sl2Triple,
    basis: &[Vec<Rational>],
    (a, b): (usize, usize),
    e_top: &[Rational],
) -> Result<Option<Rechoice>> {
    let pos = [a, b];
    let mut block = [
        [Rational::zero(), Rational::zero()],
        [Rational::zero(), Rational::zero()],
    ];
    for i in 0..2 {
        for j in 0..2 {
            let v = l.bracket(&basis[pos[i]], &l.bracket(&basis[pos[j]], &t.f)?)?;
            match multiple_of(&v, e_top) {
                Some(x) => block[i][j] = x,
                None if is_zero_vec(&v) => {}
                None => return Ok(None),
            }
        }
    }
    let (p, q, r) = (block[0][0].clone(), block[0][1].clone(), block[1][1].clone());
    let disc = &q * &q - &p * &r;
    let one = || Surd::rational(rat(1));
    let zero = || Surd::rational(Rational::zero());
    let (d, second) = if p.is_zero() {
        (rat(1), [one(), zero()])
    } else if r.is_zero() {
        (rat(1), [zero(), one()])
    } else if let Some(s) = rational_sqrt(&disc) {
        (rat(1), [Surd::rational(-&q + s), Surd::rational(p.clone())])
    } else {
        (
            disc.clone(),
            [
                Surd {
                    a: -q.clone(),
                    b: rat(1),
                },
                Surd::rational(p.clone()),
            ],
        )
    };
    let form = |u: &[Surd; 2], v: &[Surd; 2]| -> Surd {
        let mut acc = zero();
        for i in 0..2 {
            for j in 0..2 {
                let t = u[i].mul(&v[j], &d).mul(&Surd::rational(block[i][j].clone()), &d);
                acc = Surd {
                    a: acc.a + t.a,
                    b: acc.b + t.b,
                };
            }
        }
        acc
    };
    let first = [[one(), zero()], [zero(), one()]]
        .into_iter()
        .find(|u| !form(u, &second).is_zero());
    let Some(first) = first else { return Ok(None) };

    // 𝔇 in the new basis, entries as pairs of vectors (rational part, √d part).
    let p_all = basis.len();
    let coeff = |k: usize| -> Vec<(usize, Surd)> {
        if k == a {
            vec![(a, first[0].clone()), (b, first[1].clone())]
        } else if k == b {
            vec![(a, second[0].clone()), (b, second[1].clone())]
        } else {
            vec![(k, one())]
        }
    };
    let old = DMatrix::new(l, t, basis)?;
    let n = l.dim();
    let mut triangular = true;
    let mut mu = Vec::new();
    for i in 0..p_all {
        for j in 0..p_all {
            if i + j < p_all - 1 {
                continue;
            }
            let mut ra = vec![Rational::zero(); n];
            let mut rb = vec![Rational::zero(); n];
            for (x, cx) in coeff(i) {
                for (y, cy) in coeff(j) {
                    let c = cx.mul(&cy, &d);
                    for (k, v) in old.entries[x][y].iter().enumerate() {
                        ra[k] += &c.a * v;
                        rb[k] += &c.b * v;
                    }
                }
            }
            if i + j > p_all - 1 {
                triangular &= is_zero_vec(&ra) && is_zero_vec(&rb);
                continue;
            }
            let ma = if is_zero_vec(&ra) {
                Some(Rational::zero())
            } else {
                multiple_of(&ra, e_top)
            };
            let mb = if is_zero_vec(&rb) {
                Some(Rational::zero())
            } else {
                multiple_of(&rb, e_top)
            };
            match (ma, mb) {
                (Some(x), Some(y)) if !(x.is_zero() && y.is_zero()) => mu.push(Surd { a: x, b: y }.show(&d)),
                _ => triangular = false,
            }
        }
    }
    let show = |u: &[Surd; 2]| [u[0].show(&d), u[1].show(&d)];
    Ok(Some(Rechoice {
        positions: (a + 1, b + 1),
        block: [
            [block[0][0].to_string(), block[0][1].to_string()],
            [block[1][0].to_string(), block[1][1].to_string()],
        ],
        discriminant: disc.to_string(),
        rational: d == rat(1),
        first: show(&first),
        second: show(&second),
        triangular,
        mu,
    }))
}
