//! Nilpotent matrices of prescribed Jordan type in the classical realizations.
//!
//! For `so`/`sp` the nilpotent is first built on a model space that is a sum of
//! Jordan blocks carrying invariant forms (single blocks of the right parity, pairs
//! of equal blocks otherwise), then moved to the antidiagonal form by an explicit
//! rational isometry assembled from hyperbolic pairs.

use num_traits::Zero;

use super::classical::MatrixAlgebra;
use super::types::{is_admissible, Family, Partition};
use crate::error::{Error, Result};
use crate::exactla::{rat, ratio, QMatrix, Rational};

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(m: &QMatrix) -> Result<Partition> {
    let n = m.rows();
    let mut ranks = vec![n];
    let mut p = QMatrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n + 1 {
            return Err(Error::NotNilpotent);
        }
        p = p.mul(m)?;
        let r = p.rank();
        if r == *ranks.last().expect("nonempty") {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    // number of blocks of size ≥ k is ranks[k-1] − ranks[k]
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Partition::new(parts)
}

struct Model {
    /// Nilpotent on the model space, `N0·w_k = w_{k+1}` within each block.
    nil: QMatrix,
    /// Columns of the adapted basis: `(x_i, y_i)` hyperbolic pairs and an optional centre.
    pairs: Vec<(Vec<Rational>, Vec<Rational>)>,
    centre: Option<Vec<Rational>>,
}

fn unit(n: usize, k: usize, c: Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[k] = c;
    v
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Model space for a form-preserving nilpotent with Jordan type `parts`.
fn build_model(parts: &[usize], symmetric: bool) -> Model {
    let n: usize = parts.iter().sum();
    let mut nil = QMatrix::zeros(n, n);
    let mut pairs = Vec::new();
    let mut centres: Vec<(Vec<Rational>, i64)> = Vec::new();
    let single_parity = if symmetric { 1 } else { 0 };
    let mut offset = 0;
    let mut i = 0;
    while i < parts.len() {
        let m = parts[i];
        if m % 2 == single_parity {
            // one block, form B(w_a, w_b) = s·(−1)^a δ_{a+b, m−1}
            for k in 0..m - 1 {
                nil.set(offset + k + 1, offset + k, rat(1));
            }
            let s = if symmetric {
                // centre w_c has B(w_c, w_c) = s·(−1)^c; alternate the centre signs
                let want = if centres.len().is_multiple_of(2) { 1 } else { -1 };
                want * sign((m - 1) / 2)
            } else {
                1
            };
            for a in 0..m / 2 {
                let x = unit(n, offset + a, rat(1));
                let y = unit(n, offset + m - 1 - a, rat(s * sign(a)));
                pairs.push((x, y));
            }
            if symmetric {
                let c = (m - 1) / 2;
                centres.push((unit(n, offset + c, rat(1)), s * sign(c)));
            }
            offset += m;
            i += 1;
        } else {
            // two equal blocks U ⊕ U', form B(u_a, u'_b) = (−1)^a δ_{a+b, m−1}
            debug_assert_eq!(parts.get(i + 1), Some(&m));
            for k in 0..m - 1 {
                nil.set(offset + k + 1, offset + k, rat(1));
                nil.set(offset + m + k + 1, offset + m + k, rat(1));
            }
            for a in 0..m {
                let x = unit(n, offset + a, rat(1));
                let y = unit(n, offset + m + m - 1 - a, rat(sign(a)));
                pairs.push((x, y));
            }
            offset += 2 * m;
            i += 2;
        }
    }
    // centres alternate +1, −1: pair them as (c1 + c2, (c1 − c2)/2)
    let mut centre = None;
    let mut it = centres.into_iter();
    while let Some((c1, s1)) = it.next() {
        debug_assert_eq!(s1, 1);
        match it.next() {
            Some((c2, _)) => {
                let x: Vec<Rational> = c1.iter().zip(&c2).map(|(a, b)| a + b).collect();
                let y: Vec<Rational> = c1.iter().zip(&c2).map(|(a, b)| (a - b) * ratio(1, 2)).collect();
                pairs.push((x, y));
            }
            None => centre = Some(c1),
        }
    }
    Model { nil, pairs, centre }
}

/// Matrix with Jordan type `parts` in the realization of `alg`.
pub fn nilpotent_matrix(alg: &MatrixAlgebra, p: &Partition) -> Result<QMatrix> {
    let ty = alg.ty();
    if !is_admissible(ty, p) {
        return Err(Error::InadmissiblePartition {
            ty: ty.to_string(),
            partition: p.to_string(),
        });
    }
    let n = ty.matrix_size();
    let x = match ty.family() {
        Family::A => {
            let mut m = QMatrix::zeros(n, n);
            let mut offset = 0;
            for &part in p.parts() {
                for k in 0..part - 1 {
                    m.set(offset + k, offset + k + 1, rat(1));
                }
                offset += part;
            }
            m
        }
        _ => {
            let symmetric = ty.form_is_symmetric().expect("B, C, D carry a form");
            let model = build_model(p.parts(), symmetric);
            // column i of `a` is the model vector sent to the standard vector e_i
            let mut a = QMatrix::zeros(n, n);
            for (i, (x, y)) in model.pairs.iter().enumerate() {
                for r in 0..n {
                    a.set(r, i, x[r].clone());
                    a.set(r, n - 1 - i, y[r].clone());
                }
            }
            if let Some(c) = &model.centre {
                for r in 0..n {
                    a.set(r, n / 2, c[r].clone());
                }
            }
            let inv = a
                .inverse()?
                .ok_or_else(|| Error::CrossCheckFailed("adapted basis is singular".into()))?;
            inv.mul(&model.nil)?.mul(&a)?
        }
    };
    if let Some(j) = alg.form() {
        // XᵀJ + JX = 0
        if !x.transpose().mul(j)?.add(&j.mul(&x)?)?.is_zero() {
            return Err(Error::CrossCheckFailed(format!(
                "nilpotent for {p} does not preserve the form"
            )));
        }
    }
    if jordan_type(&x)? != *p {
        return Err(Error::CrossCheckFailed(format!(
            "nilpotent for {p} has the wrong Jordan type"
        )));
    }
    Ok(x)
}

/// `nilpotent_from_partition`: coordinates of a nilpotent of Jordan type `p`.
pub fn nilpotent_from_partition(alg: &MatrixAlgebra, p: &Partition) -> Result<Vec<Rational>> {
    alg.element_of(&nilpotent_matrix(alg, p)?)
}
