//! Completion of a nilpotent element to an sl2-triple.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::matrix::is_zero_vec;
use crate::exactla::{rat, QMatrix, Rational};
use crate::liecore::LieAlgebra;

/// `(e, h, f)` with `[e, f] = h`, `[h, e] = 2e`, `[h, f] = −2f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Triple {
    #[serde(skip)]
    pub e: Vec<Rational>,
    #[serde(skip)]
    pub h: Vec<Rational>,
    #[serde(skip)]
    pub f: Vec<Rational>,
}

fn scaled(v: &[Rational], s: i64) -> Vec<Rational> {
    v.iter().map(|x| x * rat(s)).collect()
}

impl Sl2Triple {
    /// Checks the three bracket relations exactly.
    pub fn is_valid(&self, l: &LieAlgebra) -> Result<bool> {
        Ok(l.bracket(&self.e, &self.f)? == self.h
            && l.bracket(&self.h, &self.e)? == scaled(&self.e, 2)
            && l.bracket(&self.h, &self.f)? == scaled(&self.f, -2))
    }
}

/// True when `ad x` is nilpotent.
pub fn is_ad_nilpotent(l: &LieAlgebra, x: &[Rational]) -> Result<bool> {
    let ad = l.ad(x)?;
    let mut p = ad.clone();
    let mut rank = p.rank();
    while rank > 0 {
        p = p.mul(&ad)?;
        let r = p.rank();
        if r == rank {
            return Ok(false);
        }
        rank = r;
    }
    Ok(true)
}

/// Completes a nonzero nilpotent `e` to an sl2-triple.
///
/// 1. solve `(ad e)² z = −2e`, so `h = [e, z]` satisfies `[h, e] = 2e`;
/// 2. `f' = z` has `[e, f'] = h`;
/// 3. `w = [h, f'] + 2f'` lies in `z(e)`; solve `(ad h + 2)u = w` inside `z(e)`,
///    where `ad h + 2` is invertible because `ad h` has nonnegative spectrum there;
/// 4. `f = f' − u`.
pub fn sl2_complete(l: &LieAlgebra, e: &[Rational]) -> Result<Sl2Triple> {
    if is_zero_vec(e) || !is_ad_nilpotent(l, e)? {
        return Err(Error::NotNilpotent);
    }
    let ad_e = l.ad(e)?;
    let ad_e2 = ad_e.mul(&ad_e)?;
    let z = ad_e2
        .solve(&scaled(e, -2))?
        .ok_or_else(|| Error::CompletionFailed("(ad e)^2 z = -2e has no solution".into()))?;
    let h = ad_e.mul_vec(&z)?;
    let hf = l.bracket(&h, &z)?;
    let w: Vec<Rational> = hf.iter().zip(&z).map(|(a, b)| a + b * rat(2)).collect();
    let ze = ad_e.kernel();
    let ad_h = l.ad(&h)?;
    let shifted = ad_h.add(&QMatrix::identity(l.dim()).scale(&rat(2)))?;
    // columns: (ad h + 2) applied to the basis of z(e)
    let cols: Vec<Vec<Rational>> = (0..ze.dim())
        .map(|i| shifted.mul_vec(ze.vector(i)))
        .collect::<Result<_>>()?;
    let system = QMatrix::from_fn(l.dim(), ze.dim(), |r, c| cols[c][r].clone());
    let coeffs = system
        .solve(&w)?
        .ok_or_else(|| Error::CompletionFailed("(ad h + 2)u = w has no solution in z(e)".into()))?;
    let u = ze.combine(&coeffs)?;
    let f: Vec<Rational> = z.iter().zip(&u).map(|(a, b)| a - b).collect();
    let t = Sl2Triple { e: e.to_vec(), h, f };
    if !t.is_valid(l)? {
        return Err(Error::CompletionFailed("triple relations do not hold".into()));
    }
    Ok(t)
}
