//! Search for nilpotent elements with a prescribed centraliser dimension.

use rand::Rng;

use crate::exactla::{rat, Rational};
use crate::liecore::LieAlgebra;
use crate::rng::RandomCfg;

/// Looks for `e` in the span of `positive` (a nilpotent subalgebra, e.g. the positive
/// root vectors) with `dim z(e) = target`. Tries all `0/±1` combinations in order of
/// support size, then seeded random combinations with entries in `[-3, 3]`, stopping
/// after `budget` candidates in total.
pub fn nilpotent_search(
    l: &LieAlgebra,
    positive: &[Vec<Rational>],
    target: usize,
    budget: usize,
    cfg: &RandomCfg,
) -> Option<Vec<Rational>> {
    let n = positive.len();
    let mut tried = 0usize;
    let check = |coeffs: &[i64]| -> Option<Vec<Rational>> {
        let mut e = l.zero_element();
        for (c, v) in coeffs.iter().zip(positive) {
            if *c != 0 {
                crate::exactla::matrix::axpy(&mut e, &rat(*c), v);
            }
        }
        if e.iter().all(num_traits::Zero::is_zero) {
            return None;
        }
        let dim_z = l.dim() - l.ad(&e).ok()?.rank();
        (dim_z == target).then_some(e)
    };
    // supports of increasing size, sign patterns in binary order
    for size in 1..=n {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            for signs in 0u64..(1u64 << size) {
                if tried >= budget {
                    return None;
                }
                tried += 1;
                let mut coeffs = vec![0i64; n];
                for (b, &i) in support.iter().enumerate() {
                    coeffs[i] = if signs & (1 << b) == 0 { 1 } else { -1 };
                }
                if let Some(e) = check(&coeffs) {
                    return Some(e);
                }
            }
            // next combination of `size` indices out of n
            let mut i = size;
            while i > 0 && support[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            support[i - 1] += 1;
            for j in i..size {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    let mut rng = cfg.rng();
    while tried < budget {
        tried += 1;
        let coeffs: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
        if let Some(e) = check(&coeffs) {
            return Some(e);
        }
    }
    None
}
