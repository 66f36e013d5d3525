//! Fraction-free elimination on integer rows.
//!
//! Rows are kept primitive (content divided out) after every update, which keeps
//! entries close to the size of the minors Bareiss elimination would produce.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::QMatrix;
use super::rational::Rational;

/// Scales each row of `m` by the lcm of its denominators.
pub(crate) fn integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| integer_row(m.row(i))).collect()
}

pub(crate) fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = super::rational::denominator_lcm(row);
    row.iter()
        .map(|q| {
            if q.is_zero() {
                BigInt::zero()
            } else {
                q.numer() * (&l / q.denom())
            }
        })
        .collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// Eliminates column `c` of `target` using `pivot` (whose entry at `c` is nonzero).
fn eliminate(target: &mut [BigInt], pivot: &[BigInt], c: usize) {
    let a = &pivot[c];
    let b = target[c].clone();
    let g = a.gcd(&b);
    let ra = a / &g;
    let rb = &b / &g;
    if !ra.is_one() {
        for x in target.iter_mut() {
            if !x.is_zero() {
                *x *= &ra;
            }
        }
    }
    for (x, p) in target.iter_mut().zip(pivot) {
        if !p.is_zero() {
            *x -= &rb * p;
        }
    }
    make_primitive(target);
}

/// Brings `rows` to echelon form in place and returns the pivot columns.
///
/// With `reduced` set, pivot columns are also cleared above the pivot, so dividing
/// each pivot row by its pivot entry yields the reduced row-echelon form.
pub(crate) fn echelon(rows: &mut [Vec<BigInt>], cols: usize, reduced: bool) -> Vec<usize> {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let best = (rank..n)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].bits());
        let Some(p) = best else { continue };
        rows.swap(rank, p);
        make_primitive(&mut rows[rank]);
        if rows[rank][c].is_negative() {
            for x in rows[rank].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot = rows[rank].clone();
        let start = if reduced { 0 } else { rank + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i != rank && !row[c].is_zero() {
                eliminate(row, &pivot, c);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Exact rank of a list of integer rows.
pub(crate) fn integer_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    echelon(&mut rows, cols, false).len()
}
