#![allow(dead_code, clippy::needless_range_loop)]

use kirillov::exactla::{rat, QMatrix, Rational};
use kirillov::liecore::LieAlgebra;
use num_traits::Zero;

/// Naive rational Gaussian elimination, independent of the library's fraction-free code.
pub fn oracle_rank(m: &QMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = m.row_vectors();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in 0..cols {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// sl_2 on the basis (e, h, f) written out by hand.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["e".into(), "h".into(), "f".into()],
        vec![
            (0, 1, vec![(0, rat(-2))]),
            (0, 2, vec![(1, rat(1))]),
            (1, 2, vec![(2, rat(-2))]),
        ],
    )
    .unwrap()
}

/// Heisenberg algebra: [x, y] = z.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        vec![(0, 1, vec![(2, rat(1))])],
    )
    .unwrap()
}
