mod common;

use common::{oracle_rank, q};
use kirillov::exactla::rational::{format_rational, parse_rational};
use kirillov::exactla::{kernel, rank, rat, ratio, solve, MatrixPencil, QMatrix, Rational, Subspace};
use kirillov::RandomCfg;
use proptest::prelude::*;

#[test]
fn rank_examples() {
    assert_eq!(rank(&QMatrix::zeros(3, 3)), 0);
    assert_eq!(rank(&QMatrix::identity(4)), 4);
    let m = QMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
    assert_eq!(oracle_rank(&m), 2);
    assert_eq!(rank(&m), 2);
    assert_eq!(rank(&QMatrix::zeros(0, 5)), 0);
    assert_eq!(rank(&QMatrix::zeros(5, 0)), 0);
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel(&QMatrix::identity(3)).dim(), 0);
    assert_eq!(kernel(&QMatrix::zeros(2, 5)), Subspace::full(5));
    let k = kernel(&QMatrix::from_i64(&[&[1, 1, 0]]));
    assert_eq!(k.dim(), 2);
    assert!(k.contains(&q(&[1, -1, 0])).unwrap());
    assert!(k.contains(&q(&[0, 0, 1])).unwrap());
}

#[test]
fn solve_examples() {
    assert_eq!(solve(&QMatrix::identity(2), &q(&[1, 2])).unwrap(), Some(q(&[1, 2])));
    assert_eq!(solve(&QMatrix::zeros(2, 2), &q(&[1, 0])).unwrap(), None);
    let a = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
    assert_eq!(solve(&a, &q(&[3, 1])).unwrap(), Some(q(&[2, 1])));
    assert!(solve(&a, &q(&[1])).is_err());
}

#[test]
fn subspace_examples() {
    let x = Subspace::from_vectors(2, vec![q(&[1, 0])]).unwrap();
    let y = Subspace::from_vectors(2, vec![q(&[0, 1])]).unwrap();
    assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));
    assert!(x.is_direct(&y).unwrap());
    assert_eq!(x.intersect(&x).unwrap(), x);

    let s = Subspace::from_vectors(3, vec![q(&[1, 1, 0])]).unwrap();
    let t = Subspace::from_vectors(3, vec![q(&[1, 0, 0]), q(&[0, 1, 0])]).unwrap();
    assert_eq!(s.intersect(&t).unwrap(), s);

    let z = Subspace::zero(4);
    assert!(matches!(x.sum(&z), Err(kirillov::Error::AmbientMismatch(2, 4))));
}

#[test]
fn quotient_and_preimage() {
    let s = Subspace::from_vectors(3, vec![q(&[1, 2, 0])]).unwrap();
    let r = s.reduce(&q(&[3, 1, 5])).unwrap();
    assert!(s.contains(&q(&[2, 4, 0])).unwrap());
    // r differs from the input by a multiple of (1,2,0) and vanishes at the pivot
    assert_eq!(r[s.pivots()[0]], rat(0));
    let shift: Vec<Rational> = q(&[3, 1, 5]).iter().zip(&r).map(|(a, b)| a - b).collect();
    assert!(s.contains(&shift).unwrap());
    // preimage of s under the projection onto the first two coordinates
    let m = QMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let pre = s.preimage_under(&m).unwrap();
    assert_eq!(pre.dim(), 2);
    assert!(pre.contains(&q(&[1, 2, 7])).unwrap());
}

#[test]
fn determinant_and_inverse() {
    let a = QMatrix::from_i64(&[&[2, 1], &[7, 4]]);
    assert_eq!(a.determinant().unwrap(), rat(1));
    let inv = a.inverse().unwrap().unwrap();
    assert_eq!(a.mul(&inv).unwrap(), QMatrix::identity(2));
    assert_eq!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().unwrap(), None);
}

#[test]
fn rational_text_round_trip() {
    let x = ratio(-6, 4);
    assert_eq!(format_rational(&x), "-3/2");
    assert_eq!(parse_rational("-3/2").unwrap(), x);
    assert_eq!(parse_rational("5").unwrap(), rat(5));
    assert_eq!(format_rational(&rat(5)), "5/1");
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
}

fn pencil_1x1(form: Vec<(usize, Rational)>, vars: usize) -> MatrixPencil {
    let mut p = MatrixPencil::zeros(1, 1, vars);
    p.set_entry(0, 0, form).unwrap();
    p
}

#[test]
fn pencil_examples() {
    let cfg = RandomCfg::default();
    assert_eq!(pencil_1x1(vec![(0, rat(1))], 1).generic_rank(&cfg), 1);
    assert_eq!(MatrixPencil::zeros(3, 4, 2).generic_rank(&cfg), 0);
    let mut skew = MatrixPencil::zeros(2, 2, 1);
    skew.set_entry(0, 1, vec![(0, rat(1))]).unwrap();
    skew.set_entry(1, 0, vec![(0, rat(-1))]).unwrap();
    assert!(skew.is_skew());
    assert_eq!(skew.generic_rank(&cfg), 2);

    let p = pencil_1x1(vec![(0, rat(2)), (1, rat(1))], 2);
    assert_eq!(p.evaluate(&q(&[1, 3])).unwrap(), QMatrix::from_i64(&[&[5]]));
    assert!(p.evaluate(&q(&[0, 0])).unwrap().is_zero());
    assert!(p.evaluate(&q(&[1])).is_err());
}

#[test]
fn estimate_reproduces_each_trial() {
    let mut p = MatrixPencil::zeros(3, 3, 2);
    p.set_entry(0, 1, vec![(0, rat(1))]).unwrap();
    p.set_entry(1, 2, vec![(1, rat(1))]).unwrap();
    p.set_entry(2, 0, vec![(0, rat(1)), (1, rat(-1))]).unwrap();
    let est = p.estimate_rank(&RandomCfg::default());
    assert_eq!(est.trial_ranks.len(), 3);
    assert_eq!(p.evaluate(&est.witness).unwrap().rank(), est.rank);
    assert_eq!(est.rank, 3);
}

#[test]
fn certify_small_pencils() {
    use kirillov::exactla::certify::{symbolic_rank, DEFAULT_TERM_BUDGET};
    // generic 3x3 skew pencil: rank 2
    let mut p = MatrixPencil::zeros(3, 3, 3);
    let pairs = [(0, 1, 0), (0, 2, 1), (1, 2, 2)];
    for (i, j, v) in pairs {
        p.set_entry(i, j, vec![(v, rat(1))]).unwrap();
        p.set_entry(j, i, vec![(v, rat(-1))]).unwrap();
    }
    assert_eq!(symbolic_rank(&p, DEFAULT_TERM_BUDGET).unwrap(), 2);
    // generic 3x3 matrix of independent variables: rank 3
    let mut g = MatrixPencil::zeros(3, 3, 9);
    for i in 0..3 {
        for j in 0..3 {
            g.set_entry(i, j, vec![(3 * i + j, rat(1))]).unwrap();
        }
    }
    assert_eq!(symbolic_rank(&g, DEFAULT_TERM_BUDGET).unwrap(), 3);
    assert!(symbolic_rank(&g, 3).is_err());
}

fn small_matrix() -> impl Strategy<Value = QMatrix> {
    (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            QMatrix::from_fn(r, c, |i, j| {
                // sprinkle fractions so denominators are exercised
                ratio(v[i * c + j], 1 + ((i + j) % 3) as i64)
            })
        })
    })
}

proptest! {
    #[test]
    fn rank_matches_oracle(m in small_matrix()) {
        prop_assert_eq!(m.rank(), oracle_rank(&m));
    }

    #[test]
    fn rank_of_transpose(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn dimension_formula(a in small_matrix(), b in small_matrix()) {
        let n = a.cols();
        let b = QMatrix::from_fn(b.rows(), n, |i, j| if j < b.cols() { b.get(i, j).clone() } else { rat(1) });
        let s = Subspace::row_space(&a);
        let t = Subspace::row_space(&b);
        let sum = s.sum(&t).unwrap();
        let int = s.intersect(&t).unwrap();
        prop_assert_eq!(s.dim() + t.dim(), sum.dim() + int.dim());
        prop_assert!(int.is_subspace_of(&s).unwrap() && int.is_subspace_of(&t).unwrap());
    }

    #[test]
    fn solve_is_consistent(m in small_matrix(), seed in 0i64..50) {
        let x: Vec<Rational> = (0..m.cols()).map(|j| rat((seed + j as i64) % 7 - 3)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn generic_rank_monotone_in_trials(seed in any::<u64>(), extra in 1usize..4) {
        let mut p = MatrixPencil::zeros(3, 3, 2);
        p.set_entry(0, 0, vec![(0, rat(1)), (1, rat(1))]).unwrap();
        p.set_entry(1, 1, vec![(0, rat(1)), (1, rat(-1))]).unwrap();
        p.set_entry(2, 2, vec![(0, rat(2))]).unwrap();
        let few = RandomCfg { seed, trials: 1, ..RandomCfg::default() };
        let more = RandomCfg { trials: 1 + extra, ..few.clone() };
        let a = p.estimate_rank(&few);
        let b = p.estimate_rank(&more);
        prop_assert_eq!(&b.trial_ranks[..1], &a.trial_ranks[..]);
        prop_assert!(b.rank >= a.rank);
    }
}
