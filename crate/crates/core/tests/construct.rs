mod common;

use common::q;
use kirillov::construct::*;
use kirillov::exactla::{rat, Rational};
use kirillov::liecore::LieAlgebra;
use kirillov::RandomCfg;
use proptest::prelude::*;

fn ct(s: &str) -> ClassicalType {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn dim_z(l: &LieAlgebra, e: &[Rational]) -> usize {
    l.centralizer(&[e.to_vec()]).unwrap().dim()
}

/// Multiset of ad-h eigenvalue degrees, read off by testing each integer degree.
fn grading_dims(l: &LieAlgebra, h: &[Rational], range: i64) -> Vec<(i64, usize)> {
    let ad = l.ad(h).unwrap();
    let mut out = Vec::new();
    for i in -range..=range {
        let shifted = ad
            .sub(&kirillov::exactla::QMatrix::identity(l.dim()).scale(&rat(i)))
            .unwrap();
        let d = l.dim() - shifted.rank();
        if d > 0 {
            out.push((i, d));
        }
    }
    out
}

#[test]
fn classical_dimensions() {
    for (t, d) in [
        ("A1", 3),
        ("A3", 15),
        ("B2", 10),
        ("B3", 21),
        ("C2", 10),
        ("C3", 21),
        ("D4", 28),
    ] {
        let m = MatrixAlgebra::new(ct(t)).unwrap();
        assert_eq!(m.algebra().dim(), d, "{t}");
        assert!(m.algebra().validate(), "{t}");
        assert!(m.algebra().killing().is_nondegenerate(), "{t}");
    }
    assert!(ClassicalType::new(Family::D, 2).is_err());
    assert!(ClassicalType::new(Family::B, 1).is_err());
}

#[test]
fn partitions() {
    assert_eq!(admissible_partitions(ct("A1")), vec![part("2"), part("1,1")]);
    assert_eq!(
        admissible_partitions(ct("C2")),
        vec![part("4"), part("2,2"), part("2,1,1"), part("1,1,1,1")]
    );
    assert!(admissible_partitions(ct("D4")).contains(&part("5,3")));
    // counts of nilpotent orbits, very even ones listed once
    let expected = [
        ("A1", 2),
        ("A2", 3),
        ("A3", 5),
        ("A4", 7),
        ("A5", 11),
        ("B2", 4),
        ("B3", 7),
        ("B4", 13),
        ("C2", 4),
        ("C3", 8),
        ("D4", 10),
    ];
    for (t, n) in expected {
        assert_eq!(admissible_partitions(ct(t)).len(), n, "{t}");
    }
    assert!(part("4,4").is_very_even());
    assert_eq!(part("5,3").to_string(), "5,3");
}

#[test]
fn nilpotent_examples() {
    let a1 = MatrixAlgebra::new(ct("A1")).unwrap();
    let m = nilpotent_matrix(&a1, &part("2")).unwrap();
    assert_eq!(m.rank(), 1);
    assert_eq!(jordan_type(&m).unwrap(), part("2"));

    let a3 = MatrixAlgebra::new(ct("A3")).unwrap();
    let m = nilpotent_matrix(&a3, &part("2,2")).unwrap();
    assert_eq!(m.rank(), 2);
    assert!(m.mul(&m).unwrap().is_zero());

    let d4 = MatrixAlgebra::new(ct("D4")).unwrap();
    let e = nilpotent_from_partition(&d4, &part("5,3")).unwrap();
    assert_eq!(dim_z(d4.algebra(), &e), 6);

    assert!(matches!(
        nilpotent_from_partition(&d4, &part("2,1,1,1,1,1,1")),
        Err(kirillov::Error::InadmissiblePartition { .. })
    ));
}

#[test]
fn jordan_type_round_trip_all_orbits() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "D4"] {
        let alg = MatrixAlgebra::new(ct(t)).unwrap();
        for p in admissible_partitions(ct(t)) {
            let m = nilpotent_matrix(&alg, &p).unwrap();
            assert_eq!(jordan_type(&m).unwrap(), p, "{t} {p}");
            if let Some(j) = alg.form() {
                // X^T J + J X = 0
                assert!(
                    m.transpose()
                        .mul(j)
                        .unwrap()
                        .add(&j.mul(&m).unwrap())
                        .unwrap()
                        .is_zero(),
                    "{t} {p}"
                );
            } else {
                assert!(m.trace() == Rational::from_integer(0.into()));
            }
        }
    }
}

#[test]
fn sl2_completion() {
    let a1 = MatrixAlgebra::new(ct("A1")).unwrap();
    let l = a1.algebra();
    let e = nilpotent_from_partition(&a1, &part("2")).unwrap();
    let t = sl2_complete(l, &e).unwrap();
    assert!(t.is_valid(l).unwrap());
    let h = a1.matrix_of(&t.h).unwrap();
    assert_eq!(h.get(0, 0), &rat(1));
    assert_eq!(h.get(1, 1), &rat(-1));
    assert_ne!(l.killing_pair(&t.h, &t.h).unwrap(), rat(0));
    assert!(sl2_complete(l, &l.zero_element()).is_err());
    let diag = a1
        .element_of(&kirillov::exactla::QMatrix::from_i64(&[&[1, 0], &[0, -1]]))
        .unwrap();
    assert!(matches!(sl2_complete(l, &diag), Err(kirillov::Error::NotNilpotent)));

    let a2 = MatrixAlgebra::new(ct("A2")).unwrap();
    let e = nilpotent_from_partition(&a2, &part("3")).unwrap();
    let t = sl2_complete(a2.algebra(), &e).unwrap();
    assert_eq!(
        grading_dims(a2.algebra(), &t.h, 6),
        vec![(-4, 1), (-2, 2), (0, 2), (2, 2), (4, 1)]
    );
}

#[test]
fn triples_for_every_orbit() {
    for t in ["A3", "B3", "C3", "D4"] {
        let alg = MatrixAlgebra::new(ct(t)).unwrap();
        let l = alg.algebra();
        for p in admissible_partitions(ct(t)) {
            if p.is_trivial() {
                continue;
            }
            let e = nilpotent_from_partition(&alg, &p).unwrap();
            let tr = sl2_complete(l, &e).unwrap();
            assert!(tr.is_valid(l).unwrap(), "{t} {p}");
            // h acts on z(e) with nonnegative integer eigenvalues
            let z = l.centralizer(std::slice::from_ref(&e)).unwrap();
            let dims = grading_dims(l, &tr.h, 12);
            assert_eq!(dims.iter().map(|x| x.1).sum::<usize>(), l.dim(), "{t} {p}");
            let hz = l.bracket_with(&tr.h, &z).unwrap();
            assert!(hz.is_subspace_of(&z).unwrap());
        }
    }
}

#[test]
fn chevalley_algebras() {
    for (t, d, npos) in [
        ("A1", 3, 1),
        ("A2", 8, 3),
        ("B2", 10, 4),
        ("C3", 21, 9),
        ("D4", 28, 12),
        ("G2", 14, 6),
    ] {
        let c = ChevalleyAlgebra::from_type(t.parse().unwrap()).unwrap();
        assert_eq!(c.algebra().dim(), d, "{t}");
        assert_eq!(c.datum().positive_roots().len(), npos, "{t}");
        assert!(c.algebra().validate(), "{t}");
        let k = c.algebra().killing();
        assert!(k.is_nondegenerate(), "{t}");
        let (el, fl) = c.extreme_root_vectors();
        assert_eq!(k.pair(&el, &fl).unwrap(), rat(1), "{t}");
        assert_eq!(dim_z(c.algebra(), &c.regular_nilpotent()), c.rank(), "{t}");
    }
    let g2 = ChevalleyAlgebra::from_type("G2".parse().unwrap()).unwrap();
    assert_eq!(g2.datum().highest_root(), &[3, 2]);
    let a2 = ChevalleyAlgebra::from_type("A2".parse().unwrap()).unwrap();
    assert_eq!(a2.datum().highest_root(), &[1, 1]);
    assert!(RootDatum::new("bad".into(), vec![vec![2, -1], vec![-4, 2]]).is_err());
}

#[test]
fn chevalley_f4_validates() {
    let f4 = ChevalleyAlgebra::from_type("F4".parse().unwrap()).unwrap();
    assert_eq!(f4.algebra().dim(), 52);
    assert!(f4.algebra().validate());
}

#[test]
fn chevalley_normalisation() {
    // Φ(e_α, e_{−α}) = 1 for every root and [e_α, e_{−α}] is Killing-dual to α
    let c = ChevalleyAlgebra::from_type("B3".parse().unwrap()).unwrap();
    let l = c.algebra();
    let k = l.killing();
    for r in c.datum().positive_roots() {
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        let (x, y) = (c.root_vector(r).unwrap(), c.root_vector(&neg).unwrap());
        assert_eq!(k.pair(&x, &y).unwrap(), rat(1));
        let h = l.bracket(&x, &y).unwrap();
        for s in c.datum().positive_roots() {
            let v = c.root_vector(s).unwrap();
            let hv = l.bracket(&h, &v).unwrap();
            let idx = c.root_vector_index(s).unwrap();
            // Killing-induced pairing = normalised pairing / (2·h^∨), h^∨(B3) = 5
            assert_eq!(&hv[idx] * rat(20), c.datum().inner(r, s));
        }
    }
}

#[test]
fn regular_exponents() {
    // h-eigenvalues on z(e) are twice the exponents
    for (t, exps) in [
        ("A3", vec![1, 2, 3]),
        ("B2", vec![1, 3]),
        ("G2", vec![1, 5]),
        ("D4", vec![1, 3, 3, 5]),
    ] {
        let c = ChevalleyAlgebra::from_type(t.parse().unwrap()).unwrap();
        let l = c.algebra();
        let e = c.regular_nilpotent();
        let tr = sl2_complete(l, &e).unwrap();
        let z = l.centralizer(&[e]).unwrap();
        let ad = l.ad(&tr.h).unwrap();
        let mut got = Vec::new();
        for m in 0..=12i64 {
            let ker = ad
                .sub(&kirillov::exactla::QMatrix::identity(l.dim()).scale(&rat(2 * m)))
                .unwrap()
                .kernel();
            let d = ker.intersect(&z).unwrap().dim();
            got.extend(std::iter::repeat_n(m, d));
        }
        assert_eq!(got, exps, "{t}");
    }
}

#[test]
fn parabolics() {
    let a3 = SimpleAlgebra::matrix(ct("A3")).unwrap();
    let b = a3.borel().unwrap();
    assert_eq!((b.p.dim(), b.p_u.dim(), b.l.dim()), (9, 6, 3));
    let full = a3.parabolic(&ParabolicSpec::Composition(vec![4])).unwrap();
    assert_eq!((full.p.dim(), full.p_u.dim()), (15, 0));
    assert_eq!(a3.standard_parabolics().unwrap().len(), 8);
    let c2 = SimpleAlgebra::matrix(ct("C2")).unwrap();
    assert_eq!(c2.standard_parabolics().unwrap().len(), 4);
    let a1 = SimpleAlgebra::matrix(ct("A1")).unwrap();
    let b = a1.borel().unwrap();
    assert_eq!((b.p.dim(), b.p_u.dim()), (2, 1));
    assert!(matches!(
        a3.parabolic(&ParabolicSpec::Composition(vec![1, 2])),
        Err(kirillov::Error::InvalidSpec(_))
    ));
    assert!(c2.parabolic(&ParabolicSpec::Composition(vec![1, 3])).is_err());

    for alg in [a3, c2, SimpleAlgebra::chevalley("G2".parse().unwrap()).unwrap()] {
        let l = alg.algebra();
        for (label, p) in alg.standard_parabolics().unwrap() {
            assert!(l.is_subalgebra(&p.p).unwrap(), "{label}");
            assert!(l.is_subalgebra(&p.l).unwrap(), "{label}");
            assert!(l.bracket_spaces(&p.p, &p.p_u).unwrap().is_subspace_of(&p.p_u).unwrap());
            assert!(p.l.is_direct(&p.p_u).unwrap());
            assert_eq!(p.l.sum(&p.p_u).unwrap(), p.p);
        }
    }
    let g2 = SimpleAlgebra::chevalley("G2".parse().unwrap()).unwrap();
    let b = g2.borel().unwrap();
    assert_eq!((b.p.dim(), b.p_u.dim(), b.l.dim()), (8, 6, 2));
}

#[test]
fn dynkin_labels() {
    assert_eq!(weighted_dynkin(ct("A1"), &part("2")).unwrap(), vec![2]);
    assert_eq!(weighted_dynkin(ct("A2"), &part("3")).unwrap(), vec![2, 2]);
    assert_eq!(weighted_dynkin(ct("A2"), &part("2,1")).unwrap(), vec![1, 1]);
    assert_eq!(weighted_dynkin(ct("D4"), &part("5,3")).unwrap(), vec![2, 0, 2, 2]);
    assert_eq!(weighted_dynkin(ct("B2"), &part("5")).unwrap(), vec![2, 2]);
    assert_eq!(weighted_dynkin(ct("C2"), &part("4")).unwrap(), vec![2, 2]);
    for t in ["A4", "B3", "C3", "D4"] {
        for p in admissible_partitions(ct(t)) {
            let w = weighted_dynkin(ct(t), &p).unwrap();
            assert_eq!(w.len(), ct(t).rank());
            assert!(w.iter().all(|x| (0..=2).contains(x)), "{t} {p} {w:?}");
        }
    }
}

#[test]
fn search() {
    let g2 = ChevalleyAlgebra::from_type("G2".parse().unwrap()).unwrap();
    let l = g2.algebra();
    let cfg = RandomCfg::default();
    let pos = g2.positive_root_vectors();
    let e = nilpotent_search(l, &pos, 2, 1000, &cfg).unwrap();
    assert_eq!(dim_z(l, &e), 2);
    let e = nilpotent_search(l, &pos, 4, 1000, &cfg).unwrap();
    let t = sl2_complete(l, &e).unwrap();
    let dims = grading_dims(l, &t.h, 12);
    assert!(dims.contains(&(2, 4)) && dims.contains(&(4, 1)), "{dims:?}");
    assert!(nilpotent_search(l, &pos, 1, 200, &cfg).is_none());
}

#[test]
fn regular_partitions() {
    assert_eq!(regular_partition(ct("D4")), part("7,1"));
    assert_eq!(regular_partition(ct("B3")), part("7"));
    let d4 = SimpleAlgebra::matrix(ct("D4")).unwrap();
    let e = d4.regular_nilpotent().unwrap();
    assert_eq!(dim_z(d4.algebra(), &e), 4);
    let _ = q(&[0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn killing_associative_on_chevalley(a in prop::collection::vec(-3i64..=3, 14), b in prop::collection::vec(-3i64..=3, 14), c in prop::collection::vec(-3i64..=3, 14)) {
        let g2 = ChevalleyAlgebra::from_type("G2".parse().unwrap()).unwrap();
        let l = g2.algebra();
        let k = l.killing();
        let (x, y, z) = (q(&a), q(&b), q(&c));
        let lhs = k.pair(&l.bracket(&x, &y).unwrap(), &z).unwrap();
        let rhs = k.pair(&x, &l.bracket(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_type_recovers_partition(idx in 0usize..13) {
        let t = ct("B4");
        let parts = admissible_partitions(t);
        let p = &parts[idx % parts.len()];
        let alg = MatrixAlgebra::new(t).unwrap();
        let m = nilpotent_matrix(&alg, p).unwrap();
        prop_assert_eq!(&jordan_type(&m).unwrap(), p);
    }
}
