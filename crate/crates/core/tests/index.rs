mod common;

use std::sync::Arc;

use common::{heisenberg, q, sl2};
use kirillov::construct::{nilpotent_from_partition, MatrixAlgebra, Partition, SimpleAlgebra};
use kirillov::exactla::certify::CertifyRoute;
use kirillov::exactla::{rat, Subspace};
use kirillov::index::*;
use kirillov::liecore::{LieAlgebra, Representation};
use kirillov::RandomCfg;
use proptest::prelude::*;

fn certify() -> RandomCfg {
    RandomCfg {
        certify: true,
        ..RandomCfg::default()
    }
}

fn matrix(t: &str) -> SimpleAlgebra {
    SimpleAlgebra::matrix(t.parse().unwrap()).unwrap()
}

#[test]
fn pencils() {
    assert!(kirillov_pencil(&LieAlgebra::abelian(4)).is_zero());
    let l = sl2();
    let p = kirillov_pencil(&l);
    // [e, f] = h
    assert_eq!(p.coefficient_vector(0, 2), q(&[0, 1, 0]));
    assert!(p.is_skew());
    let m = p.evaluate(&q(&[3, -5, 7])).unwrap();
    assert_eq!(m.transpose().scale(&rat(-1)), m);

    let l = Arc::new(l);
    assert!(rep_pencil(&Representation::trivial(l.clone(), 2)).is_zero());
    assert_eq!(rep_pencil(&l.adjoint_rep()), p);
}

#[test]
fn borel_on_nilradical() {
    for t in ["A2", "C2"] {
        let g = matrix(t);
        let b = g.borel().unwrap();
        let rho = g.algebra().induced_rep(&b.p, &b.p_u).unwrap();
        let r = index_of_rep(&rho, &RandomCfg::default()).unwrap();
        assert_eq!(r.index, 0, "{t}");
        assert_eq!(r.generic_rank, b.p_u.dim(), "{t}");
        // every parabolic acts on its nilradical with index 0
        for (label, p) in g.standard_parabolics().unwrap() {
            let rho = g.algebra().induced_rep(&p.p, &p.p_u).unwrap();
            assert_eq!(
                index_of_rep(&rho, &RandomCfg::default()).unwrap().index,
                0,
                "{t} {label}"
            );
        }
    }
}

#[test]
fn index_examples() {
    let cfg = RandomCfg::default();
    assert_eq!(index_of(&sl2(), &cfg).unwrap().index, 1);
    assert_eq!(index_of(&heisenberg(), &cfg).unwrap().index, 1);
    let c2 = matrix("C2");
    let b = c2.borel().unwrap();
    assert_eq!(index_of_subalgebra(c2.algebra(), &b.p, &cfg).unwrap().index, 0);
    let l = Arc::new(sl2());
    assert_eq!(
        index_of_rep(&Representation::trivial(l.clone(), 3), &cfg)
            .unwrap()
            .index,
        3
    );
    assert_eq!(index_of_rep(&l.adjoint_rep(), &cfg).unwrap().index, 1);
}

#[test]
fn certified_indices() {
    let cfg = certify();
    let r = index_of(&heisenberg(), &cfg).unwrap();
    assert_eq!(
        (r.index, r.method, r.route),
        (1, Method::Certified, Some(CertifyRoute::SymbolicElimination))
    );
    let c2 = matrix("C2");
    let b = c2.borel().unwrap();
    let r = index_of_subalgebra(c2.algebra(), &b.p, &cfg).unwrap();
    assert_eq!((r.index, r.route), (0, Some(CertifyRoute::FullRank)));
    for t in ["A1", "A3", "B2", "C3", "D4"] {
        let g = matrix(t);
        let r = index_of_with_trace_rep(g.algebra(), &g.faithful_rep(), &cfg).unwrap();
        assert_eq!(r.index, g.rank(), "{t}");
        assert_eq!(r.route, Some(CertifyRoute::TraceInvariants), "{t}");
    }
    for t in ["A2", "B2", "G2"] {
        let g = SimpleAlgebra::chevalley(t.parse().unwrap()).unwrap();
        let r = index_of(g.algebra(), &cfg).unwrap();
        assert_eq!((r.index, r.method), (g.rank(), Method::Certified), "{t}");
    }
}

#[test]
fn stabilizers() {
    let l = Arc::new(sl2());
    let rho = l.adjoint_rep();
    assert_eq!(stabilizer_at(&rho, &q(&[0, 0, 0])).unwrap().dim(), 3);
    // Φ(h, ·) = (0, 8, 0) in the dual basis
    let xi = l.killing().functional(&q(&[0, 1, 0])).unwrap();
    assert_eq!(
        stabilizer_at(&rho, &xi).unwrap(),
        Subspace::from_vectors(3, vec![q(&[0, 1, 0])]).unwrap()
    );
    assert_eq!(coadjoint_stabilizer(&l, &xi).unwrap().dim(), 1);
}

#[test]
fn rais() {
    let cfg = RandomCfg::default();
    // trivial module: both sides decouple
    let l = Arc::new(sl2());
    let r = check_rais(&Representation::trivial(l.clone(), 2), &cfg).unwrap();
    assert!(r.holds);
    assert_eq!(r.ind_semidirect, 2 + 1);
    // adjoint module
    let r = check_rais(&l.adjoint_rep(), &cfg).unwrap();
    assert!(r.holds);
    assert_eq!((r.ind_semidirect, r.ind_rep, r.ind_stabilizer), (2, 1, 1));
    // Borel of sl2 on span{e}
    let a1 = matrix("A1");
    let b = a1.borel().unwrap();
    let rho = a1.algebra().induced_rep(&b.p, &b.p_u).unwrap();
    let r = check_rais(&rho, &cfg).unwrap();
    assert!(r.holds, "{r:?}");
    // sl2 on its natural module
    let nat = Representation::new(
        l.clone(),
        2,
        vec![
            kirillov::exactla::QMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            kirillov::exactla::QMatrix::from_i64(&[&[1, 0], &[0, -1]]),
            kirillov::exactla::QMatrix::from_i64(&[&[0, 0], &[1, 0]]),
        ],
    )
    .unwrap();
    assert!(nat.validate());
    let r = check_rais(&nat, &cfg).unwrap();
    assert!(r.holds);
    assert_eq!((r.ind_semidirect, r.ind_rep, r.ind_stabilizer), (1, 0, 1));
}

#[test]
fn ideal_inequality() {
    let cfg = RandomCfg::default();
    let a2 = matrix("A2");
    let l = a2.algebra();
    let full = Subspace::full(l.dim());
    let r = check_ideal_inequality(l, &full, &full, &cfg).unwrap();
    assert!(r.holds);
    for (label, p) in a2.standard_parabolics().unwrap() {
        let r = check_ideal_inequality(l, &p.p, &p.p_u, &cfg).unwrap();
        assert!(r.holds, "{label}");
        assert!(r.lhs <= p.l.dim(), "{label}");
    }
    let b = a2.borel().unwrap();
    assert!(matches!(
        check_ideal_inequality(l, &b.p, &b.l, &cfg),
        Err(kirillov::Error::NotAnIdeal)
    ));
    // normaliser of z(e) with z(e) as ideal
    let a3 = MatrixAlgebra::new("A3".parse().unwrap()).unwrap();
    let e = nilpotent_from_partition(&a3, &"2,2".parse::<Partition>().unwrap()).unwrap();
    let l = a3.algebra();
    let z = l.centralizer(&[e]).unwrap();
    let n = l.normalizer(&z).unwrap();
    let r = check_ideal_inequality(l, &n, &z, &cfg).unwrap();
    assert!(r.holds, "{r:?}");
}

#[test]
fn vinberg() {
    let cfg = RandomCfg::default();
    let l = Arc::new(sl2());
    let rho = l.adjoint_rep();
    let r = check_vinberg(&rho, &q(&[0, 0, 0]), &cfg).unwrap();
    assert_eq!(r.slack, 0);
    let r = check_vinberg(&rho, &q(&[1, 0, 0]), &cfg).unwrap();
    assert!(r.holds);
    assert_eq!((r.stabilizer_dim, r.orbit_dim_w, r.max_orbit), (1, 2, 2));

    let c2 = matrix("C2");
    let b = c2.borel().unwrap();
    let (sub, _) = c2.algebra().induced_subalgebra(&b.p).unwrap();
    let rho = Arc::new(sub).adjoint_rep();
    for w in [q(&[1, 2, -1, 0, 3, 1]), q(&[0, 0, 1, 0, 0, 0]), q(&[1, 0, 0, 0, 0, 0])] {
        assert!(check_vinberg(&rho, &w, &cfg).unwrap().holds);
    }
}

#[test]
fn stabilizer_index() {
    let cfg = RandomCfg::default();
    let a2 = matrix("A2");
    let r = check_stabilizer_index(a2.algebra(), &[], &cfg).unwrap();
    assert!(r.inequality_holds && r.regular_abelian && r.parity_ok);
    let generic = r.samples.iter().find(|s| s.label == "random0").unwrap();
    assert_eq!((generic.dim, generic.abelian), (2, true));

    // Borel of sp4: Frobenius, with a 2-dimensional abelian stabilizer somewhere
    let c2 = matrix("C2");
    let b = c2.borel().unwrap();
    let (sub, _) = c2.algebra().induced_subalgebra(&b.p).unwrap();
    assert_eq!(index_of(&sub, &cfg).unwrap().index, 0);
    let xi = find_abelian_stabilizer(&sub, 2, 10_000)
        .unwrap()
        .expect("witness exists");
    let r = check_stabilizer_index(&sub, &[xi], &cfg).unwrap();
    let w = r.samples.iter().find(|s| s.label == "extra0").unwrap();
    assert_eq!((w.dim, w.index, w.abelian), (2, 2, true));
    assert!(r.inequality_holds && r.regular_abelian);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn parity_and_certify_agree_on_centralizers(c in prop::collection::vec(-2i64..=2, 8)) {
        let a2 = matrix("A2");
        let l = a2.algebra();
        let z = l.centralizer(&[q(&c)]).unwrap();
        let (sub, _) = l.induced_subalgebra(&z).unwrap();
        let r = index_of(&sub, &RandomCfg::default()).unwrap();
        prop_assert!(r.parity_ok());
        let rc = index_of(&sub, &certify()).unwrap();
        if rc.method == Method::Certified {
            prop_assert_eq!(rc.index, r.index);
        }
    }

    #[test]
    fn stabilizer_dim_bounds_index(c in prop::collection::vec(-3i64..=3, 3)) {
        let l = sl2();
        let ind = index_of(&l, &RandomCfg::default()).unwrap().index;
        prop_assert!(coadjoint_stabilizer(&l, &q(&c)).unwrap().dim() >= ind);
    }
}
