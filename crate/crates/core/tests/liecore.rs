mod common;

use std::sync::Arc;

use common::{heisenberg, q, sl2};
use kirillov::exactla::{rat, QMatrix, Subspace};
use kirillov::liecore::{semidirect, LieAlgebra, Representation};
use proptest::prelude::*;

#[test]
fn sl2_brackets_and_ad() {
    let g = sl2();
    let (e, h, f) = (q(&[1, 0, 0]), q(&[0, 1, 0]), q(&[0, 0, 1]));
    assert_eq!(g.bracket(&e, &f).unwrap(), h);
    assert_eq!(g.bracket(&h, &e).unwrap(), q(&[2, 0, 0]));
    assert_eq!(g.bracket(&e, &e).unwrap(), q(&[0, 0, 0]));
    assert!(g.ad(&q(&[0, 0, 0])).unwrap().is_zero());
    assert_eq!(
        g.ad(&h).unwrap(),
        QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]])
    );
    assert!(g.bracket(&e, &q(&[1, 0])).is_err());
}

#[test]
fn sl2_killing_matches_hand_traces() {
    let g = sl2();
    // adjoint matrices written out by hand in the basis (e, h, f)
    let ad_e = QMatrix::from_i64(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]);
    let ad_h = QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
    let ad_f = QMatrix::from_i64(&[&[0, 0, 0], &[-1, 0, 0], &[0, 2, 0]]);
    assert_eq!(ad_e.mul(&ad_f).unwrap().trace(), rat(4));
    assert_eq!(ad_h.mul(&ad_h).unwrap().trace(), rat(8));
    let k = g.killing();
    assert_eq!(k.pair(&q(&[1, 0, 0]), &q(&[0, 0, 1])).unwrap(), rat(4));
    assert_eq!(k.pair(&q(&[0, 1, 0]), &q(&[0, 1, 0])).unwrap(), rat(8));
    assert!(k.is_nondegenerate());
    let (x, y) = (q(&[1, 2, -1]), q(&[3, 0, 5]));
    let tr = g.ad(&x).unwrap().mul(&g.ad(&y).unwrap()).unwrap().trace();
    assert_eq!(g.killing_pair(&x, &y).unwrap(), tr);
    assert!(LieAlgebra::abelian(4).killing().gram().is_zero());
}

#[test]
fn validate_examples() {
    assert!(sl2().validate());
    assert!(heisenberg().validate());
    let bad = LieAlgebra::from_table(
        vec!["a".into(), "b".into()],
        vec![vec![], vec![(0, rat(1))], vec![(0, rat(1))], vec![]],
    )
    .unwrap();
    assert!(!bad.validate());
    // antisymmetric but violating Jacobi: [a,b]=c, [b,c]=a, [c,a]=a
    let non_jacobi = LieAlgebra::from_brackets(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            (0, 1, vec![(2, rat(1))]),
            (1, 2, vec![(0, rat(1))]),
            (0, 2, vec![(0, rat(-1))]),
        ],
    )
    .unwrap();
    assert!(!non_jacobi.validate());
}

#[test]
fn centralizers_and_normalizers() {
    let g = sl2();
    let e = q(&[1, 0, 0]);
    assert_eq!(g.centralizer(&[q(&[0, 0, 0])]).unwrap(), Subspace::full(3));
    let span_e = Subspace::from_vectors(3, vec![e.clone()]).unwrap();
    assert_eq!(g.centralizer(std::slice::from_ref(&e)).unwrap(), span_e);
    let eh = Subspace::from_vectors(3, vec![e.clone(), q(&[0, 1, 0])]).unwrap();
    assert_eq!(g.normalizer(&span_e).unwrap(), eh);
    assert_eq!(g.normalizer(&Subspace::full(3)).unwrap(), Subspace::full(3));
    assert_eq!(g.normalizer(&Subspace::zero(3)).unwrap(), Subspace::full(3));
    assert_eq!(g.center().dim(), 0);
    assert_eq!(g.orthogonal_complement(&span_e, &g.killing()).unwrap(), eh);
    assert_eq!(
        g.orthogonal_complement(&Subspace::zero(3), &g.killing()).unwrap(),
        Subspace::full(3)
    );
    let a = LieAlgebra::abelian(3);
    let s = Subspace::from_vectors(3, vec![q(&[1, 1, 0])]).unwrap();
    assert_eq!(a.centre_of_subspace(&s).unwrap(), s);
    let not_closed = Subspace::from_vectors(3, vec![e, q(&[0, 0, 1])]).unwrap();
    assert!(matches!(
        g.centre_of_subspace(&not_closed),
        Err(kirillov::Error::NotASubalgebra)
    ));
}

#[test]
fn induced_structures() {
    let g = sl2();
    let (sub, emb) = g.induced_subalgebra(&Subspace::full(3)).unwrap();
    assert_eq!(sub.dim(), 3);
    assert_eq!(emb, QMatrix::identity(3));
    assert_eq!(sub.killing().gram(), g.killing().gram());
    let cartan = Subspace::from_vectors(3, vec![q(&[0, 1, 0])]).unwrap();
    assert!(g.induced_subalgebra(&cartan).unwrap().0.is_abelian());

    let borel = Subspace::from_vectors(3, vec![q(&[1, 0, 0]), q(&[0, 1, 0])]).unwrap();
    let (b, emb) = g.induced_subalgebra(&borel).unwrap();
    assert!(b.validate());
    // echelon basis is (e, h); [q1, q2] = [e, h] = -2e
    assert_eq!(emb.row(0), &q(&[1, 0, 0])[..]);
    assert_eq!(b.bracket(&q(&[0, 1]), &q(&[1, 0])).unwrap(), q(&[2, 0]));

    let span_e = Subspace::from_vectors(3, vec![q(&[1, 0, 0])]).unwrap();
    let rho = g.induced_rep(&borel, &span_e).unwrap();
    assert!(rho.validate());
    assert_eq!(rho.action(0), &QMatrix::from_i64(&[&[0]]));
    assert_eq!(rho.action(1), &QMatrix::from_i64(&[&[2]]));
    let cartan_span = Subspace::from_vectors(3, vec![q(&[0, 1, 0])]).unwrap();
    assert!(matches!(
        g.induced_rep(&borel, &cartan_span),
        Err(kirillov::Error::NotInvariant)
    ));

    // adjoint of the subalgebra agrees with the induced representation on itself
    let self_rep = g.induced_rep(&borel, &borel).unwrap();
    let b = Arc::new(b);
    let adj = b.adjoint_rep();
    assert_eq!(self_rep.actions(), adj.actions());
}

#[test]
fn semidirect_products() {
    let g = Arc::new(sl2());
    // natural 2-dim module: e = E12, h = diag(1,-1), f = E21
    let natural = Representation::new(
        g.clone(),
        2,
        vec![
            QMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            QMatrix::from_i64(&[&[1, 0], &[0, -1]]),
            QMatrix::from_i64(&[&[0, 0], &[1, 0]]),
        ],
    )
    .unwrap();
    assert!(natural.validate());
    let s = semidirect(&g, &natural).unwrap();
    assert_eq!(s.dim(), 5);
    assert!(s.validate());
    let v = Subspace::from_vectors(5, vec![q(&[1, 0, 0, 0, 0]), q(&[0, 1, 0, 0, 0])]).unwrap();
    assert!(s.induced_subalgebra(&v).unwrap().0.is_abelian());
    assert!(s.is_invariant_under(&Subspace::full(5), &v).unwrap());

    let triv = semidirect(
        &LieAlgebra::abelian(2),
        &Representation::trivial(Arc::new(LieAlgebra::abelian(2)), 3),
    )
    .unwrap();
    assert!(triv.is_abelian());
    assert_eq!(triv.dim(), 5);
    let direct = semidirect(&g, &Representation::trivial(g.clone(), 2)).unwrap();
    assert!(direct.validate());
    assert_eq!(direct.center().dim(), 2);
}

#[test]
fn json_round_trip() {
    let s = semidirect(&sl2(), &Representation::trivial(Arc::new(sl2()), 1)).unwrap();
    let text = s.to_json();
    let back = LieAlgebra::from_json(&text).unwrap();
    assert_eq!(back, s);
    assert_eq!(back.to_json(), text);
    assert!(text.starts_with("{\"dim\":4,"));
    assert!(LieAlgebra::from_json("{\"dim\":2,\"labels\":[\"a\"],\"brackets\":[]}").is_err());
}

proptest! {
    #[test]
    fn killing_is_associative(x in proptest::collection::vec(-5i64..5, 3),
                              y in proptest::collection::vec(-5i64..5, 3),
                              z in proptest::collection::vec(-5i64..5, 3)) {
        let g = sl2();
        let k = g.killing();
        let (x, y, z) = (q(&x), q(&y), q(&z));
        let lhs = k.pair(&g.bracket(&x, &y).unwrap(), &z).unwrap();
        let rhs = k.pair(&x, &g.bracket(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn centralizer_inside_normalizer(x in proptest::collection::vec(-3i64..3, 3)) {
        let g = sl2();
        let x = q(&x);
        let span = Subspace::from_vectors(3, vec![x.clone()]).unwrap();
        let c = g.centralizer(&[x]).unwrap();
        prop_assert!(c.is_subspace_of(&g.normalizer(&span).unwrap()).unwrap());
    }
}
