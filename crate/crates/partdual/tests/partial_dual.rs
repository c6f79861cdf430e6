use partdual::coideal::build_quotient;
use partdual::examples::taft4;
use partdual::hopf::TensorElem;
use partdual::linalg::{Field, Vector};
use partdual::pams::*;
use partdual::partial_dual::*;

const Q: Field = Field::Rational;

fn taft_pams(field: Field, lambda: i64) -> Pams {
    let (_, b, zeta) = taft4(field, &field.from_i64(lambda)).unwrap();
    let q = build_quotient(&b).unwrap();
    let (gamma, _) = gamma_from_zeta(&q, &zeta).unwrap();
    certify_pams(&q, &zeta, &gamma).unwrap()
}

fn pure(a: &Vector, b: &Vector) -> TensorElem {
    TensorElem::pure(&[a, b])
}

#[test]
fn taft_left_dual_matches_closed_form() {
    for (field, lambdas) in [(Q, vec![-1, 0, 1, 2]), (Field::prime(5).unwrap(), vec![0, 3])] {
        for lambda in lambdas {
            let p = taft_pams(field, lambda);
            let qd = build_left(&p).unwrap();
            assert!(qd.report().all_passed(), "λ = {lambda}\n{}", qd.report());
            let l = field.from_i64(lambda);
            let e = qd.one();
            let f = Vector::from_i64(field, &[1, 0, -1, 0]);
            let x = Vector::from_i64(field, &[0, 1, 0, 1]);
            let fx = qd.mul(&f, &x);
            assert_eq!(e, Vector::from_i64(field, &[1, 0, 1, 0]));
            assert_eq!(qd.mul(&f, &f), e);
            assert!(qd.mul(&x, &x).is_zero());
            assert_eq!(qd.mul(&x, &f), fx.scale(&field.from_i64(-1)));
            let e_minus_f = e.sub(&f);
            let df = pure(&f, &f).add(&pure(&fx, &e_minus_f).scale(&-&l));
            assert_eq!(qd.delta(&f), df);
            let dx = pure(&x, &f).add(&pure(&e, &x)).add(&pure(&x, &fx).scale(&l));
            assert_eq!(qd.delta(&x), dx);
            assert!(qd.has_trivial_associator());
            assert_eq!(qd.upsilon(), &e);
            let s = &qd.antipodes().unwrap()[0].s;
            assert_eq!(s.apply(&f), f.add(&x.add(&fx).scale(&l)));
            assert_eq!(s.apply(&x), fx);
        }
    }
}

fn c4_over_c2() -> Pams {
    use partdual::coideal::certify_coideal;
    use partdual::examples::{group_algebra, FiniteGroup};
    use partdual::linalg::Matrix;
    let h = group_algebra(&FiniteGroup::cyclic(4), Q);
    let iota = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
    let b = certify_coideal(&h, &iota).unwrap();
    let q = build_quotient(&b).unwrap();
    // ζ(g^k) = g^{2⌊k/2⌋}
    let zeta = Matrix::from_i64(Q, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    pams_from_zeta(&q, &zeta).unwrap()
}

#[test]
fn cyclic_extension_has_nontrivial_associator() {
    let qd = build_left(&c4_over_c2()).unwrap();
    assert!(qd.report().all_passed(), "{}", qd.report());
    assert!(!qd.has_trivial_associator());
    assert!(qd.upsilon_invertible());
}

#[test]
fn second_preantipode_identity_yields_upsilon() {
    let qd = build_left(&c4_over_c2()).unwrap();
    let t = qd.preantipode();
    let tm = |x: &Vector| t.apply(x);
    let id = |x: &Vector| x.clone();
    let value = contract_product(qd.algebra(), qd.phi_inv(), &[&tm, &id, &tm]);
    assert_eq!(&value, qd.upsilon());
    assert_ne!(value, qd.one());
}

#[test]
fn right_dual_transposes_to_left_dual() {
    for p in [taft_pams(Q, 0), taft_pams(Q, 1), c4_over_c2()] {
        let r = right_partial_dual(&p).unwrap();
        assert!(r.report().all_passed(), "{}", r.report());
    }
}

#[test]
fn transport_isomorphisms_hold() {
    for p in [taft_pams(Q, 0), taft_pams(Q, 1), c4_over_c2()] {
        let r = biop_iso_check(&p).unwrap();
        assert!(r.all_passed(), "biop\n{r}");
        let r = op_iso_check(&p).unwrap();
        assert!(r.all_passed(), "op\n{r}");
    }
}

#[test]
fn hopfness_detected() {
    for lambda in [0, 1, 2] {
        let p = taft_pams(Q, lambda);
        let d = detect_hopf(&p, &build_left(&p).unwrap());
        assert!(d.is_hopf(), "{}", d.report);
        assert!(d.report.all_passed());
    }
    let p = c4_over_c2();
    let d = detect_hopf(&p, &build_left(&p).unwrap());
    assert!(!d.is_hopf());
    assert!(!d.diagnostics.any());
    assert!(d.report.all_passed());
}

fn rebuilt(q: &QuasiHopfAlgebra, comult: partdual::linalg::Tensor3, phi: TensorElem) -> QuasiHopfAlgebra {
    QuasiHopfAlgebra::from_parts(
        q.algebra().clone(),
        comult,
        q.counit().clone(),
        phi,
        q.phi_inv().clone(),
        q.preantipode().clone(),
        q.antipodes().cloned(),
        q.factors(),
    )
    .unwrap()
}

#[test]
fn perturbed_targets_fail_transport_checks() {
    for lambda in [0, 1] {
        let p = taft_pams(Q, lambda);
        let q = build_left(&p).unwrap();

        let row = induced_pams(&p, InducedKind::DualBiop).unwrap();
        let q_dual = build_left(&row.pams).unwrap();
        let mut comult = q_dual.comult().clone();
        comult[(1, 0, 0)] += &Q.one();
        let bad = rebuilt(&q_dual, comult, q_dual.phi().clone());
        let r = biop_iso_report(&q, &row, &bad);
        let fail = r.first_failure().expect("perturbed comultiplication must be detected");
        assert!(fail.name.contains("Δ"), "{}", fail.name);
        assert!(fail.witness.is_some());

        let op_row = induced_pams(&p, InducedKind::Op).unwrap();
        let k1 = build_left(&op_row.pams).unwrap();
        let cop_row = induced_pams(&p, InducedKind::Cop).unwrap();
        let k2 = build_left(&cop_row.pams).unwrap();
        let e = k1.one();
        let bump = TensorElem::pure(&[&e, &e, &Vector::basis(Q, k1.dim(), 1)]);
        let bad = rebuilt(&k1, k1.comult().clone(), k1.phi().add(&bump));
        let r = op_iso_report(&p, &q, &op_row, &bad, &cop_row, &k2);
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
        assert!(failed.iter().any(|n| n == "φ-map associator"), "{failed:?}");
        assert!(failed.iter().any(|n| n == "op builds agree associator"), "{failed:?}");
    }
}
