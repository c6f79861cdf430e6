use partdual::coideal::{build_quotient, certify_coideal};
use partdual::examples::*;
use partdual::hopf::{dual, HopfAlgebra};
use partdual::linalg::{Field, Matrix};
use partdual::pams::*;
use partdual::partial_dual::*;

const Q: Field = Field::Rational;

fn compose(s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| s[i]).collect()
}

fn power(p: &[usize], k: usize) -> Vec<usize> {
    (0..k).fold(vec![0, 1, 2], |acc, _| compose(p, &acc))
}

#[test]
fn s3_fixture_matches_permutation_factorization() {
    let mp = MatchedPair::s3();
    let t = [1, 0, 2];
    let r = [1, 2, 0];
    let elem = |b: usize, x: usize| compose(&power(&t, b), &power(&r, x));
    // x·c = (x ▷ c)(x ◁ c) in S₃
    for x in 0..3 {
        for c in 0..2 {
            let xc = compose(&power(&r, x), &power(&t, c));
            let (b2, y2) = (0..2).flat_map(|b| (0..3).map(move |y| (b, y))).find(|&(b, y)| elem(b, y) == xc).unwrap();
            assert_eq!(mp.act_left(x, c), b2);
            assert_eq!(mp.act_right(x, c), y2);
        }
    }
    let prod = mp.product();
    for u in 0..6 {
        for v in 0..6 {
            let (b, x, c, y) = (u / 3, u % 3, v / 3, v % 3);
            let w = prod.mul(u, v);
            assert_eq!(compose(&elem(b, x), &elem(c, y)), elem(w / 3, w % 3));
        }
    }
    assert!(!prod.is_abelian());
}

#[test]
fn invalid_matched_pairs_are_rejected() {
    let c2 = FiniteGroup::cyclic(2);
    let c3 = FiniteGroup::cyclic(3);
    // ◁ must be a right action: x ◁ 1 = x
    let err = MatchedPair::new(c2.clone(), c3.clone(), vec![vec![0, 1]; 3], vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    assert!(matches!(err, Err(ExampleError::NotAMatchedPair(_))));
    // conjugation paired with a nontrivial ▷ breaks compatibility
    let err =
        MatchedPair::new(c2, c3, vec![vec![0, 1], vec![1, 0], vec![1, 0]], vec![vec![0, 0], vec![1, 2], vec![2, 1]]);
    assert!(matches!(err, Err(ExampleError::NotAMatchedPair(_))));
    assert!(MatchedPair::from_json("{\"F\": [[0]]}").is_err());
}

fn matched_pairs() -> Vec<MatchedPair> {
    vec![
        MatchedPair::s3(),
        MatchedPair::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)),
        MatchedPair::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)),
    ]
}

fn assert_same_hopf(q: &QuasiHopfAlgebra, h: &HopfAlgebra) {
    assert_eq!(q.algebra(), h.algebra());
    assert_eq!(q.comult(), h.coalgebra().comult());
    assert_eq!(q.counit(), h.coalgebra().counit());
    assert!(q.has_trivial_associator());
    assert_eq!(q.upsilon(), &q.one());
    assert_eq!(q.preantipode(), h.antipode());
}

#[test]
fn matched_pair_left_dual_is_bismash_product() {
    for field in [Q, Field::prime(7).unwrap()] {
        for mp in matched_pairs() {
            let (_, b, p) = matched_pair_hopf(&mp, field).unwrap();
            assert_eq!(b.dim(), mp.f().order());
            let bis = bismash_product(&mp, field).unwrap();
            let q = build_left(&p).unwrap();
            assert!(q.report().all_passed(), "{}", q.report());
            assert_same_hopf(&q, &bis);

            let det = detect_hopf(&p, &q);
            assert!(det.is_hopf(), "{}", det.report);
            assert!(det.report.all_passed());
            assert_eq!(det.hopf.as_ref().unwrap(), &bis);

            let r = right_partial_dual(&p).unwrap();
            assert_eq!(r.hopf_view().unwrap(), dual(&bis).unwrap());
        }
    }
}

#[test]
fn s3_matched_pair_diagnostics() {
    let (_, _, p) = matched_pair_hopf(&MatchedPair::s3(), Q).unwrap();
    let d = hopf_diagnostics(&p);
    // ▷ is trivial, so π_F is an algebra map; ⟨(12)⟩ is not normal
    assert!(d.zeta_algebra_gamma_coalgebra);
    assert!(!d.gamma_bialgebra);
}

fn trivial_pams(h: &HopfAlgebra, whole: bool) -> Pams {
    let n = h.dim();
    let iota = if whole { Matrix::identity(h.field(), n) } else { Matrix::from_columns(h.field(), n, &[h.one()]) };
    let b = certify_coideal(h, &iota).unwrap();
    let q = build_quotient(&b).unwrap();
    let zeta = if whole {
        Matrix::identity(h.field(), n)
    } else {
        Matrix::from_rows(h.field(), n, &[h.coalgebra().counit().clone()])
    };
    pams_from_zeta(&q, &zeta).unwrap()
}

#[test]
fn trivial_coideals_recover_h_and_its_dual() {
    let s3 = group_algebra(&FiniteGroup::symmetric3(), Q);
    let hs = vec![taft4_hopf(Q).unwrap(), group_algebra(&FiniteGroup::cyclic(2), Q), dual(&s3).unwrap(), s3];
    for h in hs {
        // B = H: C = k and Q = k # H
        let q = build_left(&trivial_pams(&h, true)).unwrap();
        assert!(q.report().all_passed());
        assert_same_hopf(&q, &h);
        // B = k: C = H and Q = H* # k
        let q = build_left(&trivial_pams(&h, false)).unwrap();
        assert!(q.report().all_passed());
        assert_same_hopf(&q, &dual(&h).unwrap());
    }
}

/// γ is a bialgebra map on a split projection, so φ must be trivial.
fn assert_split_consistent(p: &Pams) {
    let q = build_left(p).unwrap();
    assert!(q.report().all_passed(), "{}", q.report());
    let d = detect_hopf(p, &q);
    assert!(d.diagnostics.gamma_bialgebra);
    assert!(d.report.all_passed(), "{}", d.report);
    assert!(d.is_hopf());
}

#[test]
fn split_projections() {
    let f = FiniteGroup::cyclic(2);
    let g = FiniteGroup::cyclic(3);
    let mp = MatchedPair::direct_product(f.clone(), g.clone());
    let h = group_algebra(mp.product(), Q);
    let a = group_algebra(&g, Q);
    let mut pi = Matrix::zeros(Q, 3, 6);
    let mut gamma = Matrix::zeros(Q, 6, 3);
    for b in 0..2 {
        for x in 0..3 {
            pi[(x, mp.pair_index(b, x))] = Q.one();
        }
    }
    for x in 0..3 {
        gamma[(mp.pair_index(0, x), x)] = Q.one();
    }
    let p = pams_from_split_projection(&h, &a, &pi, &gamma).unwrap();
    // B = kF
    let iota = p.coideal().iota();
    assert_eq!(iota.cols(), 2);
    for b in 0..2 {
        let mut v = partdual::linalg::Vector::zeros(Q, 6);
        v[mp.pair_index(b, 0)] = Q.one();
        assert!(p.coideal().coordinates(&v).is_some());
    }
    assert_split_consistent(&p);

    // Taft onto k{1, g}: B = span{1, x}
    let taft = taft4_hopf(Q).unwrap();
    let c2 = group_algebra(&f, Q);
    let pi = Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let gamma = Matrix::from_i64(Q, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
    let p = pams_from_split_projection(&taft, &c2, &pi, &gamma).unwrap();
    assert_eq!(p.coideal().dim(), 2);
    for basis in [[1, 0, 0, 0], [0, 0, 1, 0]] {
        assert!(p.coideal().coordinates(&partdual::linalg::Vector::from_i64(Q, &basis)).is_some());
    }
    assert_split_consistent(&p);

    // S₃ onto S₃/A₃: B is the normal subgroup algebra kA₃
    let s3 = group_algebra(&FiniteGroup::symmetric3(), Q);
    let sign = [0, 1, 1, 1, 0, 0];
    let mut pi = Matrix::zeros(Q, 2, 6);
    for (u, &s) in sign.iter().enumerate() {
        pi[(s, u)] = Q.one();
    }
    let gamma = Matrix::from_i64(Q, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0], &[0, 0], &[0, 0]]);
    let p = pams_from_split_projection(&s3, &c2, &pi, &gamma).unwrap();
    assert_eq!(p.coideal().dim(), 3);
    for u in [0, 4, 5] {
        assert!(p.coideal().coordinates(&partdual::linalg::Vector::basis(Q, 6, u)).is_some());
    }
    assert_split_consistent(&p);

    // rejected inputs
    // the trivial map is a Hopf map but not a section
    let bad_gamma = Matrix::from_i64(Q, &[&[1, 1], &[0, 0], &[0, 0], &[0, 0], &[0, 0], &[0, 0]]);
    assert!(matches!(pams_from_split_projection(&s3, &c2, &pi, &bad_gamma), Err(ExampleError::NotSplit(_))));
    let not_hopf = Matrix::from_i64(Q, &[&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 1, 1]]);
    assert!(matches!(pams_from_split_projection(&s3, &c2, &not_hopf, &gamma), Err(ExampleError::NotHopfMaps(_))));
}
