use partdual::coideal::certify_coideal;
use partdual::document::*;
use partdual::examples::*;
use partdual::hopf::dual;
use partdual::linalg::{Field, Matrix};
use partdual::partial_dual::{build_left, build_right};

const Q: Field = Field::Rational;

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn round_trip(obj: &Object) {
    let text = serialize(obj);
    let back = parse(&text).unwrap();
    assert_eq!(serialize(&back), text);
    assert_eq!(back.kind(), obj.kind());
}

#[test]
fn group_algebra_matches_fixture_text() {
    let h = group_algebra(&FiniteGroup::cyclic(2), Q);
    let text = golden("kc2.json");
    assert_eq!(serialize(&Object::Hopf(h.clone())), text);
    assert_eq!(parse(&text).unwrap(), Object::Hopf(h));
}

#[test]
fn every_kind_round_trips() {
    let f5 = Field::prime(5).unwrap();
    for field in [Q, f5] {
        let p = taft4_pams(field, &field.from_i64(3)).unwrap();
        let h = p.hopf().clone();
        round_trip(&Object::Hopf(h.clone()));
        round_trip(&Object::Hopf(dual(&h).unwrap()));
        round_trip(&Object::Coideal { hopf: h.clone(), iota: p.coideal().iota().clone() });
        round_trip(&Object::from(&p));
        round_trip(&Object::LinearMap(p.zeta().clone()));
        let left = build_left(&p).unwrap();
        let right = build_right(&p, &left).unwrap();
        round_trip(&Object::QuasiHopf(left.clone()));
        round_trip(&Object::CoquasiHopf(right.clone()));

        let Object::QuasiHopf(back) = parse(&serialize(&Object::QuasiHopf(left.clone()))).unwrap() else { panic!() };
        assert_eq!(back.algebra(), left.algebra());
        assert_eq!(back.phi(), left.phi());
        assert_eq!(back.antipodes(), left.antipodes());
        assert!(back.report().all_passed());
        let Object::CoquasiHopf(back) = parse(&serialize(&Object::CoquasiHopf(right.clone()))).unwrap() else {
            panic!()
        };
        assert_eq!(back.antipode(), right.antipode());
        assert!(back.report().all_passed());
    }
    round_trip(&Object::MatchedPair(MatchedPair::s3()));
    let Object::MatchedPair(mp) = parse(&serialize(&Object::MatchedPair(MatchedPair::s3()))).unwrap() else { panic!() };
    assert_eq!(mp, MatchedPair::s3());
    let (_, _, p) = matched_pair_hopf(&mp, Q).unwrap();
    round_trip(&Object::from(&p));
}

#[test]
fn taft_lambda_one_goldens_are_stable() {
    for _ in 0..2 {
        let p = taft4_pams(Q, &Q.one()).unwrap();
        assert_eq!(serialize(&Object::from(&p)), golden("taft4_lambda1_pams.json"));
        let left = build_left(&p).unwrap();
        assert_eq!(serialize(&Object::QuasiHopf(left.clone())), golden("taft4_lambda1_left.json"));
        let right = build_right(&p, &left).unwrap();
        assert_eq!(serialize(&Object::CoquasiHopf(right)), golden("taft4_lambda1_right.json"));
    }
}

#[test]
fn out_of_range_index_is_rejected() {
    let text = golden("kc2.json").replace("[[1,1,0],\"1\"]", "[[1,1,5],\"1\"]");
    match parse(&text) {
        Err(DocumentError::IndexOutOfRange { tensor, index, shape }) => {
            assert_eq!(tensor, "mult");
            assert_eq!(index, vec![1, 1, 5]);
            assert_eq!(shape, vec![2, 2, 2]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn syntax_error_reports_position() {
    let text = golden("kc2.json").replacen("\"kind\": ", "\"kind\" ", 1);
    match parse(&text) {
        Err(DocumentError::Syntax { line, column, .. }) => {
            assert_eq!(line, 4);
            assert!(column > 0);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn scalars_must_live_in_the_declared_field() {
    let text = golden("kc2.json").replace("\"Q\"", "\"Fp:5\"").replacen("[[0],\"1\"]", "[[0],\"1/5\"]", 1);
    assert!(matches!(parse(&text), Err(DocumentError::Scalar { .. })));
    let h = group_algebra(&FiniteGroup::cyclic(2), Q);
    let iota = Matrix::identity(Field::prime(3).unwrap(), 2);
    assert!(certify_coideal(&h, &iota).is_err());
    assert!(matches!(expect_field(Q, iota.field()), Err(DocumentError::FieldMismatch { .. })));
}

#[test]
fn malformed_documents_are_rejected() {
    let base = golden("kc2.json");
    let dup = base.replace("[[1,1,0],\"1\"]", "[[1,1,0],\"1\"],\n        [[1,1,0],\"2\"]");
    assert!(matches!(parse(&dup), Err(DocumentError::Format(_))));
    let shape = base.replacen("\"shape\": [2,2,2]", "\"shape\": [2,2,3]", 1);
    assert!(matches!(parse(&shape), Err(DocumentError::Format(_))));
    let version = base.replace("partdual/1", "partdual/0");
    assert!(matches!(parse(&version), Err(DocumentError::Format(_))));
    let extra = base.replacen("\"field\"", "\"colour\": 1,\n  \"field\"", 1);
    assert!(matches!(parse(&extra), Err(DocumentError::Syntax { .. })));
}
