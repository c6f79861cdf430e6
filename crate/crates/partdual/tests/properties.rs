use proptest::prelude::*;

use partdual::coideal::{build_quotient, certify_coideal};
use partdual::document::{parse, serialize, Object};
use partdual::examples::*;
use partdual::hopf::convolution_inverse;
use partdual::linalg::{Field, Matrix, Scalar};
use partdual::partial_dual::{build_left, detect_hopf};

const Q: Field = Field::Rational;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Q), Just(Field::Prime(5)), Just(Field::Prime(7)), Just(Field::Prime(101))]
}

fn scalar(f: Field) -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..6).prop_map(move |(n, d)| match f {
        Field::Rational => f.from_ratio(n, d),
        Field::Prime(_) => f.from_i64(n),
    })
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(f), rows * cols).prop_map(move |v| {
        let mut m = Matrix::zeros(f, rows, cols);
        for (k, s) in v.into_iter().enumerate() {
            m[(k / cols, k % cols)] = s;
        }
        m
    })
}

fn field_and_matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(f in field(), seed in any::<(i8, i8, i8)>()) {
        let (a, b, c) = (f.from_i64(seed.0 as i64), f.from_i64(seed.1 as i64), f.from_i64(seed.2 as i64));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if let Some(ai) = a.inv() {
            prop_assert!((&a * &ai).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        let text = a.to_string();
        prop_assert_eq!(f.parse(&text).unwrap(), a);
    }

    #[test]
    fn kernel_and_inverse(m in field_and_matrix()) {
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), m.cols());
        for v in &ker {
            prop_assert!(m.apply(v).is_zero());
        }
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(inv.mul(&m), Matrix::identity(m.field(), m.cols()));
        } else {
            prop_assert!(m.rows() != m.cols() || m.rank() < m.cols());
        }
    }

    #[test]
    fn linear_maps_round_trip(m in field_and_matrix()) {
        let obj = Object::LinearMap(m);
        let text = serialize(&obj);
        prop_assert_eq!(parse(&text).unwrap(), obj);
    }

    #[test]
    fn antipode_is_convolution_inverse_of_identity(n in 1usize..7, f in field()) {
        let h = group_algebra(&FiniteGroup::cyclic(n), f);
        let id = Matrix::identity(f, n);
        prop_assert_eq!(&convolution_inverse(&id, h.coalgebra(), h.algebra()).unwrap(), h.antipode());
    }

    #[test]
    fn subgroup_coideals_obey_dimension_law(n in 1usize..9, f in field()) {
        let h = group_algebra(&FiniteGroup::cyclic(n), f);
        for d in (1..=n).filter(|d| n % d == 0) {
            // kC_d = span{g^{kn/d}}
            let step = n / d;
            let mut iota = Matrix::zeros(f, n, d);
            for k in 0..d {
                iota[(k * step, k)] = f.one();
            }
            let b = certify_coideal(&h, &iota).unwrap();
            let q = build_quotient(&b).unwrap();
            prop_assert_eq!(b.dim() * q.dim(), n);
        }
    }

    #[test]
    fn taft_family_is_hopf(num in -9i64..10, den in 1i64..5) {
        let l = Q.from_ratio(num, den);
        let p = taft4_pams(Q, &l).unwrap();
        let q = build_left(&p).unwrap();
        prop_assert!(q.report().all_passed());
        prop_assert!(detect_hopf(&p, &q).is_hopf());
    }

    #[test]
    fn direct_products_dualize_to_bismash(a in 1usize..4, b in 1usize..4) {
        let mp = MatchedPair::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b));
        let (_, _, p) = matched_pair_hopf(&mp, Q).unwrap();
        let q = build_left(&p).unwrap();
        let bis = bismash_product(&mp, Q).unwrap();
        prop_assert_eq!(q.algebra(), bis.algebra());
        prop_assert_eq!(q.comult(), bis.coalgebra().comult());
        prop_assert_eq!(q.preantipode(), bis.antipode());
    }
}
