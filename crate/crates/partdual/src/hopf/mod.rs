//! Finite-dimensional Hopf algebras as structure constants.

mod convolution;
mod hits;
mod structures;
mod tensor_power;

pub use convolution::{convolution_inverse, convolution_product, convolution_unit};
pub use hits::{hit_left, hit_left_dual, hit_right, hit_right_dual};
pub use structures::{biopposite, coopposite, dual, opposite, verify_hopf, Algebra, Coalgebra, HopfAlgebra, LinMap};
pub use tensor_power::{coproduct_table, CoproductTable, TensorElem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("structures live over different fields")]
    FieldMismatch,
    #[error("map is not convolution invertible")]
    NotInvertible,
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("input is not a Hopf algebra: {0}")]
    NotHopf(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix, Tensor3, Vector};

    const Q: Field = Field::Rational;

    fn kc2() -> HopfAlgebra {
        let mut m = Tensor3::zeros(Q, (2, 2, 2));
        let mut d = Tensor3::zeros(Q, (2, 2, 2));
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j, (i + j) % 2)] = Q.one();
            }
            d[(i, i, i)] = Q.one();
        }
        HopfAlgebra::from_tensors(m, Vector::basis(Q, 2, 0), d, Vector::from_i64(Q, &[1, 1]), Matrix::identity(Q, 2))
            .unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        assert!(verify_hopf(&kc2()).all_passed());
    }

    #[test]
    fn zero_antipode_fails_at_g() {
        let h = kc2();
        let broken = HopfAlgebra::new(h.algebra().clone(), h.coalgebra().clone(), Matrix::zeros(Q, 2, 2)).unwrap();
        let r = verify_hopf(&broken);
        let c = r.get("antipode left").unwrap();
        assert!(!c.passed);
        assert!(c.witness.as_deref().unwrap().contains("e_1"));
    }

    #[test]
    fn dual_of_kc2_has_orthogonal_idempotents() {
        let d = dual(&kc2()).unwrap();
        let p0 = d.basis(0);
        let p1 = d.basis(1);
        assert_eq!(d.mul(&p0, &p0), p0);
        assert!(d.mul(&p0, &p1).is_zero());
        assert_eq!(d.one(), Vector::from_i64(Q, &[1, 1]));
        assert_eq!(dual(&d).unwrap(), kc2());
    }

    #[test]
    fn convolution_unit_and_antipode() {
        let h = kc2();
        let u = h.convolution_unit();
        let id = Matrix::identity(Q, 2);
        assert_eq!(convolution_product(&id, &u, h.coalgebra(), h.algebra()).unwrap(), id);
        assert_eq!(convolution_inverse(&id, h.coalgebra(), h.algebra()).unwrap(), *h.antipode());
        assert_eq!(convolution_inverse(&u, h.coalgebra(), h.algebra()).unwrap(), u);
        let zero = Matrix::zeros(Q, 2, 2);
        assert_eq!(convolution_inverse(&zero, h.coalgebra(), h.algebra()), Err(HopfError::NotInvertible));
    }

    #[test]
    fn hit_on_grouplikes() {
        let h = kc2();
        let g = h.basis(1);
        assert_eq!(hit_left(&h, &Vector::basis(Q, 2, 1), &g), g);
        assert!(hit_left(&h, &Vector::basis(Q, 2, 0), &g).is_zero());
        assert_eq!(hit_left(&h, h.coalgebra().counit(), &g), g);
    }
}
