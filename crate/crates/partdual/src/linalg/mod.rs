//! Exact scalars and dense linear algebra.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{in_row_span, rref, solve, subspace_basis, Echelon, Matrix, Vector};
pub use scalar::{Field, Scalar};
pub use tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(Field, Field),
    #[error("{0} is not a supported prime")]
    BadPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("unknown field descriptor {0:?}")]
    BadField(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}
