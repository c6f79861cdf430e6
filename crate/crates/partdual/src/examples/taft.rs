use crate::coideal::{build_quotient, certify_coideal, CoidealSubalgebra};
use crate::hopf::{HopfAlgebra, LinMap};
use crate::linalg::{Field, Matrix, Scalar, Tensor3, Vector};
use crate::pams::{certify_pams, gamma_from_zeta, Pams};

use super::ExampleError;

/// Index of `x^i g^j` in the basis `{1, g, x, xg}`.
fn idx(i: usize, j: usize) -> usize {
    2 * i + j
}

/// The 4-dimensional Taft algebra: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn taft4_hopf(field: Field) -> Result<HopfAlgebra, ExampleError> {
    if field.characteristic() == 2 {
        return Err(ExampleError::Characteristic2);
    }
    let mut mult = Tensor3::zeros(field, (4, 4, 4));
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if i + k < 2 {
                        let sign = if j * k == 1 { -1 } else { 1 };
                        mult[(idx(i, j), idx(k, l), idx(i + k, (j + l) % 2))] = field.from_i64(sign);
                    }
                }
            }
        }
    }
    let mut comult = Tensor3::zeros(field, (4, 4, 4));
    for j in 0..2 {
        comult[(idx(0, j), idx(0, j), idx(0, j))] = field.one();
        comult[(idx(1, j), idx(1, j), idx(0, j))] = field.one();
        comult[(idx(1, j), idx(0, (j + 1) % 2), idx(1, j))] = field.one();
    }
    let unit = Vector::basis(field, 4, 0);
    let counit = Vector::from_i64(field, &[1, 1, 0, 0]);
    // S(1) = 1, S(g) = g, S(x) = xg, S(xg) = −x
    let antipode = Matrix::from_i64(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    Ok(HopfAlgebra::from_tensors(mult, unit, comult, counit, antipode).unwrap())
}

/// Taft algebra, the coideal subalgebra `B = k{1, x}` and the cointegral with
/// `ζ(g) = 1 + λx`, `ζ(x) = ζ(xg) = x`.
pub fn taft4(field: Field, lambda: &Scalar) -> Result<(HopfAlgebra, CoidealSubalgebra, LinMap), ExampleError> {
    if lambda.field() != field {
        return Err(ExampleError::FieldMismatch);
    }
    let h = taft4_hopf(field)?;
    let iota = Matrix::from_i64(field, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
    let b = certify_coideal(&h, &iota)?;
    let mut zeta = Matrix::from_i64(field, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    zeta[(1, 1)] = lambda.clone();
    Ok((h, b, zeta))
}

/// The certified system `(ζ_λ, γ_λ*)` on the Taft algebra.
pub fn taft4_pams(field: Field, lambda: &Scalar) -> Result<Pams, ExampleError> {
    let (_, b, zeta) = taft4(field, lambda)?;
    let q = build_quotient(&b)?;
    let (gamma, _) = gamma_from_zeta(&q, &zeta)?;
    Ok(certify_pams(&q, &zeta, &gamma)?)
}
