use crate::coideal::{build_quotient, certify_coideal};
use crate::hopf::{HopfAlgebra, LinMap};
use crate::linalg::{Matrix, Vector};
use crate::pams::{certify_pams, zeta_from_gamma, Pams};

use super::ExampleError;

/// First failing Hopf-map law of `f: src → dst`.
fn hopf_map_failure(src: &HopfAlgebra, dst: &HopfAlgebra, f: &LinMap) -> Option<String> {
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return Some(format!("{}×{} map", f.rows(), f.cols()));
    }
    if f.apply(&src.one()) != dst.one() {
        return Some("unit".into());
    }
    for i in 0..src.dim() {
        let x = src.basis(i);
        if f.mul(&src.comul(&x)).mul(&f.transpose()) != dst.comul(&f.column(i)) {
            return Some(format!("Δ at e{i}"));
        }
        if dst.eps(&f.column(i)) != src.eps(&x) {
            return Some(format!("ε at e{i}"));
        }
        for j in 0..src.dim() {
            if f.apply(&src.mul(&x, &src.basis(j))) != dst.mul(&f.column(i), &f.column(j)) {
                return Some(format!("product at (e{i}, e{j})"));
            }
        }
    }
    None
}

/// Right coinvariants `{h : Σ h₁ ⊗ π(h₂) = h ⊗ 1}` as the columns of an inclusion.
fn right_coinvariants(h: &HopfAlgebra, a: &HopfAlgebra, pi: &LinMap) -> LinMap {
    let field = h.field();
    let (n, k) = (h.dim(), a.dim());
    let one = a.one();
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            let x = h.basis(i);
            let lhs = h.comul(&x).mul(&pi.transpose());
            let mut v = Vector::zeros(field, n * k);
            for r in 0..n {
                for c in 0..k {
                    let mut d = lhs[(r, c)].clone();
                    d -= &(&x[r] * &one[c]);
                    v[r * k + c] = d;
                }
            }
            v
        })
        .collect();
    let ker = Matrix::from_columns(field, n * k, &cols).kernel();
    Matrix::from_columns(field, n, &ker)
}

/// The system attached to a split projection `π: H → A` with section `γ: A → H`.
///
/// `B` is the algebra of right `π`-coinvariants and `γ` is read on `H/B⁺H` through `π`.
pub fn pams_from_split_projection(
    h: &HopfAlgebra,
    a: &HopfAlgebra,
    pi: &LinMap,
    gamma: &LinMap,
) -> Result<Pams, ExampleError> {
    if h.field() != a.field() || pi.field() != h.field() || gamma.field() != h.field() {
        return Err(ExampleError::FieldMismatch);
    }
    if let Some(w) = hopf_map_failure(h, a, pi) {
        return Err(ExampleError::NotHopfMaps(format!("π: {w}")));
    }
    if let Some(w) = hopf_map_failure(a, h, gamma) {
        return Err(ExampleError::NotHopfMaps(format!("γ: {w}")));
    }
    if pi.mul(gamma) != Matrix::identity(h.field(), a.dim()) {
        return Err(ExampleError::NotSplit("π∘γ".into()));
    }
    let b = certify_coideal(h, &right_coinvariants(h, a, pi))?;
    let q = build_quotient(&b)?;
    let iso = pi.mul(&q.lift_map());
    if iso.rows() != iso.cols() || iso.inverse().is_none() {
        return Err(ExampleError::NotSplit("π does not identify H/B⁺H with A".into()));
    }
    let gamma_c = gamma.mul(&iso);
    let zeta = zeta_from_gamma(&q, &gamma_c)?;
    Ok(certify_pams(&q, &zeta, &gamma_c)?)
}
