//! Hit actions between `H` and `H*` in the canonical dual basis.

use crate::linalg::Vector;

use super::HopfAlgebra;

fn check(h: &HopfAlgebra, v: &Vector) {
    assert_eq!(v.len(), h.dim(), "hit action argument has wrong dimension");
}

/// `h*⇀x = Σ x₁⟨h*, x₂⟩`
pub fn hit_left(h: &HopfAlgebra, hs: &Vector, x: &Vector) -> Vector {
    check(h, hs);
    check(h, x);
    let d = h.comul(x);
    let mut out = Vector::zeros(h.field(), h.dim());
    for (k, c) in hs.support() {
        for j in 0..h.dim() {
            out[j].add_product(&d[(j, k)], c);
        }
    }
    out
}

/// `x↼h* = Σ ⟨h*, x₁⟩x₂`
pub fn hit_right(h: &HopfAlgebra, x: &Vector, hs: &Vector) -> Vector {
    check(h, hs);
    check(h, x);
    let d = h.comul(x);
    let mut out = Vector::zeros(h.field(), h.dim());
    for (j, c) in hs.support() {
        for k in 0..h.dim() {
            out[k].add_product(&d[(j, k)], c);
        }
    }
    out
}

/// `x⇀h*`, the functional `k ↦ h*(k x)`.
pub fn hit_left_dual(h: &HopfAlgebra, x: &Vector, hs: &Vector) -> Vector {
    check(h, hs);
    check(h, x);
    let n = h.dim();
    Vector::from_vec(h.field(), (0..n).map(|k| hs.dot(&h.mul(&h.basis(k), x))).collect())
}

/// `h*↼x`, the functional `k ↦ h*(x k)`.
pub fn hit_right_dual(h: &HopfAlgebra, hs: &Vector, x: &Vector) -> Vector {
    check(h, hs);
    check(h, x);
    let n = h.dim();
    Vector::from_vec(h.field(), (0..n).map(|k| hs.dot(&h.mul(x, &h.basis(k)))).collect())
}
