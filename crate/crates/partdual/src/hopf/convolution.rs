use crate::linalg::{solve, Matrix, Vector};

use super::{Algebra, Coalgebra, HopfError, LinMap};

fn check_shape(f: &LinMap, c: &Coalgebra, a: &Algebra) -> Result<(), HopfError> {
    if f.cols() != c.dim() || f.rows() != a.dim() {
        return Err(HopfError::Shape(format!(
            "map is {}×{} but Hom(C, A) needs {}×{}",
            f.rows(),
            f.cols(),
            a.dim(),
            c.dim()
        )));
    }
    Ok(())
}

/// `u∘ε`, the unit of the convolution algebra `Hom(C, A)`.
pub fn convolution_unit(c: &Coalgebra, a: &Algebra) -> LinMap {
    let mut m = Matrix::zeros(a.field(), a.dim(), c.dim());
    for j in 0..c.dim() {
        for i in 0..a.dim() {
            m[(i, j)] = &a.unit()[i] * &c.counit()[j];
        }
    }
    m
}

/// `(f∗g)(c) = Σ f(c₁) g(c₂)`.
pub fn convolution_product(f: &LinMap, g: &LinMap, c: &Coalgebra, a: &Algebra) -> Result<LinMap, HopfError> {
    check_shape(f, c, a)?;
    check_shape(g, c, a)?;
    let fc = f.columns();
    let gc = g.columns();
    let mut out = Matrix::zeros(a.field(), a.dim(), c.dim());
    for k in 0..c.dim() {
        let mut col = Vector::zeros(a.field(), a.dim());
        for (i, j, d) in c.coproduct_of(k) {
            col.axpy(d, &a.mul(&fc[*i], &gc[*j]));
        }
        for r in 0..a.dim() {
            out[(r, k)] = col[r].clone();
        }
    }
    Ok(out)
}

/// Two-sided convolution inverse, found by solving `f∗X = u∘ε` on `Hom(C, A)`.
pub fn convolution_inverse(f: &LinMap, c: &Coalgebra, a: &Algebra) -> Result<LinMap, HopfError> {
    check_shape(f, c, a)?;
    let (na, nc) = (a.dim(), c.dim());
    let field = a.field();
    // Unknown X is flattened as X[(s, j)] ↦ s*nc + j; equation (r, k) likewise.
    let mut op = Matrix::zeros(field, na * nc, na * nc);
    let fc = f.columns();
    for k in 0..nc {
        for (i, j, d) in c.coproduct_of(k) {
            for (t, ft) in fc[*i].support() {
                let dft = d * ft;
                for s in 0..na {
                    for (r, m) in a.product_of(t, s) {
                        op[(r * nc + k, s * nc + j)].add_product(&dft, m);
                    }
                }
            }
        }
    }
    let unit = convolution_unit(c, a);
    let mut rhs = Vector::zeros(field, na * nc);
    for r in 0..na {
        for k in 0..nc {
            rhs[r * nc + k] = unit[(r, k)].clone();
        }
    }
    let x = solve(&op, &rhs).unwrap().ok_or(HopfError::NotInvertible)?;
    let mut inv = Matrix::zeros(field, na, nc);
    for s in 0..na {
        for j in 0..nc {
            inv[(s, j)] = x[s * nc + j].clone();
        }
    }
    if convolution_product(f, &inv, c, a)? != unit || convolution_product(&inv, f, c, a)? != unit {
        return Err(HopfError::NotInvertible);
    }
    Ok(inv)
}
