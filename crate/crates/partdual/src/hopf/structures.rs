use crate::linalg::{Field, Matrix, Scalar, Tensor3, Vector};
use crate::report::{first_witness, Report};

use super::HopfError;

/// Linear map between canonical bases; columns are images of source basis vectors.
pub type LinMap = Matrix;

/// Finite-dimensional associative unital algebra, `e_i e_j = Σ_k m(i,j,k) e_k`.
#[derive(Clone, Debug)]
pub struct Algebra {
    mult: Tensor3,
    unit: Vector,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.mult == other.mult && self.unit == other.unit
    }
}
impl Eq for Algebra {}

impl Algebra {
    pub fn new(mult: Tensor3, unit: Vector) -> Result<Algebra, HopfError> {
        let (a, b, c) = mult.shape();
        if a != b || b != c || unit.len() != a {
            return Err(HopfError::Shape(format!(
                "algebra tensor {:?} with unit of length {}",
                mult.shape(),
                unit.len()
            )));
        }
        if unit.field() != mult.field() {
            return Err(HopfError::FieldMismatch);
        }
        let mut table = vec![Vec::new(); a * a];
        for ((i, j, k), s) in mult.entries() {
            table[i * a + j].push((k, s.clone()));
        }
        Ok(Algebra { mult, unit, table })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// `e_i e_j` as sparse `(k, coefficient)` pairs.
    pub fn product_of(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field(), self.dim());
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for (k, c) in self.product_of(i, j) {
                    out[*k].add_product(&ab, c);
                }
            }
        }
        out
    }

    pub fn mul_many(&self, factors: &[&Vector]) -> Vector {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for (i, a) in x.support() {
            for j in 0..n {
                for (k, c) in self.product_of(i, j) {
                    m[(*k, j)].add_product(a, c);
                }
            }
        }
        m
    }

    /// Two-sided inverse of `x`, if any.
    pub fn inverse(&self, x: &Vector) -> Option<Vector> {
        let y = crate::linalg::solve(&self.left_mult(x), &self.unit).ok()??;
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn opposite(&self) -> Algebra {
        Algebra::new(self.mult.permute([1, 0, 2]), self.unit.clone()).unwrap()
    }

    pub fn verify(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new();
        let idx3 = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
        r.record(
            "associativity",
            first_witness(idx3, |&(i, j, k)| {
                let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
                self.mul(&self.mul(&ei, &ej), &ek) == self.mul(&ei, &self.mul(&ej, &ek))
            }),
        );
        r.record(
            "unit",
            first_witness(0..n, |&i| {
                let e = self.basis(i);
                self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
            }),
        );
        r
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field(), self.dim(), i)
    }
}

/// Finite-dimensional coalgebra, `Δ(e_i) = Σ d(i,j,k) e_j ⊗ e_k`.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    comult: Tensor3,
    counit: Vector,
    table: Vec<Vec<(usize, usize, Scalar)>>,
}

impl PartialEq for Coalgebra {
    fn eq(&self, other: &Coalgebra) -> bool {
        self.comult == other.comult && self.counit == other.counit
    }
}
impl Eq for Coalgebra {}

impl Coalgebra {
    pub fn new(comult: Tensor3, counit: Vector) -> Result<Coalgebra, HopfError> {
        let (a, b, c) = comult.shape();
        if a != b || b != c || counit.len() != a {
            return Err(HopfError::Shape(format!(
                "coalgebra tensor {:?} with counit of length {}",
                comult.shape(),
                counit.len()
            )));
        }
        if counit.field() != comult.field() {
            return Err(HopfError::FieldMismatch);
        }
        let mut table = vec![Vec::new(); a];
        for ((i, j, k), s) in comult.entries() {
            table[i].push((j, k, s.clone()));
        }
        Ok(Coalgebra { comult, counit, table })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    /// `Δ(e_i)` as sparse `(j, k, coefficient)` triples.
    pub fn coproduct_of(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.table[i]
    }

    /// `Δ(x)` as an `n × n` matrix, row index on the left tensorand.
    pub fn comul(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for (i, a) in x.support() {
            for (j, k, c) in self.coproduct_of(i) {
                m[(*j, *k)].add_product(a, c);
            }
        }
        m
    }

    pub fn eps(&self, x: &Vector) -> Scalar {
        self.counit.dot(x)
    }

    pub fn coopposite(&self) -> Coalgebra {
        Coalgebra::new(self.comult.permute([0, 2, 1]), self.counit.clone()).unwrap()
    }

    pub fn verify(&self) -> Report {
        let n = self.dim();
        let f = self.field();
        let mut r = Report::new();
        r.record(
            "coassociativity",
            first_witness(0..n, |&i| {
                let mut lhs = vec![f.zero(); n * n * n];
                let mut rhs = vec![f.zero(); n * n * n];
                for (j, k, c) in self.coproduct_of(i) {
                    for (p, q, d) in self.coproduct_of(*j) {
                        lhs[(p * n + q) * n + k].add_product(c, d);
                    }
                    for (p, q, d) in self.coproduct_of(*k) {
                        rhs[(j * n + p) * n + q].add_product(c, d);
                    }
                }
                lhs == rhs
            }),
        );
        r.record(
            "counit",
            first_witness(0..n, |&i| {
                let mut left = Vector::zeros(f, n);
                let mut right = Vector::zeros(f, n);
                for (j, k, c) in self.coproduct_of(i) {
                    left[*k].add_product(c, &self.counit[*j]);
                    right[*j].add_product(c, &self.counit[*k]);
                }
                let e = Vector::basis(f, n, i);
                left == e && right == e
            }),
        );
        r
    }
}

/// Finite-dimensional Hopf algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: Matrix) -> Result<HopfAlgebra, HopfError> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::Shape("algebra, coalgebra and antipode dimensions differ".into()));
        }
        if algebra.field() != coalgebra.field() || antipode.field() != algebra.field() {
            return Err(HopfError::FieldMismatch);
        }
        Ok(HopfAlgebra { algebra, coalgebra, antipode })
    }

    pub fn from_tensors(
        mult: Tensor3,
        unit: Vector,
        comult: Tensor3,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<HopfAlgebra, HopfError> {
        HopfAlgebra::new(Algebra::new(mult, unit)?, Coalgebra::new(comult, counit)?, antipode)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Result<Matrix, HopfError> {
        self.antipode.inverse().ok_or(HopfError::AntipodeNotInvertible)
    }

    pub fn one(&self) -> Vector {
        self.algebra.unit().clone()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn comul(&self, x: &Vector) -> Matrix {
        self.coalgebra.comul(x)
    }

    pub fn eps(&self, x: &Vector) -> Scalar {
        self.coalgebra.eps(x)
    }

    pub fn s(&self, x: &Vector) -> Vector {
        self.antipode.apply(x)
    }

    /// Counit and unit as the convolution unit `u∘ε`.
    pub fn convolution_unit(&self) -> LinMap {
        super::convolution::convolution_unit(&self.coalgebra, &self.algebra)
    }

    /// Linear dual in the canonical dual basis.
    pub(crate) fn dual_unchecked(&self) -> HopfAlgebra {
        HopfAlgebra::from_tensors(
            self.coalgebra.comult().permute([1, 2, 0]),
            self.coalgebra.counit().clone(),
            self.algebra.mult().permute([2, 0, 1]),
            self.algebra.unit().clone(),
            self.antipode.transpose(),
        )
        .unwrap()
    }

    pub(crate) fn opposite_unchecked(&self) -> Result<HopfAlgebra, HopfError> {
        HopfAlgebra::new(self.algebra.opposite(), self.coalgebra.clone(), self.antipode_inverse()?)
    }

    pub(crate) fn coopposite_unchecked(&self) -> Result<HopfAlgebra, HopfError> {
        HopfAlgebra::new(self.algebra.clone(), self.coalgebra.coopposite(), self.antipode_inverse()?)
    }

    pub(crate) fn biopposite_unchecked(&self) -> HopfAlgebra {
        HopfAlgebra::new(self.algebra.opposite(), self.coalgebra.coopposite(), self.antipode.clone()).unwrap()
    }

    fn require_verified(&self) -> Result<(), HopfError> {
        let r = verify_hopf(self);
        match r.first_failure() {
            None => Ok(()),
            Some(c) => Err(HopfError::NotHopf(format!("{} at {}", c.name, c.witness.clone().unwrap_or_default()))),
        }
    }
}

/// Checks every (co)algebra, bialgebra and antipode axiom on the full basis.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let f = h.field();
    let mut r = h.algebra.verify();
    r.extend("", h.coalgebra.verify());
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    r.record(
        "comultiplication multiplicative",
        first_witness(pairs(), |&(i, j)| {
            let lhs = h.comul(&h.algebra.mul(&h.basis(i), &h.basis(j)));
            let mut rhs = Matrix::zeros(f, n, n);
            for (a, b, c) in h.coalgebra.coproduct_of(i) {
                for (p, q, d) in h.coalgebra.coproduct_of(j) {
                    let cd = c * d;
                    for (s, x) in h.algebra.product_of(*a, *p) {
                        let cdx = &cd * x;
                        for (t, y) in h.algebra.product_of(*b, *q) {
                            rhs[(*s, *t)].add_product(&cdx, y);
                        }
                    }
                }
            }
            lhs == rhs
        }),
    );
    let one = h.one();
    let one_one = Matrix::from_columns(f, n, std::slice::from_ref(&one)).mul(&Matrix::from_rows(
        f,
        n,
        std::slice::from_ref(&one),
    ));
    r.record("comultiplication unital", (h.comul(&one) != one_one).then(|| "Δ(1)".to_string()));
    r.record(
        "counit multiplicative",
        first_witness(pairs(), |&(i, j)| {
            h.eps(&h.algebra.mul(&h.basis(i), &h.basis(j))) == &h.eps(&h.basis(i)) * &h.eps(&h.basis(j))
        }),
    );
    r.record("counit unital", (!h.eps(&one).is_one()).then(|| "ε(1)".to_string()));
    let conv_unit = h.convolution_unit();
    let id = Matrix::identity(f, n);
    let left = super::convolution::convolution_product(&h.antipode, &id, &h.coalgebra, &h.algebra).unwrap();
    let right = super::convolution::convolution_product(&id, &h.antipode, &h.coalgebra, &h.algebra).unwrap();
    let failing = |m: &Matrix| {
        let bad: Vec<String> =
            (0..n).filter(|&i| m.column(i) != conv_unit.column(i)).map(|i| format!("e_{i}")).collect();
        (!bad.is_empty()).then(|| format!("h ∈ {{{}}}", bad.join(", ")))
    };
    r.record("antipode left", failing(&left));
    r.record("antipode right", failing(&right));
    r.record("antipode invertible", h.antipode.inverse().is_none().then(|| "singular".to_string()));
    r
}

/// `H*` with multiplication and comultiplication transposed. Requires a verified input.
pub fn dual(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    h.require_verified()?;
    Ok(h.dual_unchecked())
}

/// Opposite multiplication, antipode `S⁻¹`.
pub fn opposite(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    h.require_verified()?;
    h.opposite_unchecked()
}

/// Opposite comultiplication, antipode `S⁻¹`.
pub fn coopposite(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    h.require_verified()?;
    h.coopposite_unchecked()
}

/// Both structures flipped, antipode `S`.
pub fn biopposite(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    h.require_verified()?;
    Ok(h.biopposite_unchecked())
}
