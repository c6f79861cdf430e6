use crate::hopf::{coproduct_table, Algebra, CoproductTable, TensorElem};
use crate::linalg::{Field, Matrix, Scalar, Tensor3, Vector};
use crate::report::{first_witness, Report};

use super::PartialDualError;

/// An antipode `S` with distinguished elements `α`, `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeTriple {
    pub s: Matrix,
    pub alpha: Vector,
    pub beta: Vector,
}

/// Quasi-Hopf algebra in Drinfeld's normalization, stored as structure constants.
///
/// `Δ(e_a) = Σ comult(a,u,v) e_u ⊗ e_v`; `phi` and `phi_inv` are order-3 tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHopfAlgebra {
    pub(crate) algebra: Algebra,
    pub(crate) comult: Tensor3,
    pub(crate) counit: Vector,
    pub(crate) phi: TensorElem,
    pub(crate) phi_inv: TensorElem,
    pub(crate) preantipode: Matrix,
    pub(crate) upsilon: Vector,
    pub(crate) antipodes: Option<[AntipodeTriple; 2]>,
    /// `(dim C*, dim B)` for a smash product carrier `f_i # b_j ↦ i·dim B + j`.
    pub(crate) factors: (usize, usize),
    pub(crate) report: Report,
}

impl QuasiHopfAlgebra {
    /// Assembles raw data and runs [`verify_quasi_hopf`]; the report is kept, not enforced.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        algebra: Algebra,
        comult: Tensor3,
        counit: Vector,
        phi: TensorElem,
        phi_inv: TensorElem,
        preantipode: Matrix,
        antipodes: Option<[AntipodeTriple; 2]>,
        factors: (usize, usize),
    ) -> Result<QuasiHopfAlgebra, PartialDualError> {
        let n = algebra.dim();
        let field = algebra.field();
        let shape_ok = comult.shape() == (n, n, n)
            && counit.len() == n
            && phi.dim() == n
            && phi.order() == 3
            && phi_inv.dim() == n
            && phi_inv.order() == 3
            && preantipode.rows() == n
            && preantipode.cols() == n
            && factors.0 * factors.1 == n;
        if !shape_ok {
            return Err(PartialDualError::Shape(format!("quasi-Hopf data does not fit dimension {n}")));
        }
        if comult.field() != field || counit.field() != field || preantipode.field() != field {
            return Err(PartialDualError::FieldMismatch);
        }
        let upsilon = preantipode.apply(algebra.unit());
        let mut q = QuasiHopfAlgebra {
            algebra,
            comult,
            counit,
            phi,
            phi_inv,
            preantipode,
            upsilon,
            antipodes,
            factors,
            report: Report::new(),
        };
        q.report = verify_quasi_hopf(&q);
        Ok(q)
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

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    /// `Δ` as an `n² × n` matrix, row index `u·n + v`.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n * n, n);
        for ((a, u, v), c) in self.comult.entries() {
            m[(u * n + v, a)] = c.clone();
        }
        m
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn phi(&self) -> &TensorElem {
        &self.phi
    }

    pub fn phi_inv(&self) -> &TensorElem {
        &self.phi_inv
    }

    pub fn preantipode(&self) -> &Matrix {
        &self.preantipode
    }

    pub fn upsilon(&self) -> &Vector {
        &self.upsilon
    }

    /// `[(S₁, υ, e), (S₂, e, υ)]` when `υ` is invertible.
    pub fn antipodes(&self) -> Option<&[AntipodeTriple; 2]> {
        self.antipodes.as_ref()
    }

    pub fn upsilon_invertible(&self) -> bool {
        self.antipodes.is_some()
    }

    pub fn factors(&self) -> (usize, usize) {
        self.factors
    }

    pub fn report(&self) -> &Report {
        &self.report
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

    pub fn eps(&self, x: &Vector) -> Scalar {
        self.counit.dot(x)
    }

    pub fn delta(&self, x: &Vector) -> TensorElem {
        let n = self.dim();
        let mut out = TensorElem::zero(self.field(), n, 2);
        let table = self.table();
        for (a, c) in x.support() {
            for (u, v, d) in &table[a] {
                out.add_term(vec![*u, *v], &(c * d));
            }
        }
        out
    }

    pub(crate) fn table(&self) -> CoproductTable {
        coproduct_table(&self.comult)
    }

    /// `e ⊗ … ⊗ e` with `k` factors.
    pub fn unit_tensor(&self, k: usize) -> TensorElem {
        let one = self.one();
        TensorElem::pure(&vec![&one; k])
    }

    /// `φ = e⊗e⊗e`.
    pub fn has_trivial_associator(&self) -> bool {
        self.phi == self.unit_tensor(3)
    }
}

/// `Σ x¹ ⊗ … ⊗ xᵏ ↦ Σ maps[0](x¹) · … · maps[k-1](xᵏ)` where each map is applied to its tensorand.
pub fn contract_product(alg: &Algebra, t: &TensorElem, maps: &[&dyn Fn(&Vector) -> Vector]) -> Vector {
    let n = alg.dim();
    let mut out = Vector::zeros(alg.field(), n);
    for (idx, c) in t.terms() {
        let mut acc: Option<Vector> = None;
        for (slot, &i) in idx.iter().enumerate() {
            let v = maps[slot](&alg.basis(i));
            acc = Some(match acc {
                None => v,
                Some(a) => alg.mul(&a, &v),
            });
        }
        out.axpy(c, &acc.expect("order ≥ 1"));
    }
    out
}

/// Checks all quasi-Hopf axioms, the preantipode identities and every antipode triple on the full basis.
pub fn verify_quasi_hopf(q: &QuasiHopfAlgebra) -> Report {
    let n = q.dim();
    let alg = &q.algebra;
    let table = q.table();
    let mut r = Report::new();
    r.extend("algebra ", alg.verify());
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    let deltas: Vec<TensorElem> = (0..n).map(|a| q.delta(&q.basis(a))).collect();

    r.record(
        "Δ multiplicative",
        first_witness(pairs(), |&(a, b)| q.delta(&q.mul(&q.basis(a), &q.basis(b))) == deltas[a].mul(&deltas[b], alg)),
    );
    r.record("Δ unital", (q.delta(&q.one()) != q.unit_tensor(2)).then(|| "Δ(e)".to_string()));
    r.record(
        "ε multiplicative",
        first_witness(pairs(), |&(a, b)| {
            q.eps(&q.mul(&q.basis(a), &q.basis(b))) == &q.eps(&q.basis(a)) * &q.eps(&q.basis(b))
        }),
    );
    r.record("ε unital", (!q.eps(&q.one()).is_one()).then(|| "ε(e)".to_string()));
    r.record(
        "counit axiom",
        first_witness(0..n, |&a| {
            let e = TensorElem::from_vector(&q.basis(a));
            deltas[a].functional_at(0, &q.counit) == e && deltas[a].functional_at(1, &q.counit) == e
        }),
    );

    let phi = &q.phi;
    let phi_inv = &q.phi_inv;
    r.record(
        "quasi-coassociativity",
        first_witness(0..n, |&a| {
            let left = phi.mul(&deltas[a].coproduct_at(0, &table), alg);
            let right = deltas[a].coproduct_at(1, &table).mul(phi, alg);
            left == right
        }),
    );
    let one = q.one();
    let pentagon_left = phi.insert_at(0, &one).mul(&phi.coproduct_at(1, &table), alg).mul(&phi.insert_at(3, &one), alg);
    let pentagon_right = phi.coproduct_at(2, &table).mul(&phi.coproduct_at(0, &table), alg);
    r.record("pentagon", (pentagon_left != pentagon_right).then(|| "φ".to_string()));
    let e3 = q.unit_tensor(3);
    r.record("φ·φ⁻¹ = 1", (phi.mul(phi_inv, alg) != e3).then(|| "φ·φ⁻¹".to_string()));
    r.record("φ⁻¹·φ = 1", (phi_inv.mul(phi, alg) != e3).then(|| "φ⁻¹·φ".to_string()));
    let e2 = q.unit_tensor(2);
    r.record("φ counit normalized", first_witness(0..3, |&slot| phi.functional_at(slot, &q.counit) == e2));

    let t = &q.preantipode;
    let tm = |x: &Vector| t.apply(x);
    let id = |x: &Vector| x.clone();
    r.record(
        "preantipode Σ T(p₁q)p₂ = ε(p)T(q)",
        first_witness(pairs(), |&(p, qq)| {
            let eq = q.basis(qq);
            let mut lhs = Vector::zeros(q.field(), n);
            for (idx, c) in deltas[p].terms() {
                let x = q.mul(&t.apply(&q.mul(&q.basis(idx[0]), &eq)), &q.basis(idx[1]));
                lhs.axpy(c, &x);
            }
            lhs == t.apply(&eq).scale(&q.eps(&q.basis(p)))
        }),
    );
    r.record(
        "preantipode Σ p₁T(qp₂) = ε(p)T(q)",
        first_witness(pairs(), |&(p, qq)| {
            let eq = q.basis(qq);
            let mut lhs = Vector::zeros(q.field(), n);
            for (idx, c) in deltas[p].terms() {
                let x = q.mul(&q.basis(idx[0]), &t.apply(&q.mul(&eq, &q.basis(idx[1]))));
                lhs.axpy(c, &x);
            }
            lhs == t.apply(&eq).scale(&q.eps(&q.basis(p)))
        }),
    );
    r.record(
        "preantipode Σ φ¹T(φ²)φ³ = e",
        (contract_product(alg, phi, &[&id, &tm, &id]) != one).then(|| "φ".to_string()),
    );
    r.record(
        "preantipode Σ T(φ̄¹)φ̄²T(φ̄³) = T(e)",
        (contract_product(alg, phi_inv, &[&tm, &id, &tm]) != q.upsilon).then(|| "φ⁻¹".to_string()),
    );
    r.record("υ = T(e)", (t.apply(&one) != q.upsilon).then(|| "υ".to_string()));

    if let Some(triples) = &q.antipodes {
        for (k, triple) in triples.iter().enumerate() {
            r.extend(&format!("antipode S{} ", k + 1), antipode_report(q, &deltas, triple));
        }
    }
    r
}

/// The four antipode axioms and `υ = βα` for one triple.
pub fn antipode_report(q: &QuasiHopfAlgebra, deltas: &[TensorElem], triple: &AntipodeTriple) -> Report {
    let n = q.dim();
    let alg = &q.algebra;
    let AntipodeTriple { s, alpha, beta } = triple;
    let mut r = Report::new();
    r.record(
        "Σ S(a₁)αa₂ = ε(a)α",
        first_witness(0..n, |&a| {
            let mut lhs = Vector::zeros(q.field(), n);
            for (idx, c) in deltas[a].terms() {
                lhs.axpy(c, &alg.mul_many(&[&s.column(idx[0]), alpha, &q.basis(idx[1])]));
            }
            lhs == alpha.scale(&q.eps(&q.basis(a)))
        }),
    );
    r.record(
        "Σ a₁βS(a₂) = ε(a)β",
        first_witness(0..n, |&a| {
            let mut lhs = Vector::zeros(q.field(), n);
            for (idx, c) in deltas[a].terms() {
                lhs.axpy(c, &alg.mul_many(&[&q.basis(idx[0]), beta, &s.column(idx[1])]));
            }
            lhs == beta.scale(&q.eps(&q.basis(a)))
        }),
    );
    let mut phi_side = Vector::zeros(q.field(), n);
    for (idx, c) in q.phi.terms() {
        let v = alg.mul_many(&[&q.basis(idx[0]), beta, &s.column(idx[1]), alpha, &q.basis(idx[2])]);
        phi_side.axpy(c, &v);
    }
    r.record("Σ φ¹βS(φ²)αφ³ = e", (phi_side != q.one()).then(|| "φ".to_string()));
    let mut inv_side = Vector::zeros(q.field(), n);
    for (idx, c) in q.phi_inv.terms() {
        let v = alg.mul_many(&[&s.column(idx[0]), alpha, &q.basis(idx[1]), beta, &s.column(idx[2])]);
        inv_side.axpy(c, &v);
    }
    r.record("Σ S(φ̄¹)αφ̄²βS(φ̄³) = e", (inv_side != q.one()).then(|| "φ⁻¹".to_string()));
    r.record("υ = βα", (alg.mul(beta, alpha) != q.upsilon).then(|| "βα".to_string()));
    r
}

/// `(T(−)υ⁻¹, υ, e)` and `(υ⁻¹T(−), e, υ)` when `υ = T(e)` is invertible.
pub fn antipodes_from_preantipode(alg: &Algebra, t: &Matrix) -> Option<[AntipodeTriple; 2]> {
    let field = alg.field();
    let dim = alg.dim();
    let e = alg.unit().clone();
    let upsilon = t.apply(&e);
    alg.inverse(&upsilon).map(|ui| {
        let s1 = Matrix::from_columns(field, dim, &(0..dim).map(|x| alg.mul(&t.column(x), &ui)).collect::<Vec<_>>());
        let s2 = Matrix::from_columns(field, dim, &(0..dim).map(|x| alg.mul(&ui, &t.column(x))).collect::<Vec<_>>());
        [
            AntipodeTriple { s: s1, alpha: upsilon.clone(), beta: e.clone() },
            AntipodeTriple { s: s2, alpha: e, beta: upsilon },
        ]
    })
}
