use crate::coideal::{action_btl, action_btr};
use crate::hopf::{hit_left, hit_right_dual, verify_hopf, Algebra, Coalgebra, HopfAlgebra, TensorElem};
use crate::linalg::{Field, Matrix, Tensor3, Vector};
use crate::pams::Pams;
use crate::report::Report;

use super::left::{add_pure, build_left};
use super::quasi::{antipodes_from_preantipode, QuasiHopfAlgebra};
use super::PartialDualError;

/// Coquasi-Hopf algebra on `C ⊗ B*`, basis `c_t ⋉ b*_p ↦ t·dim B + p`.
///
/// The coassociator, its inverse, the preantipode and the antipode are stored as
/// the functionals dual to the matching data of the left partial dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoquasiHopfAlgebra {
    pub(crate) coalgebra: Coalgebra,
    pub(crate) mult: Tensor3,
    pub(crate) unit: Vector,
    pub(crate) coassociator: TensorElem,
    pub(crate) coassociator_inv: TensorElem,
    pub(crate) preantipode: Matrix,
    pub(crate) antipode: Option<Matrix>,
    pub(crate) factors: (usize, usize),
    pub(crate) report: Report,
}

impl CoquasiHopfAlgebra {
    /// Assembles raw data; the report holds the axioms of the transposed dual.
    pub fn from_parts(
        coalgebra: Coalgebra,
        mult: Tensor3,
        unit: Vector,
        coassociator: TensorElem,
        coassociator_inv: TensorElem,
        preantipode: Matrix,
        factors: (usize, usize),
    ) -> Result<CoquasiHopfAlgebra, PartialDualError> {
        let n = coalgebra.dim();
        if mult.shape() != (n, n, n) || unit.len() != n || preantipode.rows() != n || preantipode.cols() != n {
            return Err(PartialDualError::Shape(format!("coquasi-Hopf data does not fit dimension {n}")));
        }
        let mut r = CoquasiHopfAlgebra {
            coalgebra,
            mult,
            unit,
            coassociator,
            coassociator_inv,
            preantipode,
            antipode: None,
            factors,
            report: Report::new(),
        };
        let q = r.transposed_quasi_hopf()?;
        r.antipode = q.antipodes().map(|a| a[0].s.transpose());
        r.report = q.report().clone();
        Ok(r)
    }

    /// The quasi-Hopf algebra on the dual space, verified by [`verify_quasi_hopf`](super::verify_quasi_hopf).
    pub fn transposed_quasi_hopf(&self) -> Result<QuasiHopfAlgebra, PartialDualError> {
        let (alg, comult, counit) = self.transposed_dual();
        let t = self.preantipode.transpose();
        let antipodes = antipodes_from_preantipode(&alg, &t);
        QuasiHopfAlgebra::from_parts(
            alg,
            comult,
            counit,
            self.coassociator.clone(),
            self.coassociator_inv.clone(),
            t,
            antipodes,
            self.factors,
        )
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn coassociator(&self) -> &TensorElem {
        &self.coassociator
    }

    pub fn coassociator_inv(&self) -> &TensorElem {
        &self.coassociator_inv
    }

    /// Transpose of the preantipode of the left partial dual.
    pub fn preantipode(&self) -> &Matrix {
        &self.preantipode
    }

    /// Transpose of `S₁` of the left partial dual, when it exists.
    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn factors(&self) -> (usize, usize) {
        self.factors
    }

    pub fn report(&self) -> &Report {
        &self.report
    }

    /// `x · y` with the (non-associative in general) multiplication.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field(), self.dim());
        for ((i, j, k), c) in self.mult.entries() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[k].add_product(c, &(&x[i] * &y[j]));
        }
        out
    }

    /// Multiplication, unit, comultiplication and counit of the transposed dual.
    pub fn transposed_dual(&self) -> (Algebra, Tensor3, Vector) {
        let alg = Algebra::new(self.coalgebra.comult().permute([1, 2, 0]), self.coalgebra.counit().clone())
            .expect("transpose keeps shapes");
        (alg, self.mult.permute([2, 0, 1]), self.unit.clone())
    }

    /// The trivial coassociator `ε ⊗ ε ⊗ ε`.
    pub fn has_trivial_coassociator(&self) -> bool {
        let e = self.coalgebra.counit();
        self.coassociator == TensorElem::pure(&[e, e, e])
    }

    /// An ordinary Hopf algebra when the coassociator is trivial and every Hopf axiom holds.
    pub fn hopf_view(&self) -> Option<HopfAlgebra> {
        if !self.has_trivial_coassociator() {
            return None;
        }
        let s = self.antipode.clone()?;
        let alg = Algebra::new(self.mult.clone(), self.unit.clone()).ok()?;
        let h = HopfAlgebra::new(alg, self.coalgebra.clone(), s).ok()?;
        verify_hopf(&h).all_passed().then_some(h)
    }
}

/// `x ⋉ b* ↦ Σ_i [x₁ ⋉ (h*_i ▷ b*₁)] ⊗ [(x₂ ◁ h_i) ⋉ b*₂]`.
fn smash_coproduct(p: &Pams) -> Tensor3 {
    let q = p.quotient();
    let b = q.coideal();
    let h = q.parent();
    let field = q.field();
    let (c, m, n) = (q.dim(), b.dim(), h.dim());
    let dim = c * m;
    let elem = |x: &Vector, bs: &Vector| {
        let mut out = Vector::zeros(field, dim);
        for (i, s) in x.support() {
            for (j, t) in bs.support() {
                out[i * m + j] = s * t;
            }
        }
        out
    };
    let act = q.action_table();
    let b_mult = b.algebra().mult();
    let mut out = Tensor3::zeros(field, (dim, dim, dim));
    for t in 0..c {
        for pp in 0..m {
            let mut d = TensorElem::zero(field, dim, 2);
            for ((u, v, _), dc) in q.quotient_coalgebra().comult().entries().filter(|((x, _, _), _)| *x == t) {
                for ((qq, r, _), mb) in b_mult.entries().filter(|((_, _, k), _)| *k == pp) {
                    let coef = dc * mb;
                    let right_b = Vector::basis(field, m, r);
                    for (i, x2) in act[v].iter().enumerate() {
                        let left_b = action_btr(b, &Vector::basis(field, n, i), &Vector::basis(field, m, qq));
                        add_pure(&mut d, &coef, &[&elem(&q.basis(u), &left_b), &elem(x2, &right_b)]);
                    }
                }
            }
            for (idx, s) in d.terms() {
                out[(t * m + pp, idx[0], idx[1])] = s.clone();
            }
        }
    }
    out
}

/// `(x ⋉ b*)(y ⋉ c*) = Σ (x ◁ [ζ*(b*₁) ⇀ γ(y₁)]) ⋉ ([ζ*(b*₂) ↼ γ(y₂)] ▷ c*)`.
fn right_multiplication(p: &Pams) -> Tensor3 {
    let q = p.quotient();
    let b = q.coideal();
    let h = q.parent();
    let field = q.field();
    let (c, m) = (q.dim(), b.dim());
    let dim = c * m;
    let b_mult = b.algebra().mult();
    let mut out = Tensor3::zeros(field, (dim, dim, dim));
    for t in 0..c {
        let x = q.basis(t);
        for pp in 0..m {
            for s in 0..c {
                for w in 0..m {
                    let cw = Vector::basis(field, m, w);
                    for ((u, v, _), dc) in q.quotient_coalgebra().comult().entries().filter(|((y, _, _), _)| *y == s) {
                        for ((qq, r, _), mb) in b_mult.entries().filter(|((_, _, k), _)| *k == pp) {
                            let coef = dc * mb;
                            let left = action_btl(q, &x, &hit_left(h, &p.zeta().row(qq), &p.gamma().column(u)));
                            let right = action_btr(b, &hit_right_dual(h, &p.zeta().row(r), &p.gamma().column(v)), &cw);
                            for (i, xi) in left.support() {
                                for (j, yj) in right.support() {
                                    out[(t * m + pp, s * m + w, i * m + j)].add_product(&coef, &(xi * yj));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Builds `H/B⁺H ⋉ B*` and verifies its transposed dual against the left partial dual.
pub fn right_partial_dual(p: &Pams) -> Result<CoquasiHopfAlgebra, PartialDualError> {
    let left = build_left(p)?;
    let r = build_right(p, &left)?;
    if let Some(f) = r.report.first_failure() {
        return Err(PartialDualError::Duality { name: f.name.clone(), witness: f.witness.clone().unwrap_or_default() });
    }
    Ok(r)
}

/// Builds the right partial dual and records the duality checks against `left`.
pub fn build_right(p: &Pams, left: &QuasiHopfAlgebra) -> Result<CoquasiHopfAlgebra, PartialDualError> {
    let q = p.quotient();
    let b = q.coideal();
    let field = q.field();
    let m = b.dim();
    let mut counit = Vector::zeros(field, q.dim() * m);
    let one_b = b.one();
    let eps_c = q.quotient_coalgebra().counit();
    for (t, x) in eps_c.support() {
        for (pp, y) in one_b.support() {
            counit[t * m + pp] = x * y;
        }
    }
    let coalgebra = Coalgebra::new(smash_coproduct(p), counit).map_err(|e| PartialDualError::Shape(e.to_string()))?;
    let one_c = q.one();
    let mut unit = Vector::zeros(field, q.dim() * m);
    for (t, x) in one_c.support() {
        for (pp, y) in b.counit().support() {
            unit[t * m + pp] = x * y;
        }
    }
    let mut r = CoquasiHopfAlgebra {
        coalgebra,
        mult: right_multiplication(p),
        unit,
        coassociator: left.phi().clone(),
        coassociator_inv: left.phi_inv().clone(),
        preantipode: left.preantipode().transpose(),
        antipode: left.antipodes().map(|a| a[0].s.transpose()),
        factors: (q.dim(), m),
        report: Report::new(),
    };
    r.report = duality_report(&r, left);
    Ok(r)
}

/// Compares the transposed dual of `r` with `left`, entry by entry.
pub fn duality_report(r: &CoquasiHopfAlgebra, left: &QuasiHopfAlgebra) -> Report {
    let mut rep = Report::new();
    rep.extend("coalgebra ", r.coalgebra.verify());
    let (alg, comult, counit) = r.transposed_dual();
    let diff = |a: &Tensor3, b: &Tensor3| {
        if a.shape() != b.shape() {
            return Some(format!("shape {:?} vs {:?}", a.shape(), b.shape()));
        }
        let (x, y, z) = a.shape();
        (0..x)
            .flat_map(|i| (0..y).flat_map(move |j| (0..z).map(move |k| (i, j, k))))
            .find(|&ix| a[ix] != b[ix])
            .map(|ix| format!("{ix:?}: {} vs {}", a[ix], b[ix]))
    };
    rep.record("dual multiplication", diff(alg.mult(), left.algebra().mult()));
    rep.record("dual unit", (alg.unit() != left.algebra().unit()).then(|| "unit".to_string()));
    rep.record("dual comultiplication", diff(&comult, left.comult()));
    rep.record("dual counit", (&counit != left.counit()).then(|| "counit".to_string()));
    rep
}
