use crate::hopf::{verify_hopf, Coalgebra, HopfAlgebra};
use crate::linalg::{in_row_span, rref, Matrix, Vector};
use crate::pams::Pams;
use crate::report::Report;

use super::quasi::QuasiHopfAlgebra;

/// Sufficient conditions for a trivial associator, evaluated on `(ζ, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfDiagnostics {
    /// `B` is a subbialgebra and `ζ` is a bialgebra map.
    pub zeta_bialgebra: bool,
    /// `H/B⁺H` is a quotient bialgebra and `γ` is a bialgebra map.
    pub gamma_bialgebra: bool,
    /// `ζ` is an algebra map and `γ` is a coalgebra map.
    pub zeta_algebra_gamma_coalgebra: bool,
}

impl HopfDiagnostics {
    pub fn any(&self) -> bool {
        self.zeta_bialgebra || self.gamma_bialgebra || self.zeta_algebra_gamma_coalgebra
    }
}

#[derive(Clone, Debug)]
pub struct HopfDetection {
    /// The ordinary Hopf algebra when `φ = e⊗e⊗e`, with antipode `S₁`.
    pub hopf: Option<HopfAlgebra>,
    pub associator_trivial: bool,
    pub diagnostics: HopfDiagnostics,
    /// Hopf axioms of the view, and consistency of the diagnostics with `φ`.
    pub report: Report,
}

impl HopfDetection {
    pub fn is_hopf(&self) -> bool {
        self.hopf.is_some()
    }
}

fn zeta_algebra_map(p: &Pams) -> bool {
    let h = p.hopf();
    let b = p.coideal();
    let z = p.zeta();
    let n = h.dim();
    z.apply(&h.one()) == b.one()
        && (0..n).all(|i| {
            (0..n).all(|j| z.apply(&h.mul(&h.basis(i), &h.basis(j))) == b.algebra().mul(&z.column(i), &z.column(j)))
        })
}

fn gamma_coalgebra_map(p: &Pams) -> bool {
    let h = p.hopf();
    let q = p.quotient();
    let g = p.gamma();
    let cq = q.quotient_coalgebra();
    (0..q.dim()).all(|t| {
        let lhs = h.comul(&g.column(t));
        let rhs = g.mul(&cq.comul(&q.basis(t))).mul(&g.transpose());
        lhs == rhs && h.eps(&g.column(t)) == cq.eps(&q.basis(t))
    })
}

/// `Δ(ι(B)) ⊆ ι(B) ⊗ ι(B)`, then `ζ` respects `Δ` and `ε`.
fn zeta_bialgebra_map(p: &Pams) -> bool {
    let h = p.hopf();
    let b = p.coideal();
    let iota = b.iota();
    let z = p.zeta();
    let m = b.dim();
    // Δ(b_j) = Σ X[k][i] b_k ⊗ b_i, solved leg by leg
    let mut delta_b = Vec::with_capacity(m);
    for j in 0..m {
        let d = h.comul(&iota.column(j));
        let mut out = Matrix::zeros(h.field(), m, m);
        let rows: Option<Vec<Vector>> = (0..h.dim()).map(|r| b.coordinates(&d.row(r))).collect();
        let Some(rows) = rows else { return false };
        let left = Matrix::from_rows(h.field(), m, &rows).transpose();
        for i in 0..m {
            let Some(col) = b.coordinates(&left.row(i)) else { return false };
            for k in 0..m {
                out[(k, i)] = col[k].clone();
            }
        }
        delta_b.push(out);
    }
    if !zeta_algebra_map(p) {
        return false;
    }
    (0..h.dim()).all(|i| {
        let lhs = z.mul(&h.comul(&h.basis(i))).mul(&z.transpose());
        let zi = z.column(i);
        let mut rhs = Matrix::zeros(h.field(), m, m);
        for (j, c) in zi.support() {
            rhs = rhs.add(&delta_b[j].scale(c));
        }
        lhs == rhs && b.counit().dot(&zi) == h.eps(&h.basis(i))
    })
}

/// `B⁺H` is a two-sided ideal, then `γ` is multiplicative, unital and a coalgebra map.
fn gamma_bialgebra_map(p: &Pams) -> bool {
    let h = p.hopf();
    let q = p.quotient();
    let kernel = q.kernel_basis();
    let (basis, pivots) = rref(kernel);
    let ideal = (0..kernel.rows())
        .all(|r| (0..h.dim()).all(|k| in_row_span(&basis, &pivots, &h.mul(&h.basis(k), &kernel.row(r)))));
    if !ideal || !gamma_coalgebra_map(p) {
        return false;
    }
    let g = p.gamma();
    let c = q.dim();
    g.apply(&q.one()) == h.one()
        && (0..c).all(|s| {
            (0..c).all(|t| {
                let prod = q.project(&h.mul(&q.lift(&q.basis(s)), &q.lift(&q.basis(t))));
                g.apply(&prod) == h.mul(&g.column(s), &g.column(t))
            })
        })
}

pub fn hopf_diagnostics(p: &Pams) -> HopfDiagnostics {
    HopfDiagnostics {
        zeta_bialgebra: zeta_bialgebra_map(p),
        gamma_bialgebra: gamma_bialgebra_map(p),
        zeta_algebra_gamma_coalgebra: zeta_algebra_map(p) && gamma_coalgebra_map(p),
    }
}

/// Decides Hopf-ness by `φ = e⊗e⊗e` and re-verifies the ordinary Hopf structure.
pub fn detect_hopf(p: &Pams, q: &QuasiHopfAlgebra) -> HopfDetection {
    let diagnostics = hopf_diagnostics(p);
    let associator_trivial = q.has_trivial_associator();
    let mut report = Report::new();
    report.record(
        "sufficient condition implies trivial φ",
        (diagnostics.any() && !associator_trivial).then(|| format!("{diagnostics:?}")),
    );
    let mut hopf = None;
    if associator_trivial {
        report.record("υ = e", (q.upsilon() != &q.one()).then(|| "υ".to_string()));
        let view = Coalgebra::new(q.comult().clone(), q.counit().clone())
            .and_then(|c| HopfAlgebra::new(q.algebra().clone(), c, q.preantipode().clone()));
        match view {
            Ok(h) => {
                let r = verify_hopf(&h);
                let ok = r.all_passed();
                report.extend("Hopf view ", r);
                if ok {
                    hopf = Some(h);
                }
            }
            Err(e) => report.fail("Hopf view", e.to_string()),
        }
    }
    HopfDetection { hopf, associator_trivial, diagnostics, report }
}
