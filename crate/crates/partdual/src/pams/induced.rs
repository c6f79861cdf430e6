use crate::coideal::{build_quotient, certify_coideal};
use crate::hopf::{HopfAlgebra, LinMap};
use crate::report::{first_witness, Report};

use super::{certify_pams, gamma_from_zeta, Pams, PamsError};

/// The six systems induced by a given one on op, cop and dual Hopf algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InducedKind {
    /// `(ζ, γ*)` for `ι: B → H`.
    Given,
    /// `(ζ̄∘S⁻¹, γ̄*)` for `ι: B^op → H^op`.
    Op,
    /// `(ζ̄, γ̄*∘S⁻¹)` for `S⁻¹∘ι: B^op → H^cop`.
    Cop,
    /// `(γ*, ζ)` for `π*: C*^biop → H*^biop`.
    DualBiop,
    /// `(γ̄*∘S⁻¹, ζ̄)` for `π*: C*^cop → H*^cop`.
    DualCop,
    /// `(γ̄*, ζ̄∘S⁻¹)` for `S⁻¹∘π*: C*^cop → H*^op`.
    DualOp,
}

impl InducedKind {
    pub const ALL: [InducedKind; 6] = [
        InducedKind::Given,
        InducedKind::Op,
        InducedKind::Cop,
        InducedKind::DualBiop,
        InducedKind::DualCop,
        InducedKind::DualOp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InducedKind::Given => "given",
            InducedKind::Op => "op",
            InducedKind::Cop => "cop",
            InducedKind::DualBiop => "dual-biop",
            InducedKind::DualCop => "dual-cop",
            InducedKind::DualOp => "dual-op",
        }
    }

    /// Accepts the name or the row number `1..=6`.
    pub fn parse(text: &str) -> Option<InducedKind> {
        InducedKind::ALL
            .iter()
            .enumerate()
            .find(|(i, k)| k.name() == text || (i + 1).to_string() == text)
            .map(|(_, k)| *k)
    }
}

/// An induced system on the canonical quotient, with the map onto the stated quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPams {
    pub kind: InducedKind,
    pub pams: Pams,
    /// Quotient map `H' → C'` as the row states it.
    pub stated_quotient: LinMap,
    /// `C'_canonical → C'`, `c'_k ↦ q(lift c'_k)`.
    pub identification: LinMap,
    pub report: Report,
}

struct RowData {
    hopf: HopfAlgebra,
    iota: LinMap,
    zeta: LinMap,
    gamma: LinMap,
    quotient: LinMap,
}

fn row_data(p: &Pams, kind: InducedKind) -> Result<RowData, PamsError> {
    let h = p.hopf();
    let s_inv = h.antipode_inverse()?;
    let iota = p.coideal().iota().clone();
    let pi = p.quotient().pi().clone();
    let (zeta, gamma, zb, gb) = (p.zeta(), p.gamma(), p.zeta_bar(), p.gamma_bar());
    let dual = h.dual_unchecked();
    let s_inv_dual = s_inv.transpose();
    Ok(match kind {
        InducedKind::Given => RowData { hopf: h.clone(), iota, zeta: zeta.clone(), gamma: gamma.clone(), quotient: pi },
        InducedKind::Op => RowData {
            hopf: h.opposite_unchecked()?,
            iota,
            zeta: zb.mul(&s_inv),
            gamma: gb.clone(),
            quotient: pi.mul(&s_inv),
        },
        InducedKind::Cop => RowData {
            hopf: h.coopposite_unchecked()?,
            iota: s_inv.mul(&iota),
            zeta: zb.clone(),
            gamma: s_inv.mul(gb),
            quotient: pi,
        },
        InducedKind::DualBiop => RowData {
            hopf: dual.biopposite_unchecked(),
            iota: pi.transpose(),
            zeta: gamma.transpose(),
            gamma: zeta.transpose(),
            quotient: iota.transpose(),
        },
        InducedKind::DualCop => RowData {
            hopf: dual.coopposite_unchecked()?,
            iota: pi.transpose(),
            zeta: gb.transpose().mul(&s_inv_dual),
            gamma: zb.transpose(),
            quotient: iota.transpose().mul(&s_inv_dual),
        },
        InducedKind::DualOp => RowData {
            hopf: dual.opposite_unchecked()?,
            iota: s_inv_dual.mul(&pi.transpose()),
            zeta: gb.transpose(),
            gamma: s_inv_dual.mul(&zb.transpose()),
            quotient: iota.transpose(),
        },
    })
}

/// Builds and certifies the selected induced system, and checks that its `γ'`
/// agrees with the stated one through the identification of quotients.
pub fn induced_pams(p: &Pams, kind: InducedKind) -> Result<InducedPams, PamsError> {
    let row = row_data(p, kind)?;
    let b = certify_coideal(&row.hopf, &row.iota)?;
    let q = build_quotient(&b)?;
    let (gamma, _) = gamma_from_zeta(&q, &row.zeta)?;
    let pams = certify_pams(&q, &row.zeta, &gamma)?;
    let identification = row.quotient.mul(&q.lift_map());
    let mut report = Report::new();
    let kernel = q.kernel_basis();
    report.record(
        "stated quotient kills B'⁺H'",
        first_witness(0..kernel.rows(), |&r| row.quotient.apply(&kernel.row(r)).is_zero()),
    );
    report.record(
        "quotients identified",
        identification.inverse().is_none().then(|| "identification is singular".to_string()),
    );
    report.record(
        "γ' = stated γ' after identification",
        first_witness(0..q.dim(), |&k| gamma.column(k) == row.gamma.mul(&identification).column(k)),
    );
    if let Some(f) = report.first_failure() {
        return Err(PamsError::Identity { name: f.name.clone(), witness: f.witness.clone().unwrap_or_default() });
    }
    Ok(InducedPams { kind, pams, stated_quotient: row.quotient, identification, report })
}
