//! Left and right partial duals of a Hopf algebra determined by a mapping system.

mod hopfness;
mod iso;
mod left;
mod quasi;
mod right;

pub use hopfness::{detect_hopf, hopf_diagnostics, HopfDetection, HopfDiagnostics};
pub use iso::{biop_iso_check, biop_iso_report, biop_map, op_iso_check, op_iso_report, transport_report};
pub use left::{build_left, left_partial_dual, preantipode_is_unique, UNIQUENESS_DIM_LIMIT};
pub use quasi::{
    antipode_report, antipodes_from_preantipode, contract_product, verify_quasi_hopf, AntipodeTriple, QuasiHopfAlgebra,
};
pub use right::{build_right, duality_report, right_partial_dual, CoquasiHopfAlgebra};

use crate::pams::PamsError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartialDualError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("structures live over different fields")]
    FieldMismatch,
    #[error("internal error: axiom `{name}` fails at {witness}")]
    Axiom { name: String, witness: String },
    #[error("internal error: duality fails at `{name}` ({witness})")]
    Duality { name: String, witness: String },
    #[error(transparent)]
    Pams(#[from] PamsError),
}
