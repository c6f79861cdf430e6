//! Partially admissible mapping systems `(ζ, γ*)` for a coideal subalgebra `B ⊆ H`.
//!
//! `ζ: H → B` is a biunitary cointegral (a convolution-invertible left `B`-module map),
//! `γ: C → H` with `C = H/B⁺H` is the matching section. Everything is stored in the
//! canonical bases of `H`, `B` and `C`.

mod certify;
mod construct;
mod induced;

pub(crate) use certify::Frame;
pub use certify::{certify_pams, pams_report};
pub use construct::{
    biunitarize, cointegral_solution_space, find_cointegral, gamma_from_zeta, zeta_from_gamma, AffineSpace,
    SearchStrategy, DEFAULT_SEED,
};
pub use induced::{induced_pams, InducedKind, InducedPams};

use crate::coideal::{CoidealError, CoidealQuotient, CoidealSubalgebra};
use crate::hopf::{HopfAlgebra, HopfError, LinMap};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PamsError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ζ is not convolution invertible")]
    ZetaNotInvertible,
    #[error("γ is not convolution invertible")]
    GammaNotInvertible,
    #[error("ζ is not a left B-module map at {0}")]
    ZetaNotModuleMap(String),
    #[error("ζ is not biunitary: {0}")]
    ZetaNotBiunitary(String),
    #[error("γ is not well defined on H/B⁺H at {0}")]
    GammaNotWellDefined(String),
    #[error("identity `{name}` fails at {witness}")]
    Identity { name: String, witness: String },
    #[error("no invertible cointegral among {attempts} candidates")]
    SearchExhausted { attempts: usize },
    #[error(transparent)]
    Coideal(#[from] CoidealError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A certified system together with both convolution inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pams {
    quotient: CoidealQuotient,
    zeta: LinMap,
    gamma: LinMap,
    zeta_bar: LinMap,
    gamma_bar: LinMap,
    report: Report,
}

impl Pams {
    pub fn quotient(&self) -> &CoidealQuotient {
        &self.quotient
    }

    pub fn coideal(&self) -> &CoidealSubalgebra {
        self.quotient.coideal()
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.quotient.parent()
    }

    /// `ζ: H → B`, an `m × n` matrix.
    pub fn zeta(&self) -> &LinMap {
        &self.zeta
    }

    /// `γ: C → H`, an `n × c` matrix.
    pub fn gamma(&self) -> &LinMap {
        &self.gamma
    }

    pub fn zeta_bar(&self) -> &LinMap {
        &self.zeta_bar
    }

    pub fn gamma_bar(&self) -> &LinMap {
        &self.gamma_bar
    }

    /// Every identity checked during certification.
    pub fn report(&self) -> &Report {
        &self.report
    }
}

/// `γ` from `ζ`, then the full certification.
pub fn pams_from_zeta(q: &CoidealQuotient, zeta: &LinMap) -> Result<Pams, PamsError> {
    let (gamma, _) = gamma_from_zeta(q, zeta)?;
    certify_pams(q, zeta, &gamma)
}

/// Searches for a cointegral and certifies the resulting system.
pub fn find_pams(q: &CoidealQuotient, strategy: &SearchStrategy) -> Result<Pams, PamsError> {
    pams_from_zeta(q, &find_cointegral(q, strategy)?)
}
