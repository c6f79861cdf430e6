//! Concrete inputs: group algebras, matched pairs, the Taft family and split projections.

mod group;
mod matched;
mod split;
mod taft;

pub use group::{group_algebra, FiniteGroup};
pub use matched::{bismash_product, matched_pair_hopf, MatchedPair, MatchedPairTables};
pub use split::pams_from_split_projection;
pub use taft::{taft4, taft4_hopf, taft4_pams};

use crate::coideal::CoidealError;
use crate::pams::PamsError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExampleError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a matched pair: {0}")]
    NotAMatchedPair(String),
    #[error("the Taft algebra needs characteristic ≠ 2")]
    Characteristic2,
    #[error("parameter lives in a different field")]
    FieldMismatch,
    #[error("projection or section is not a Hopf algebra map: {0}")]
    NotHopfMaps(String),
    #[error("π∘γ ≠ id: {0}")]
    NotSplit(String),
    #[error(transparent)]
    Coideal(#[from] CoidealError),
    #[error(transparent)]
    Pams(#[from] PamsError),
}
