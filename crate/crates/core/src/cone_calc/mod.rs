//! Iterated cone decompositions over the homotopy category of chain
//! complexes and the category of stable triangle resolutions built on them.
//! The translation functor is the identity throughout.

mod decomposition;
mod equivalence;
mod index;
mod ts;

use thiserror::Error;

use crate::f2::ChainError;

pub use decomposition::{check_cone_decomposition, ChainTriangle, ConeDecomposition};
pub use equivalence::{check_equivalence, check_ts_equivalence, solve_equivalence};
pub use index::{classify_index, fredholm_index, IndexCase, MorseIndexProfile};
pub use ts::{compose_ts, project_ts, sum_ts, Summand, TSMorphism};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("a decomposition needs at least one triangle")]
    Empty,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("the first stage Y_1 is not the zero complex")]
    NonzeroStart,
    #[error("triangle {0} does not end where triangle {} starts", .0 + 1)]
    BrokenChain(usize),
    #[error("triangle {0} is not exact: {1}")]
    TriangleFailure(usize, String),
    #[error("decompositions or witness lists have different lengths")]
    LengthMismatch,
    #[error("families do not match: {0}")]
    TupleMismatch(String),
    #[error("map is not a quasi-isomorphism, so it has no homotopy inverse")]
    NoHomotopyInverse,
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[cfg(test)]
mod tests;
