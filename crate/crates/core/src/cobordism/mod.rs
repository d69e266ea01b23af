//! A chain-level model of cobordism-induced cone decompositions: snake
//! complexes and the snake category, iterated cones of Yoneda modules,
//! their filtration, and assembly into T^S morphisms.

mod datum;
mod snake;
mod snake_category;
mod towers;

use thiserror::Error;

use crate::ainf::AinfError;
use crate::cone_calc::ConeError;
use crate::f2::ChainError;
use crate::modules::ModuleError;

pub use datum::{
    assemble_functor_value, build_iterated_cones, check_composition_compatibility, check_filtration,
    check_filtration_profile, functor_class_from_unit, CobordismDatum, FiltrationProfile, IteratedCones,
};
pub(crate) use snake::snake_matrix;
pub use snake::{build_snake, snake_inclusion, snake_projection, snake_truncation, SnakeComplex};
pub use snake_category::{
    inclusion_functor, path_product, projection_functor, projection_homotopy, snake_category, SnakeCategory,
};
pub use towers::{realize_towers, Tower};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CobordismError {
    #[error("snake length {0} is even")]
    EvenL(usize),
    #[error("index {0} is even; projections exist for odd indices only")]
    EvenIndex(usize),
    #[error("snake length {0} is too small")]
    LTooSmall(usize),
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("the datum has no end comparison φ_V")]
    MissingEndComparison,
    #[error("end comparison is not a quasi-isomorphism at {0}")]
    NotQuasiIso(String),
    #[error("the supplied unit is not a cycle")]
    NotACycle,
    #[error("no witnesses supplied for a test object")]
    MissingWitness,
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Ainf(#[from] AinfError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[cfg(test)]
mod tests;
