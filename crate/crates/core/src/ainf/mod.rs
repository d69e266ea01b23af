//! Extended multilinear maps and A∞-categories over GF(2).

pub mod category;
pub mod extended;
pub mod functor;
pub mod homology_cat;
pub mod mixed;
pub mod multilinear;
pub mod natural;

use thiserror::Error;

pub use category::{check_a_infinity, hom_matrix, hom_vector, AInfCategory};
pub use extended::{compose_circle, compose_star, ExtendedMap, HomCollection, DEFAULT_ARITY_CAP};
pub use functor::{check_functor, compose_functors, identity_functor};
pub use homology_cat::{homology_category, HomologyCategory};
pub use mixed::{compose_mixed, compose_mixed_circle, compose_mixed_star, MixedExtendedMap};
pub use multilinear::{compositions, for_each_tuple, tensor_all, Multilinear};
pub use natural::{
    check_homotopic, check_natural_transformation, compose_pre_natural, functor_differential, mu_chain,
    pair_collection, PreNaturalTransformation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AinfError {
    #[error("collection mismatch: {0}")]
    CollectionMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("arity {arity} exceeds the arity cap {cap}")]
    AboveCap { arity: usize, cap: usize },
    #[error("functors have different object actions")]
    ObjectActionMismatch,
}

/// Arity cap from `AINF_ARITY_CAP`, falling back to the default.
pub fn arity_cap_from_env() -> usize {
    std::env::var("AINF_ARITY_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c >= 1)
        .unwrap_or(DEFAULT_ARITY_CAP)
}
