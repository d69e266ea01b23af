//! Linear algebra and chain complexes over the two-element field.

pub mod bits;
pub mod chain;

pub use bits::{in_span, rank, span_rank, BitMatrix, BitVec, Echelon};
pub use chain::{
    cone_of_chain_map, homotopic, homotopy_between, homotopy_inverse, induced_on_homology, is_homotopy,
    is_quasi_iso, null_homotopy, ChainComplex, ChainError, ChainMap, Cone, Homology, HomotopyInverse,
};
