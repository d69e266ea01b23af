//! Symbolic homological algebra over the two-element field.
//!
//! The crate covers ungraded chain complexes, A∞-categories and their modules,
//! mapping cones and exact triangles, iterated cone decompositions and their
//! composition, a combinatorial chain-level model of cobordism-induced cone
//! decompositions, and the Grothendieck-group bookkeeping that follows from it.
//!
//! ```
//! use ainfty::f2::{BitVec, ChainComplex};
//!
//! let c = ChainComplex::from_images(&[BitVec::parse("00").unwrap(), BitVec::parse("10").unwrap()]).unwrap();
//! assert_eq!(c.homology().rank, 0);
//! ```

pub mod ainf;
pub mod cobordism;
pub mod cone_calc;
pub mod f2;
pub mod gen;
pub mod io;
pub mod k_theory;
pub mod modules;
pub mod report;

pub use report::{Report, Status};
