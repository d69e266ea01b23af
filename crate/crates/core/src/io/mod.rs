//! Text format for all domain objects, canonical form, and the command
//! runner behind the `ainfty` binary.
//!
//! ```text
//! complex C dim 2
//! d 00
//! d 10
//! ```
//!
//! Each `d` line is the image of one basis vector, so this is `d(e₂) = e₁`.

mod cli;
mod document;
mod syntax;
mod write;

use thiserror::Error;

pub use cli::{random_input, run, run_document, Command, Flags, Outcome, RANDOM_KINDS};
pub use document::{parse, parse_bytes, parse_with_cap, Document, Item, MAX_DIM};
pub use syntax::{Line, Section, KINDS};
pub use write::{category_section, complex_section, datum_section, decomp_section, render, ts_sections, ComplexNames};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}: dimension error: {message}")]
    Dimension { line: usize, message: String },
}

/// Canonical text of `text`, or the first parse error.
pub fn canonicalize(text: &str) -> Result<String, ParseError> {
    Ok(parse(text)?.canonical())
}
