//! A∞-functors: extended maps with `F ⋆ μ^A = μ^B ∘ F`.

use super::category::{count_basis_tuples, fmt_basis, fmt_tuple, AInfCategory};
use super::extended::{compose_circle, compose_star, ExtendedMap};
use crate::report::Report;

/// Checks `F ⋆ μ^A = μ^B ∘ F` on every basis tuple.
pub fn check_functor(f: &ExtendedMap, a: &AInfCategory, b: &AInfCategory) -> Report {
    let mut report = Report::new("functor");
    if f.source() != a.hom() || f.target() != b.hom() {
        return Report::error("functor", "F does not map the hom collection of A to that of B");
    }
    let lhs = match compose_star(f, a.mu()) {
        Ok(m) => m,
        Err(e) => return Report::error("functor", e.to_string()),
    };
    let rhs = match compose_circle(b.mu(), f) {
        Ok(m) => m,
        Err(e) => return Report::error("functor", e.to_string()),
    };
    let max = lhs.effective_arity().max(rhs.effective_arity());
    report.tick(count_basis_tuples(a.hom(), max));
    let diff = lhs.add(&rhs).expect("both sides share collections");
    for (t, m) in diff.components() {
        for (idx, v) in m.table().iter().enumerate() {
            if !v.is_zero() {
                report.violation(
                    format!("F*mu+mu.F {} ({})", fmt_tuple(a.hom(), t), fmt_basis(&m.basis_of(idx))),
                    format!("-> {v}"),
                );
            }
        }
    }
    report
}

/// Identity functor of a category.
pub fn identity_functor(a: &AInfCategory) -> ExtendedMap {
    ExtendedMap::identity(a.hom(), a.arity_cap())
}

/// Composite functor `G ∘ F`.
pub fn compose_functors(g: &ExtendedMap, f: &ExtendedMap) -> Result<ExtendedMap, super::AinfError> {
    compose_circle(g, f)
}
