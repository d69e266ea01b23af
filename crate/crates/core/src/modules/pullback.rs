//! Pullback of modules and module morphisms along A∞-functors.

use std::sync::Arc;

use super::module::{AInfModule, ModuleMorphism};
use super::ModuleError;
use crate::ainf::{check_functor, compose_mixed_circle, AInfCategory, ExtendedMap};

/// `φ*M` over the source category `A'` of `φ : A' → A`:
/// `(φ*M)(X) = M(φ X)` and
/// `μ(a_1,…,a_k, b) = Σ μ^M(φ(a_1…a_{i_1}), …, φ(…a_k), b)`.
pub fn pullback(phi: &ExtendedMap, source: &Arc<AInfCategory>, m: &AInfModule) -> Result<AInfModule, ModuleError> {
    if phi.source() != source.hom() || phi.target() != m.base().hom() {
        return Err(ModuleError::Shape("functor does not go from the given category to the module's base".into()));
    }
    if !check_functor(phi, source, m.base()).passed() {
        return Err(ModuleError::NotFunctor);
    }
    pullback_unchecked(phi, source, m)
}

pub(crate) fn pullback_unchecked(phi: &ExtendedMap, source: &Arc<AInfCategory>, m: &AInfModule) -> Result<AInfModule, ModuleError> {
    let action = compose_mixed_circle(m.action(), phi)?;
    AInfModule::new(source.clone(), action)
}

/// `φ*ν : φ*M' → φ*M''`.
pub fn pullback_morphism(phi: &ExtendedMap, source: &Arc<AInfCategory>, nu: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
    let s = pullback(phi, source, &nu.source)?;
    let t = pullback_unchecked(phi, source, &nu.target)?;
    let map = compose_mixed_circle(&nu.nu, phi)?;
    ModuleMorphism::new(s, t, map)
}
