//! Modules over A∞-categories: action, morphisms, cones, pullbacks and the
//! Yoneda embedding.

mod cone;
mod module;
mod pullback;
mod triangle;
mod yoneda;

use thiserror::Error;

use crate::ainf::AinfError;
use crate::f2::ChainError;

pub use cone::{cone, ModuleCone};
pub use module::{check_module, check_module_morphism, compose_module_morphisms, AInfModule, ModuleMorphism};
pub use pullback::{pullback, pullback_morphism};
pub use triangle::{verify_exact_triangle, ExactTriangleCertificate};
pub use yoneda::{check_yoneda_functor, yoneda, yoneda_module, yoneda_morphism, yoneda_probe, ProbeOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a module morphism")]
    NotModuleMorphism,
    #[error("not an A∞-functor")]
    NotFunctor,
    #[error("exact triangle certificate has no comparison witness")]
    MissingWitness,
    #[error(transparent)]
    Ainf(#[from] AinfError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ainf::{identity_functor, AInfCategory};
    use crate::f2::{cone_of_chain_map, BitMatrix, BitVec, ChainComplex, ChainMap};

    // X --g--> Y and Z = Cone(g), all inside the dg-category of complexes.
    fn setup(g_bits: &[&str]) -> (Arc<AInfCategory>, BitVec) {
        let y = ChainComplex::from_images(&[BitVec::parse("00").unwrap(), BitVec::parse("10").unwrap()]).unwrap();
        setup_with(y, g_bits)
    }

    fn setup_with(y: ChainComplex, g_bits: &[&str]) -> (Arc<AInfCategory>, BitVec) {
        let x = ChainComplex::trivial(1);
        let g = ChainMap::new(x.clone(), y.clone(), BitMatrix::from_strs(g_bits)).unwrap();
        let z = cone_of_chain_map(&g).unwrap().complex;
        let a = AInfCategory::dg_of_complexes(vec!["X".into(), "Y".into(), "Z".into()], &[x, y, z], 4).unwrap();
        (Arc::new(a), crate::ainf::hom_vector(&g.f))
    }

    #[test]
    fn yoneda_modules_are_modules() {
        let (a, _) = setup(&["1", "0"]);
        for m in yoneda(&a) {
            assert!(check_module(&m).passed());
        }
    }

    #[test]
    fn yoneda_functor_relation_holds() {
        let (a, _) = setup(&["1", "0"]);
        let r = check_yoneda_functor(&a, 2);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn yoneda_probe_is_faithful_on_units() {
        let (a, _) = setup(&["1", "0"]);
        let (r, outcomes) = yoneda_probe(&a).unwrap();
        assert!(r.passed());
        assert!(!outcomes.is_empty());
    }

    #[test]
    fn cone_of_yoneda_is_yoneda_of_cone() {
        let (a, g) = setup(&["1", "0"]);
        let yg = yoneda_morphism(&a, &[0, 1], &[g]).unwrap();
        assert!(check_module_morphism(&yg).passed());
        let c = cone(&yg).unwrap();
        assert!(check_module(&c.module).passed());
        assert_eq!(c.module.action(), yoneda_module(&a, 2).action());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let (a, _) = setup(&["1", "0"]);
        let m = yoneda_module(&a, 1);
        let c = cone(&ModuleMorphism::identity(&m)).unwrap();
        assert!(c.module.is_acyclic().unwrap());
    }

    #[test]
    fn pullback_along_identity_is_trivial() {
        let (a, _) = setup(&["1", "0"]);
        let m = yoneda_module(&a, 2);
        let p = pullback(&identity_functor(&a), &a, &m).unwrap();
        assert_eq!(p.action(), m.action());
    }

    #[test]
    fn cone_triangle_is_exact() {
        let (a, g) = setup_with(ChainComplex::trivial(1), &["0"]);
        let yg = yoneda_morphism(&a, &[0, 1], &[g]).unwrap();
        let c = cone(&yg).unwrap();
        let cert = ExactTriangleCertificate {
            nu: yg.clone(),
            j: c.inclusion.clone(),
            p: c.projection.clone(),
            witness: Some(ModuleMorphism::identity(&c.module)),
        };
        assert!(verify_exact_triangle(&cert).unwrap().passed());
        let bad = ExactTriangleCertificate { j: ModuleMorphism::zero(&c.inclusion.source, &c.module), ..cert.clone() };
        assert!(!verify_exact_triangle(&bad).unwrap().passed());
        let none = ExactTriangleCertificate { witness: None, ..cert };
        assert_eq!(verify_exact_triangle(&none).unwrap_err(), ModuleError::MissingWitness);
    }

    #[test]
    fn non_morphism_has_no_cone() {
        let (a, _) = setup(&["1", "0"]);
        // e_1 ↦ e_2 in End(Y) is not a cycle
        let bad = yoneda_morphism(&a, &[1, 1], &[BitVec::parse("0010").unwrap()]).unwrap();
        assert!(!check_module_morphism(&bad).passed());
        assert_eq!(cone(&bad).unwrap_err(), ModuleError::NotModuleMorphism);
    }
}
