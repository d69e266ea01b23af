// Yoneda modules, module morphisms, their cones and an exact triangle.

use std::sync::Arc;

use ainfty::ainf::{hom_vector, AInfCategory};
use ainfty::f2::{cone_of_chain_map, BitMatrix, ChainComplex, ChainMap};
use ainfty::modules::{
    check_module, check_module_morphism, cone, verify_exact_triangle, yoneda_module, yoneda_morphism, yoneda_probe,
    ExactTriangleCertificate, ModuleMorphism,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // X --g--> Y with Z = Cone(g), as objects of one dg-category
    let x = ChainComplex::trivial(1);
    let y = ChainComplex::trivial(1);
    let g = ChainMap::new(x.clone(), y.clone(), BitMatrix::from_strs(&["1"]))?;
    let z = cone_of_chain_map(&g)?.complex;
    let a = Arc::new(AInfCategory::dg_of_complexes(vec!["X".into(), "Y".into(), "Z".into()], &[x, y, z], 4)?);

    let yz = yoneda_module(&a, 2);
    assert!(check_module(&yz).passed());

    let yg = yoneda_morphism(&a, &[0, 1], &[hom_vector(&g.f)])?;
    assert!(check_module_morphism(&yg).passed());
    let c = cone(&yg)?;
    println!("Cone(Y(g)) has dims {:?}; Y(Z) has dims {:?}", c.module.dims(), yz.dims());
    assert_eq!(c.module.action(), yz.action());

    let cert = ExactTriangleCertificate {
        nu: yg,
        j: c.inclusion.clone(),
        p: c.projection.clone(),
        witness: Some(ModuleMorphism::identity(&c.module)),
    };
    let r = verify_exact_triangle(&cert)?;
    println!("{r}");
    assert!(r.passed());

    let (probe, outcomes) = yoneda_probe(&a)?;
    println!("yoneda probe: {} ({} classes)", probe.status, outcomes.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
