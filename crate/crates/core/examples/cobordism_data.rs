// A datum of iterated cones of Yoneda modules, realized from a chain-level
// tower, and the cone decomposition it assembles at a test object.

use ainfty::cobordism::{assemble_functor_value, build_iterated_cones, check_filtration, realize_towers, Tower};
use ainfty::cone_calc::check_cone_decomposition;
use ainfty::f2::ChainComplex;
use ainfty::gen;
use ainfty::modules::verify_exact_triangle;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = gen::rng(23);
    let tower = Tower::random(&mut rng, 3, 2);
    let (a, data) = realize_towers(&[tower], &[ChainComplex::trivial(1)], 4)?;
    let v = &data[0];
    println!("category with {} objects; datum with m = {}", a.objects(), v.m());

    let built = build_iterated_cones(v)?;
    for (j, tri) in built.triangles.iter().enumerate() {
        let r = verify_exact_triangle(tri)?;
        println!("triangle {}: {}", j + 2, r.status);
        assert!(r.passed());
    }
    assert!(check_filtration(v, &built, 3)?.passed());

    let phi = assemble_functor_value(v, v.test_objects[0])?;
    let eta = &phi.summands()[0].decomposition;
    println!("assembled decomposition has {} pieces", eta.linearization().len());
    assert!(check_cone_decomposition(eta).passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
