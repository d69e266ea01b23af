// Morphisms between families of complexes, each summand mapping into the
// top of a cone decomposition, and their composition.

use ainfty::cone_calc::{compose_ts, project_ts, TSMorphism};
use ainfty::f2::induced_on_homology;
use ainfty::gen;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = gen::rng(11);
    let x = gen::random_complex(&mut rng, 2);
    let p = gen::random_ts_from(&mut rng, std::slice::from_ref(&x), 2, 2);
    let q = gen::random_ts_from(&mut rng, &p.target(), 2, 2);
    println!("P: 1 -> {} complexes, Q: {} -> {}", p.target().len(), q.source().len(), q.target().len());

    let qp = compose_ts(&q, &p)?;
    assert_eq!(qp.source(), p.source());
    assert_eq!(qp.target(), q.target());

    // the identity is a unit on both sides
    assert_eq!(compose_ts(&TSMorphism::identity(&p.target()), &p)?, p);
    assert_eq!(compose_ts(&p, &TSMorphism::identity(&p.source()))?, p);

    // with one source summand, projection is functorial on homology
    let lhs = induced_on_homology(&project_ts(&qp)?)?;
    let rhs = induced_on_homology(&project_ts(&q)?)?.mul(&induced_on_homology(&project_ts(&p)?)?);
    println!("H(proj(Q∘P)) = H(proj Q) H(proj P): {}", lhs == rhs);
    assert_eq!(lhs, rhs);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
