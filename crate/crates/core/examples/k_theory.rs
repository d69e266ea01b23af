// Presentations of K0: relations from exact triangles, the relation a cone
// decomposition contributes, and null-cobordant data.

use ainfty::cobordism::{realize_towers, Tower};
use ainfty::f2::ChainComplex;
use ainfty::gen;
use ainfty::k_theory::{k0_from_triangles, k0_of_datum, k0_of_decomposition, quotient_rank, theta_well_defined, verify_null_cobordism, GroupPresentation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k0 = k0_from_triangles(&["a", "b", "c"], &[["a", "b", "c"]])?;
    println!("K0 on a, b, c with one triangle has rank {}", k0.rank());

    let g = GroupPresentation::new(vec!["a".into(), "b".into(), "c".into()], vec![k0.presentation.vector(&["a", "b", "c"])?])?;
    assert_eq!(quotient_rank(&g), 2);
    assert!(theta_well_defined(&g, &k0, &[0, 1, 2])?.passed());

    let mut rng = gen::rng(2);
    let eta = gen::random_decomposition(&mut rng, 3, 2);
    let kd = k0_of_decomposition(&eta);
    let rel = kd.presentation.vector(&["Y4", "X1", "X2", "X3"])?;
    println!("[top] = X1 + X2 + X3 holds: {}", kd.presentation.is_relation(&rel));
    assert!(kd.presentation.is_relation(&rel));

    let tower = Tower::random_null(&mut rng, 3, 2);
    let (_, data) = realize_towers(&[tower], &[ChainComplex::trivial(1)], 4)?;
    let v = &data[0];
    let kv = k0_of_datum(v)?;
    let r = verify_null_cobordism(v, &kv)?;
    println!("{r}");
    assert!(r.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
