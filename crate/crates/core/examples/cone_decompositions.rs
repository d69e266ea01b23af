// Iterated cone decompositions of a complex and their linearizations.

use ainfty::cone_calc::{check_cone_decomposition, solve_equivalence, ConeDecomposition};
use ainfty::f2::{BitMatrix, ChainComplex};
use ainfty::gen;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // two points glued by the identity: an acyclic complex
    let pt = ChainComplex::trivial(1);
    let eta = ConeDecomposition::strict(vec![(pt.clone(), BitMatrix::zeros(0, 1)), (pt.clone(), BitMatrix::identity(1))])?;
    let r = check_cone_decomposition(&eta);
    println!("{r}");
    assert!(r.passed());
    println!("linearization has {} pieces; top dim {}; acyclic {}", eta.len(), eta.top().dim(), eta.top().is_acyclic());

    let mut rng = gen::rng(3);
    let random = gen::random_decomposition(&mut rng, 3, 2);
    assert!(check_cone_decomposition(&random).passed());
    let isos = solve_equivalence(&random, &random, None).expect("a decomposition is equivalent to itself");
    println!("self-equivalence found with {} stage isomorphisms", isos.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
