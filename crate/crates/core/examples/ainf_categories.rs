// The dg-category of a few complexes, its A∞ relation and its homology
// category, and what a corrupted composition looks like.

use ainfty::ainf::{check_a_infinity, homology_category, AInfCategory, ExtendedMap};
use ainfty::f2::{BitVec, ChainComplex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let acyclic = ChainComplex::from_images(&[BitVec::parse("00").unwrap(), BitVec::parse("10").unwrap()])?;
    let point = ChainComplex::trivial(1);
    let a = AInfCategory::dg_of_complexes(vec!["P".into(), "Q".into()], &[point, acyclic], 4)?;

    let r = check_a_infinity(&a);
    println!("{r}");
    assert!(r.passed());

    let hc = homology_category(&a)?;
    println!("rank H(P,P) = {}, rank H(Q,Q) = {}", hc.rank(0, 0), hc.rank(1, 1));
    assert!(hc.is_unital() && hc.is_associative());

    // flip one output bit of μ_2 at (P, P, P) and the relation breaks
    let mut mu: ExtendedMap = a.mu().clone();
    let v = mu.eval_basis(&[0, 0, 0], &[0, 0]);
    let mut flipped = v.clone();
    flipped.flip(0);
    mu.set_entry(&[0, 0, 0], &[0, 0], flipped)?;
    let bad = AInfCategory::new(mu)?;
    let r = check_a_infinity(&bad);
    println!("corrupted: {}", r.status);
    assert!(!r.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
