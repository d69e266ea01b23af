// Complexes over F2: homology, mapping cones and quasi-isomorphisms.

use ainfty::f2::{cone_of_chain_map, homotopy_inverse, induced_on_homology, is_quasi_iso, BitMatrix, BitVec, ChainComplex, ChainMap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // d(e2) = e1 on a two-dimensional space, plus a free generator e3
    let c = ChainComplex::from_images(&[BitVec::parse("000").unwrap(), BitVec::parse("100").unwrap(), BitVec::parse("000").unwrap()]).unwrap();
    let h = c.homology();
    println!("dim C = {}, dim H(C) = {}", c.dim(), h.rank);
    assert_eq!(h.rank, 1);

    // the inclusion of a point onto e3 is a quasi-isomorphism
    let point = ChainComplex::trivial(1);
    let f = ChainMap::new(point.clone(), c.clone(), BitMatrix::from_strs(&["0", "0", "1"]))?;
    println!("H(f) = {:?}", induced_on_homology(&f)?);
    assert!(is_quasi_iso(&f)?);

    let inv = homotopy_inverse(&f)?;
    let back = inv.inverse.compose(&f)?;
    assert_eq!(back, ChainMap::identity(&point));

    let cone = cone_of_chain_map(&f)?;
    println!("Cone(f) has dimension {} and is acyclic: {}", cone.complex.dim(), cone.complex.is_acyclic());
    assert!(cone.complex.is_acyclic());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
