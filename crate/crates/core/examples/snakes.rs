// Snake complexes and the snake category: the projections `c_1` and `c_3`
// agree on homology and are homotopic as functors.

use std::sync::Arc;

use ainfty::ainf::{check_a_infinity, check_homotopic, AInfCategory};
use ainfty::cobordism::{build_snake, snake_inclusion, snake_projection, SnakeCategory};
use ainfty::f2::{induced_on_homology, BitVec, ChainComplex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = ChainComplex::from_images(&[BitVec::parse("000").unwrap(), BitVec::parse("100").unwrap(), BitVec::parse("000").unwrap()])?;
    for l in [3, 5, 7] {
        let s = build_snake(&base, l)?;
        let e = snake_inclusion(&s);
        let h1 = induced_on_homology(&snake_projection(&s, 1)?)?;
        let hl = induced_on_homology(&snake_projection(&s, l)?)?;
        println!("l = {l}: dim {} with homology of rank {}", s.total.dim(), s.total.homology().rank);
        assert_eq!(h1, hl);
        assert_eq!(snake_projection(&s, 1)?.compose(&e)?.f, ainfty::f2::BitMatrix::identity(base.dim()));
    }

    let a = Arc::new(AInfCategory::dg_of_complexes(vec!["P".into()], &[ChainComplex::trivial(1)], 4)?);
    let sc = SnakeCategory::new(a, 3)?;
    assert!(check_a_infinity(&sc.total).passed());
    let (c1, c3, t) = (sc.projection(1)?, sc.projection(3)?, sc.homotopy(1)?);
    let ok = check_homotopic(&sc.total, &sc.base, &c1, &c3, &t)?;
    println!("c1 and c3 homotopic: {ok}");
    assert!(ok);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
