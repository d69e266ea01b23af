// A∞ functors: the identity, composition, and a functor read from text.

use ainfty::ainf::{check_functor, compose_functors, identity_functor, AInfCategory};
use ainfty::f2::ChainComplex;
use ainfty::gen;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = gen::rng(5);
    let cs: Vec<ChainComplex> = (0..2).map(|_| gen::random_complex(&mut rng, 2)).collect();
    let a = AInfCategory::dg_of_complexes(vec!["X".into(), "Y".into()], &cs, 3)?;

    let id = identity_functor(&a);
    assert!(check_functor(&id, &a, &a).passed());
    let twice = compose_functors(&id, &id)?;
    assert_eq!(twice, id);
    println!("identity functor on {} objects composes to itself", a.objects());

    let text = "category A\nobjects X\nhom X X 1\nmu 2 (X X X) (0 0) -> 1\n\
                functor F from A to A\nobject X -> X\nmap 1 (X X) (0) -> 1\n";
    let out = ainfty::io::run(ainfty::io::Command::CheckAinf, text.as_bytes(), &[], &Default::default());
    for r in &out.reports {
        println!("{}", r.render().trim_end());
    }
    assert_eq!(out.exit, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
