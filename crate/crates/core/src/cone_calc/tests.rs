use super::*;
use crate::f2::{induced_on_homology, BitMatrix, BitVec, ChainComplex, ChainMap};
use crate::gen;

fn acyclic2() -> ChainComplex {
    ChainComplex::from_images(&[BitVec::parse("00").unwrap(), BitVec::parse("10").unwrap()]).unwrap()
}

#[test]
fn trivial_decomposition_passes() {
    let a = acyclic2();
    let eta = ConeDecomposition::trivial(&a);
    assert!(check_cone_decomposition(&eta).passed());
    assert_eq!(eta.linearization(), vec![a.clone()]);
    assert_eq!(eta.top(), &a);
}

#[test]
fn two_step_cone_decomposition() {
    let x1 = ChainComplex::trivial(1);
    let x2 = ChainComplex::trivial(1);
    let eta = ConeDecomposition::strict(vec![(x1.clone(), BitMatrix::zeros(0, 1)), (x2.clone(), BitMatrix::from_strs(&["1"]))]).unwrap();
    assert!(check_cone_decomposition(&eta).passed());
    assert_eq!(eta.linearization(), vec![x1, x2]);
    assert!(eta.top().is_acyclic());
}

#[test]
fn nonzero_start_fails() {
    let x = ChainComplex::trivial(1);
    let u = ChainMap::zero(&x, &x);
    let eta = ConeDecomposition::new(vec![ChainTriangle::strict(u)]).unwrap();
    let r = check_cone_decomposition(&eta);
    assert!(!r.passed());
    assert_eq!(eta.validate(), Err(ConeError::NonzeroStart));
}

#[test]
fn broken_chain_fails() {
    let x = ChainComplex::trivial(1);
    let t1 = ChainTriangle::strict(ChainMap::zero(&x, &ChainComplex::zero()));
    let t2 = ChainTriangle::strict(ChainMap::zero(&x, &ChainComplex::trivial(2)));
    let eta = ConeDecomposition::new(vec![t1, t2]).unwrap();
    assert_eq!(eta.validate(), Err(ConeError::BrokenChain(1)));
}

#[test]
fn bad_witness_is_a_triangle_failure() {
    let x = ChainComplex::trivial(1);
    let mut t = ChainTriangle::strict(ChainMap::zero(&x, &ChainComplex::zero()));
    t.witness = Some(ChainMap::zero(t.z(), t.z()));
    let eta = ConeDecomposition::new(vec![t]).unwrap();
    assert!(matches!(eta.validate(), Err(ConeError::TriangleFailure(1, _))));
}

#[test]
fn unit_laws_are_exact() {
    let mut rng = gen::rng(7);
    for _ in 0..30 {
        let x = gen::random_complex(&mut rng, 2);
        let phi = gen::random_ts_from(&mut rng, std::slice::from_ref(&x), 3, 2);
        let left = compose_ts(&TSMorphism::identity(&phi.target()), &phi).unwrap();
        let right = compose_ts(&phi, &TSMorphism::identity(&[x])).unwrap();
        assert_eq!(left, phi);
        assert_eq!(right, phi);
    }
}

#[test]
fn composite_has_the_inner_linearization() {
    let mut rng = gen::rng(11);
    for _ in 0..20 {
        let x = gen::random_complex(&mut rng, 2);
        let outer = gen::random_ts_from(&mut rng, &[x], 1, 2);
        let inner = gen::random_ts_from(&mut rng, &outer.target(), 2, 2);
        let c = compose_ts(&inner, &outer).unwrap();
        assert_eq!(c.target(), inner.target());
        for s in c.summands() {
            assert!(check_cone_decomposition(&s.decomposition).passed());
        }
    }
}

#[test]
fn mismatched_families_are_rejected() {
    let a = TSMorphism::identity(&[ChainComplex::trivial(1)]);
    let b = TSMorphism::identity(&[ChainComplex::trivial(2)]);
    assert!(matches!(compose_ts(&a, &b), Err(ConeError::TupleMismatch(_))));
}

#[test]
fn projection_of_identity_and_lift() {
    let a = acyclic2();
    assert_eq!(project_ts(&TSMorphism::identity(std::slice::from_ref(&a))).unwrap(), ChainMap::identity(&a));
    let y = ChainComplex::trivial(1);
    let phi = ChainMap::new(y.clone(), y.clone(), BitMatrix::identity(1)).unwrap();
    assert_eq!(project_ts(&TSMorphism::lift(&phi).unwrap()).unwrap(), phi);
    assert_eq!(project_ts(&TSMorphism::empty()), Err(ConeError::Empty));
}

#[test]
fn projection_is_functorial_on_homology() {
    let mut rng = gen::rng(3);
    for _ in 0..50 {
        let x = gen::random_complex(&mut rng, 2);
        let f1 = gen::random_ts_from(&mut rng, &[x], 3, 2);
        let f2 = gen::random_ts_from(&mut rng, &f1.target(), 3, 2);
        let c = compose_ts(&f2, &f1).unwrap();
        let lhs = induced_on_homology(&project_ts(&c).unwrap()).unwrap();
        let p2 = project_ts(&f2).unwrap();
        let p1 = project_ts(&f1).unwrap();
        let rhs = induced_on_homology(&p2).unwrap().mul(&induced_on_homology(&p1).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn associativity_up_to_equivalence() {
    let mut rng = gen::rng(5);
    for _ in 0..20 {
        let x = gen::random_complex(&mut rng, 2);
        let f1 = gen::random_ts_from(&mut rng, &[x], 2, 2);
        let f2 = gen::random_ts_from(&mut rng, &f1.target(), 2, 2);
        let f3 = gen::random_ts_from(&mut rng, &f2.target(), 2, 2);
        let a = compose_ts(&compose_ts(&f3, &f2).unwrap(), &f1).unwrap();
        let b = compose_ts(&f3, &compose_ts(&f2, &f1).unwrap()).unwrap();
        let r = check_ts_equivalence(&a, &b, None);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn equivalence_with_self_and_permutation() {
    let mut rng = gen::rng(9);
    let eta = gen::random_decomposition(&mut rng, 3, 2);
    let ids: Vec<ChainMap> = (1..=4).map(|i| ChainMap::identity(eta.stage(i))).collect();
    assert!(check_equivalence(&eta, &eta, &ids).unwrap());
    assert_eq!(check_equivalence(&eta, &eta, &ids[..2]), Err(ConeError::LengthMismatch));
    let other = gen::random_decomposition(&mut rng, 3, 2);
    if other.linearization() != eta.linearization() {
        let ids2: Vec<ChainMap> = (1..=4).map(|i| ChainMap::identity(other.stage(i))).collect();
        assert!(!check_equivalence(&eta, &other, &ids2).unwrap());
    }
}

#[test]
fn strictify_transports_along_the_witness() {
    // a single triangle whose vertex is a permuted copy of the cone
    let x = ChainComplex::trivial(1);
    let y = acyclic2();
    let u = ChainMap::new(x.clone(), y.clone(), BitMatrix::from_strs(&["0", "0"])).unwrap();
    let strict = ChainTriangle::strict(u.clone());
    let perm = BitMatrix::from_strs(&["001", "100", "010"]);
    let pinv = perm.inverse().unwrap();
    let z = ChainComplex::new(pinv.mul(strict.z().d()).mul(&perm)).unwrap();
    let v = ChainMap::new(y.clone(), z.clone(), pinv.mul(&strict.v.f)).unwrap();
    let w = ChainMap::new(z.clone(), x.clone(), strict.w.f.mul(&perm)).unwrap();
    let t = ChainMap::new(z.clone(), strict.z().clone(), perm.clone()).unwrap();
    let base = ConeDecomposition::strict(vec![(y.clone(), BitMatrix::zeros(0, 2))]).unwrap();
    let mut tris = base.triangles().to_vec();
    tris.push(ChainTriangle::new(u, v, w, Some(t)).unwrap());
    let eta = ConeDecomposition::new(tris).unwrap();
    assert!(!eta.is_strict());
    assert!(check_cone_decomposition(&eta).passed());
    let (s, map) = eta.strictify().unwrap();
    assert!(s.is_strict());
    assert_eq!(s.linearization(), eta.linearization());
    let mut isos: Vec<ChainMap> = (1..=2).map(|i| ChainMap::identity(eta.stage(i))).collect();
    isos.push(map);
    assert!(check_equivalence(&eta, &s, &isos).unwrap());
}

#[test]
fn sum_with_empty_is_neutral() {
    let mut rng = gen::rng(1);
    let x = gen::random_complex(&mut rng, 2);
    let phi = gen::random_ts_from(&mut rng, &[x.clone(), x], 2, 2);
    assert_eq!(sum_ts(&phi, &TSMorphism::empty()), phi);
    assert_eq!(sum_ts(&TSMorphism::empty(), &phi), phi);
    let a = ChainComplex::trivial(1);
    let b = acyclic2();
    assert_eq!(
        sum_ts(&TSMorphism::identity(std::slice::from_ref(&a)), &TSMorphism::identity(std::slice::from_ref(&b))),
        TSMorphism::identity(&[a, b])
    );
}

#[test]
fn multi_summand_composition_keeps_blocks() {
    let mut rng = gen::rng(21);
    for _ in 0..10 {
        let xs = vec![gen::random_complex(&mut rng, 2), gen::random_complex(&mut rng, 2)];
        let f1 = gen::random_ts_from(&mut rng, &xs, 2, 2);
        let f2 = gen::random_ts_from(&mut rng, &f1.target(), 2, 1);
        let c = compose_ts(&f2, &f1).unwrap();
        assert_eq!(c.source(), xs);
        assert_eq!(c.target(), f2.target());
    }
}
