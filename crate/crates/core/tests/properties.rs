mod support;

use ainfty::cone_calc::{classify_index, compose_ts, fredholm_index, MorseIndexProfile, TSMorphism};
use ainfty::f2::{cone_of_chain_map, induced_on_homology, BitMatrix, BitVec};
use ainfty::gen;
use ainfty::io::{canonicalize, random_input, RANDOM_KINDS};
use ainfty::k_theory::{quotient_rank, GroupPresentation};
use proptest::prelude::*;
use rand::Rng;
use support::oracle;

fn matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
            let rows = (0..r).map(|i| BitVec::from_bools(&bits[i * c..(i + 1) * c])).collect();
            BitMatrix::from_rows(rows, c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity(m in matrix(9)) {
        let r = m.rank();
        prop_assert_eq!(r, oracle::bm_rank(&m));
        prop_assert_eq!(r + m.kernel().len(), m.cols());
        prop_assert_eq!(m.transpose().rank(), r);
        for v in m.kernel() {
            prop_assert!(m.mul_vec(&v).is_zero());
        }
    }

    #[test]
    fn solve_finds_preimages(m in matrix(7), seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let x = gen::random_vec(&mut rng, m.cols());
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn kron_mixed_product(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let dims: Vec<usize> = (0..6).map(|_| rng.gen_range(1..=3)).collect();
        let a = gen::random_matrix(&mut rng, dims[0], dims[1]);
        let c = gen::random_matrix(&mut rng, dims[1], dims[2]);
        let b = gen::random_matrix(&mut rng, dims[3], dims[4]);
        let d = gen::random_matrix(&mut rng, dims[4], dims[5]);
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn homology_splitting(seed in any::<u64>(), n in 0usize..7) {
        let mut rng = gen::rng(seed);
        let c = gen::random_complex(&mut rng, n);
        let h = c.homology();
        prop_assert_eq!(h.rank, oracle::homology_rank(c.d()));
        // p ι = id and ι p + d h + h d = id
        let i = h.inclusion();
        prop_assert_eq!(h.projection().mul(&i), BitMatrix::identity(h.rank));
        let lhs = i.mul(h.projection()).add(&c.d().mul(h.homotopy())).add(&h.homotopy().mul(c.d()));
        prop_assert_eq!(lhs, BitMatrix::identity(n));
    }

    #[test]
    fn cone_rank_law(seed in any::<u64>(), nx in 0usize..5, ny in 0usize..5) {
        let mut rng = gen::rng(seed);
        let x = gen::random_complex(&mut rng, nx);
        let y = gen::random_complex(&mut rng, ny);
        let f = gen::random_chain_map(&mut rng, &x, &y);
        let c = cone_of_chain_map(&f).unwrap();
        let r = oracle::induced_rank(x.d(), y.d(), &f.f);
        prop_assert_eq!(oracle::bm_rank(&induced_on_homology(&f).unwrap()), r);
        prop_assert_eq!(c.complex.homology().rank + 2 * r, x.homology().rank + y.homology().rank);
    }

    #[test]
    fn quotient_rank_is_monotone(n in 1usize..8, seed in any::<u64>(), count in 0usize..6) {
        let mut rng = gen::rng(seed);
        let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let mut p = GroupPresentation::free(names);
        let mut last = quotient_rank(&p);
        prop_assert_eq!(last, n);
        for _ in 0..count {
            p.add_relation(gen::random_vec(&mut rng, n)).unwrap();
            let now = quotient_rank(&p);
            prop_assert!(now <= last && now + 1 >= last);
            last = now;
        }
        p.add_generator("extra");
        prop_assert_eq!(quotient_rank(&p), last + 1);
    }

    #[test]
    fn index_matches_formula(entries in prop::collection::vec(0u8..=1, 1..9), exit in 0u8..=1) {
        let p = MorseIndexProfile::new(entries.clone(), exit).unwrap();
        let ind = fredholm_index(&p);
        prop_assert_eq!(ind, oracle::index(&entries, exit));
        prop_assert_eq!(classify_index(&p).index_sign(), ind.signum());
    }

    #[test]
    fn ts_identity_is_a_unit(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let n = rng.gen_range(0..=3);
        let x = gen::random_complex(&mut rng, n);
        let p = gen::random_ts_from(&mut rng, &[x], 3, 2);
        prop_assert_eq!(compose_ts(&TSMorphism::identity(&p.target()), &p).unwrap(), p.clone());
        prop_assert_eq!(compose_ts(&p, &TSMorphism::identity(&p.source())).unwrap(), p);
    }

    #[test]
    fn canonical_form_is_a_fixed_point(kind in prop::sample::select(RANDOM_KINDS), seed in 0u64..10_000) {
        let text = random_input(kind, seed).unwrap();
        let once = canonicalize(&text).unwrap();
        prop_assert_eq!(&once, &text);
        prop_assert_eq!(canonicalize(&once).unwrap(), once);
    }
}
