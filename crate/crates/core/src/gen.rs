//! Seeded random instances for property checks and the CLI `--seed` flag.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::ainf::AInfCategory;
use crate::cone_calc::{ConeDecomposition, Summand, TSMorphism};
use crate::f2::{BitMatrix, BitVec, ChainComplex, ChainMap};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut Rng8, len: usize) -> BitVec {
    let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
    BitVec::from_bools(&bits)
}

pub fn random_matrix(rng: &mut Rng8, rows: usize, cols: usize) -> BitMatrix {
    BitMatrix::from_rows((0..rows).map(|_| random_vec(rng, cols)).collect(), cols)
}

pub fn random_invertible(rng: &mut Rng8, n: usize) -> BitMatrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random differential on `F_2^dim`: a random number of canceling pairs,
/// conjugated by a random change of basis.
pub fn random_complex(rng: &mut Rng8, dim: usize) -> ChainComplex {
    let pairs = rng.gen_range(0..=dim / 2);
    let mut d = BitMatrix::zeros(dim, dim);
    for i in 0..pairs {
        d.set(2 * i, 2 * i + 1, true);
    }
    let p = random_invertible(rng, dim);
    let pinv = p.inverse().expect("invertible");
    ChainComplex::new(p.mul(&d).mul(&pinv)).expect("conjugate of a differential")
}

/// Basis of the space of chain maps `x → y`, as matrices.
pub fn chain_map_basis(x: &ChainComplex, y: &ChainComplex) -> Vec<BitMatrix> {
    let (n, m) = (x.dim(), y.dim());
    let unknowns = n * m;
    if unknowns == 0 {
        return Vec::new();
    }
    let columns: Vec<BitVec> = (0..unknowns)
        .map(|j| {
            let mut f = BitMatrix::zeros(m, n);
            f.set(j / n, j % n, true);
            let r = y.d().mul(&f).add(&f.mul(x.d()));
            let bits: Vec<bool> = (0..m * n).map(|i| r.get(i / n, i % n)).collect();
            BitVec::from_bools(&bits)
        })
        .collect();
    BitMatrix::from_columns(&columns, m * n)
        .kernel()
        .into_iter()
        .map(|v| {
            let mut f = BitMatrix::zeros(m, n);
            for i in v.ones() {
                f.set(i / n, i % n, true);
            }
            f
        })
        .collect()
}

pub fn random_chain_map(rng: &mut Rng8, x: &ChainComplex, y: &ChainComplex) -> ChainMap {
    let mut f = BitMatrix::zeros(y.dim(), x.dim());
    for b in chain_map_basis(x, y) {
        if rng.gen() {
            f.add_assign(&b);
        }
    }
    ChainMap { source: x.clone(), target: y.clone(), f }
}

/// A quasi-isomorphism `x → y` where both have homology of the same rank:
/// `ι_y M p_x` with `M` random invertible.
pub fn quasi_iso_between(rng: &mut Rng8, x: &ChainComplex, y: &ChainComplex) -> Option<ChainMap> {
    let hx = x.homology();
    let hy = y.homology();
    if hx.rank != hy.rank {
        return None;
    }
    let m = random_invertible(rng, hx.rank);
    let f = hy.inclusion().mul(&m).mul(hx.projection());
    Some(ChainMap { source: x.clone(), target: y.clone(), f })
}

/// A random strict decomposition with `len` pieces of dimension `≤ max_dim`.
pub fn random_decomposition(rng: &mut Rng8, len: usize, max_dim: usize) -> ConeDecomposition {
    let mut pieces = Vec::with_capacity(len);
    let mut y = ChainComplex::zero();
    for _ in 0..len {
        let n = rng.gen_range(0..=max_dim);
        let x = random_complex(rng, n);
        let u = random_chain_map(rng, &x, &y);
        y = crate::f2::cone_of_chain_map(&u).expect("chain map").complex;
        pieces.push((x, u.f));
    }
    ConeDecomposition::strict(pieces).expect("random pieces are chain maps")
}

/// A summand with source `x`: a random decomposition of a complex with the
/// homology rank of `x`, reached by a random quasi-isomorphism.
pub fn random_summand(rng: &mut Rng8, x: &ChainComplex, max_len: usize, max_dim: usize) -> Summand {
    for _ in 0..64 {
        let len = rng.gen_range(1..=max_len.max(1));
        let eta = random_decomposition(rng, len, max_dim);
        if let Some(phi) = quasi_iso_between(rng, x, eta.top()) {
            return Summand::new(phi, eta).expect("quasi-iso into the top");
        }
    }
    let phi = quasi_iso_between(rng, x, x).expect("same complex");
    Summand::new(phi, ConeDecomposition::trivial(x)).expect("quasi-iso")
}

/// A morphism out of `family`, one random summand per entry.
pub fn random_ts_from(rng: &mut Rng8, family: &[ChainComplex], max_len: usize, max_dim: usize) -> TSMorphism {
    TSMorphism::new(family.iter().map(|x| random_summand(rng, x, max_len, max_dim)).collect())
}

/// A dg-category of random complexes of dimension `≤ max_dim`.
pub fn random_dg_category(rng: &mut Rng8, objects: usize, max_dim: usize, cap: usize) -> AInfCategory {
    let names: Vec<String> = (0..objects).map(|i| format!("X{i}")).collect();
    let cs: Vec<ChainComplex> = (0..objects)
        .map(|_| {
            let n = rng.gen_range(0..=max_dim);
            random_complex(rng, n)
        })
        .collect();
    AInfCategory::dg_of_complexes(names, &cs, cap).expect("distinct names")
}

/// A complex with homology of the given rank and `extra` canceling pairs,
/// in a random basis.
pub fn random_complex_with_homology(rng: &mut Rng8, rank: usize, extra: usize) -> ChainComplex {
    let dim = rank + 2 * extra;
    let mut d = BitMatrix::zeros(dim, dim);
    for i in 0..extra {
        d.set(2 * i, 2 * i + 1, true);
    }
    let p = random_invertible(rng, dim);
    let pinv = p.inverse().expect("invertible");
    ChainComplex::new(p.mul(&d).mul(&pinv)).expect("conjugate of a differential")
}
