//! Chain-level towers of cones, and their realization as cobordism data in
//! the dg-category of complexes.
//!
//! A tower is `Z_1 = L_1`, `Z_j = Cone(g_j : L_j → Z_{j−1})` together with a
//! quasi-isomorphism `h : L → Z_m`. In the dg-category the modules
//! `Cone(𝒴 g_j)` are literally `Hom(−, Z_j)`, and postcomposition with `g_j`
//! and `h` gives the connecting morphisms and the end comparison.

use std::sync::Arc;

use rand::Rng;

use super::datum::CobordismDatum;
use super::CobordismError;
use crate::ainf::{AInfCategory, MixedExtendedMap, Multilinear};
use crate::cone_calc::{ConeDecomposition, Summand};
use crate::f2::{cone_of_chain_map, is_quasi_iso, BitMatrix, ChainComplex, ChainMap};
use crate::gen::{self, Rng8};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    pub positive: ChainComplex,
    pub ends: Vec<ChainComplex>,
    /// `g_j : L_j → Z_{j−1}` for `j = 2..m`.
    pub attaching: Vec<BitMatrix>,
    /// `h : L → Z_m`.
    pub comparison: BitMatrix,
}

impl Tower {
    /// `Z_1, …, Z_m`.
    pub fn stages(&self) -> Result<Vec<ChainComplex>, CobordismError> {
        let mut out = vec![self.ends[0].clone()];
        for (j, g) in self.attaching.iter().enumerate() {
            let u = ChainMap::new(self.ends[j + 1].clone(), out[j].clone(), g.clone())?;
            out.push(cone_of_chain_map(&u)?.complex);
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<(), CobordismError> {
        if self.ends.is_empty() || self.attaching.len() + 1 != self.ends.len() {
            return Err(CobordismError::InvalidDatum("a tower needs m ends and m − 1 attaching maps".into()));
        }
        let top = self.stages()?.pop().unwrap();
        let h = ChainMap::new(self.positive.clone(), top, self.comparison.clone())?;
        if !is_quasi_iso(&h)? {
            return Err(CobordismError::NotQuasiIso("comparison".into()));
        }
        Ok(())
    }

    /// The chain-level summand `L → (L_1, …, L_m)`.
    pub fn to_summand(&self) -> Result<Summand, CobordismError> {
        let mut pieces = vec![(self.ends[0].clone(), BitMatrix::zeros(0, self.ends[0].dim()))];
        for (j, g) in self.attaching.iter().enumerate() {
            pieces.push((self.ends[j + 1].clone(), g.clone()));
        }
        let eta = ConeDecomposition::strict(pieces)?;
        let phi = ChainMap::new(self.positive.clone(), eta.top().clone(), self.comparison.clone())?;
        Ok(Summand::new(phi, eta)?)
    }

    /// Reads a tower back from a strict summand.
    pub fn from_summand(s: &Summand) -> Result<Tower, CobordismError> {
        if !s.decomposition.is_strict() {
            return Err(CobordismError::InvalidDatum("summand decomposition is not strict".into()));
        }
        let tris = s.decomposition.triangles();
        Ok(Tower {
            positive: s.phi.source.clone(),
            ends: tris.iter().map(|t| t.x().clone()).collect(),
            attaching: tris[1..].iter().map(|t| t.u.f.clone()).collect(),
            comparison: s.phi.f.clone(),
        })
    }

    /// The identity tower `L → (L)`.
    pub fn identity(l: &ChainComplex) -> Tower {
        Tower { positive: l.clone(), ends: vec![l.clone()], attaching: vec![], comparison: BitMatrix::identity(l.dim()) }
    }

    /// Random ends of dimension `≤ max_dim`, random attaching maps, and a
    /// positive end with at most two extra canceling pairs.
    pub fn random(rng: &mut Rng8, m: usize, max_dim: usize) -> Tower {
        let (ends, attaching, top) = random_stages(rng, m, max_dim, false);
        let rank = top.homology().rank;
        let extra = rng.gen_range(0..=1);
        let positive = gen::random_complex_with_homology(rng, rank, extra);
        let comparison = gen::quasi_iso_between(rng, &positive, &top).expect("equal ranks").f;
        Tower { positive, ends, attaching, comparison }
    }

    /// A random tower whose top `Z_m` is acyclic, with the zero complex as
    /// positive end. Needs `m ≥ 2`.
    pub fn random_null(rng: &mut Rng8, m: usize, max_dim: usize) -> Tower {
        let (ends, attaching, top) = random_stages(rng, m.max(2), max_dim, true);
        debug_assert!(top.is_acyclic());
        Tower { positive: ChainComplex::zero(), comparison: BitMatrix::zeros(top.dim(), 0), ends, attaching }
    }
}

fn random_stages(rng: &mut Rng8, m: usize, max_dim: usize, null: bool) -> (Vec<ChainComplex>, Vec<BitMatrix>, ChainComplex) {
    let n0 = rng.gen_range(0..=max_dim);
    let first = gen::random_complex(rng, n0);
    let mut ends = vec![first.clone()];
    let mut attaching = Vec::new();
    let mut z = first;
    for j in 2..=m {
        let (l, g) = if null && j == m {
            // a quasi-isomorphism onto Z_{m−1} makes the last cone acyclic
            let rank = z.homology().rank;
            let l = gen::random_complex_with_homology(rng, rank, 0);
            let g = gen::quasi_iso_between(rng, &l, &z).expect("equal ranks");
            (l, g)
        } else {
            let n = rng.gen_range(0..=max_dim);
            let l = gen::random_complex(rng, n);
            let g = gen::random_chain_map(rng, &l, &z);
            (l, g)
        };
        z = cone_of_chain_map(&g).expect("chain map").complex;
        ends.push(l);
        attaching.push(g.f);
    }
    (ends, attaching, z)
}

/// `b ↦ g ∘ b` from `Hom(N, X)` to `Hom(N, Z)` at every object `N`.
fn postcomposition(a: &AInfCategory, dims: &[usize], x: usize, g: &BitMatrix) -> MixedExtendedMap {
    let input: Vec<usize> = (0..a.objects()).map(|n| a.dim(n, x)).collect();
    let output: Vec<usize> = dims.iter().map(|&dn| dn * g.rows()).collect();
    let mut map = MixedExtendedMap::zero(a.hom().clone(), input, output, a.arity_cap()).expect("sizes fit");
    for (n, &dn) in dims.iter().enumerate() {
        let m = g.kron(&BitMatrix::identity(dn));
        if m.rows() > 0 && m.cols() > 0 && !m.is_zero() {
            map.set_component(vec![n], Multilinear::from_matrix(&m)).expect("shape");
        }
    }
    map
}

/// Builds one dg-category containing the test objects and every end of
/// every tower (equal complexes share an object), and the datum of each
/// tower over it. Test objects come first, in order.
pub fn realize_towers(
    towers: &[Tower],
    test_objects: &[ChainComplex],
    arity_cap: usize,
) -> Result<(Arc<AInfCategory>, Vec<CobordismDatum>), CobordismError> {
    for t in towers {
        t.validate()?;
    }
    let mut complexes: Vec<ChainComplex> = Vec::new();
    let index_of = |c: &ChainComplex, complexes: &mut Vec<ChainComplex>| -> usize {
        match complexes.iter().position(|x| x == c) {
            Some(i) => i,
            None => {
                complexes.push(c.clone());
                complexes.len() - 1
            }
        }
    };
    let tests: Vec<usize> = test_objects.iter().map(|c| index_of(c, &mut complexes)).collect();
    let mut idx: Vec<(usize, Vec<usize>)> = Vec::new();
    for t in towers {
        let p = index_of(&t.positive, &mut complexes);
        let e = t.ends.iter().map(|c| index_of(c, &mut complexes)).collect();
        idx.push((p, e));
    }
    let names = (0..complexes.len()).map(|i| format!("K{i}")).collect();
    let a = Arc::new(AInfCategory::dg_of_complexes(names, &complexes, arity_cap)?);
    let dims: Vec<usize> = complexes.iter().map(ChainComplex::dim).collect();
    let mut data = Vec::with_capacity(towers.len());
    for (t, (p, ends)) in towers.iter().zip(idx) {
        let connecting = t.attaching.iter().enumerate().map(|(j, g)| postcomposition(&a, &dims, ends[j + 1], g)).collect();
        let comparison = postcomposition(&a, &dims, p, &t.comparison);
        data.push(CobordismDatum::new(a.clone(), p, ends, connecting, Some(comparison), tests.clone())?);
    }
    Ok((a, data))
}
