//! The snake category `A ⊗ R_l`: hom spaces are snake complexes of the hom
//! spaces of `A`, and higher products are those of `A` tensored with the
//! path algebra `R_l` on `o_1, …, o_l`.

use std::sync::Arc;

use super::snake::snake_matrix;
use super::CobordismError;
use crate::ainf::{AInfCategory, ExtendedMap, HomCollection, Multilinear, PreNaturalTransformation, pair_collection};
use crate::f2::BitVec;

/// Product in `R_l`: `o_s o_s = o_s` for odd `s`, `o_{e−1} o_e = o_e` and
/// `o_e o_{e+1} = o_e` for even `e`, all others zero.
pub fn path_product(a: usize, b: usize) -> Option<usize> {
    if a == b && a % 2 == 1 {
        Some(a)
    } else if a % 2 == 1 && b == a + 1 {
        Some(b)
    } else if a.is_multiple_of(2) && b == a + 1 {
        Some(a)
    } else {
        None
    }
}

fn product_of(js: &[usize]) -> Option<usize> {
    let mut acc = js[0];
    for &j in &js[1..] {
        acc = path_product(acc, j)?;
    }
    Some(acc)
}

/// Splits a snake basis index into `(j, b)` with `j` one-based.
fn split(idx: usize, dim: usize) -> (usize, usize) {
    (idx / dim + 1, idx % dim)
}

/// `A ⊗ R_l` with `μ̄_1` the snake differential of `μ_1` and
/// `μ̄_k = μ_k ⊗ (path product)` for `k ≥ 2`.
pub fn snake_category(a: &AInfCategory, l: usize) -> Result<AInfCategory, CobordismError> {
    if l.is_multiple_of(2) {
        return Err(CobordismError::EvenL(l));
    }
    if l < 3 {
        return Err(CobordismError::LTooSmall(l));
    }
    let names: Vec<String> = a.hom().names().to_vec();
    let hom = HomCollection::from_fn(names, |i, j| l * a.dim(i, j));
    let mut mu = ExtendedMap::zero_endo(&hom, a.arity_cap());
    for (t, m) in a.mu().components() {
        let k = t.len() - 1;
        let dims = m.in_dims().to_vec();
        let out = m.out_dim();
        if k == 1 {
            let sm = snake_matrix(&m.to_matrix(), l);
            mu.set_component(t.clone(), Multilinear::from_matrix(&sm))?;
            continue;
        }
        let mut big = Multilinear::zeros(dims.iter().map(|d| d * l).collect(), out * l);
        for idx in 0..big.len() {
            let basis = big.basis_of(idx);
            let (js, bs): (Vec<usize>, Vec<usize>) = basis.iter().zip(&dims).map(|(&i, &d)| split(i, d)).unzip();
            let Some(j) = product_of(&js) else { continue };
            let v = m.get(&bs);
            if v.is_zero() {
                continue;
            }
            let mut w = BitVec::zeros(out * l);
            for o in v.ones() {
                w.set((j - 1) * out + o, true);
            }
            *big.entry_mut(idx) = w;
        }
        mu.set_component(t.clone(), big)?;
    }
    // hom spaces with μ_1 = 0 in A still carry the R_l differential
    for i in 0..a.objects() {
        for j in 0..a.objects() {
            let n = a.dim(i, j);
            if n > 0 && mu.component(&[i, j]).is_none() {
                let sm = snake_matrix(&crate::f2::BitMatrix::zeros(n, n), l);
                mu.set_component(vec![i, j], Multilinear::from_matrix(&sm))?;
            }
        }
    }
    Ok(AInfCategory::new(mu)?)
}

/// The strict functor `c_j : A ⊗ R_l → A`, `x^(i) ↦ δ_{ij} x`, `j` odd.
pub fn projection_functor(b: &AInfCategory, a: &AInfCategory, l: usize, j: usize) -> Result<ExtendedMap, CobordismError> {
    if j.is_multiple_of(2) {
        return Err(CobordismError::EvenIndex(j));
    }
    if j == 0 || j > l {
        return Err(CobordismError::IndexOutOfRange(j));
    }
    let n = a.objects();
    let mut f = ExtendedMap::new(b.hom().clone(), a.hom().clone(), (0..n).collect(), a.arity_cap())?;
    for x in 0..n {
        for y in 0..n {
            let d = a.dim(x, y);
            if d == 0 {
                continue;
            }
            let table = (0..l * d)
                .map(|idx| {
                    let (i, bb) = split(idx, d);
                    if i == j {
                        BitVec::unit(d, bb)
                    } else {
                        BitVec::zeros(d)
                    }
                })
                .collect();
            f.set_component(vec![x, y], Multilinear::from_table(vec![l * d], d, table))?;
        }
    }
    Ok(f)
}

/// The strict functor `e : A → A ⊗ R_l`, `x ↦ Σ_{i odd} x^(i)`.
pub fn inclusion_functor(a: &AInfCategory, b: &AInfCategory, l: usize) -> Result<ExtendedMap, CobordismError> {
    let n = a.objects();
    let mut f = ExtendedMap::new(a.hom().clone(), b.hom().clone(), (0..n).collect(), a.arity_cap())?;
    for x in 0..n {
        for y in 0..n {
            let d = a.dim(x, y);
            if d == 0 {
                continue;
            }
            let table = (0..d)
                .map(|bb| {
                    let mut v = BitVec::zeros(l * d);
                    for i in (1..=l).step_by(2) {
                        v.set((i - 1) * d + bb, true);
                    }
                    v
                })
                .collect();
            f.set_component(vec![x, y], Multilinear::from_table(vec![d], l * d, table))?;
        }
    }
    Ok(f)
}

/// The homotopy `c_j ≃ c_{j+2}`: `T^0 = 0` and `T'_1(x^(j+1)) = x`.
pub fn projection_homotopy(b: &AInfCategory, a: &AInfCategory, l: usize, j: usize) -> Result<PreNaturalTransformation, CobordismError> {
    let f = projection_functor(b, a, l, j)?;
    let g = projection_functor(b, a, l, j + 2)?;
    let pair = pair_collection(b.hom(), &f, &g, a.hom());
    let n = a.objects();
    let mut tprime = ExtendedMap::new(b.hom().clone(), pair, (0..n).collect(), a.arity_cap())?;
    for x in 0..n {
        for y in 0..n {
            let d = a.dim(x, y);
            if d == 0 {
                continue;
            }
            let table = (0..l * d)
                .map(|idx| {
                    let (i, bb) = split(idx, d);
                    if i == j + 1 {
                        BitVec::unit(d, bb)
                    } else {
                        BitVec::zeros(d)
                    }
                })
                .collect();
            tprime.set_component(vec![x, y], Multilinear::from_table(vec![l * d], d, table))?;
        }
    }
    let t0 = (0..n).map(|x| BitVec::zeros(a.dim(x, x))).collect();
    Ok(PreNaturalTransformation::new(b, a, &f, &g, t0, tprime)?)
}

/// Snake category together with its structure functors, for callers that
/// need all of them.
pub struct SnakeCategory {
    pub base: Arc<AInfCategory>,
    pub total: Arc<AInfCategory>,
    pub l: usize,
}

impl SnakeCategory {
    pub fn new(base: Arc<AInfCategory>, l: usize) -> Result<Self, CobordismError> {
        let total = Arc::new(snake_category(&base, l)?);
        Ok(SnakeCategory { base, total, l })
    }

    pub fn projection(&self, j: usize) -> Result<ExtendedMap, CobordismError> {
        projection_functor(&self.total, &self.base, self.l, j)
    }

    pub fn inclusion(&self) -> Result<ExtendedMap, CobordismError> {
        inclusion_functor(&self.base, &self.total, self.l)
    }

    pub fn homotopy(&self, j: usize) -> Result<PreNaturalTransformation, CobordismError> {
        projection_homotopy(&self.total, &self.base, self.l, j)
    }
}
