//! Pre-natural transformations between A∞-functors, their differential and
//! composition in the functor category, and homotopies of functors.

use super::category::{fmt_basis, fmt_tuple, AInfCategory};
use super::extended::{compose_star, ExtendedMap, HomCollection};
use super::multilinear::{for_each_tuple, Multilinear};
use super::AinfError;
use crate::f2::BitVec;
use crate::report::Report;

/// `T = (T^0, T')` from `ℱ` to `𝒢`: `T^0_L ∈ C_B(ℱL, 𝒢L)` and an extended map
/// `T'` from `C_A` into the collection `C^{ℱ,𝒢}(L', L'') = C_B(ℱL', 𝒢L'')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreNaturalTransformation {
    pub t0: Vec<BitVec>,
    pub tprime: ExtendedMap,
}

/// The collection `C^{ℱ,𝒢}` indexed by the objects of `A`.
pub fn pair_collection(a: &HomCollection, f: &ExtendedMap, g: &ExtendedMap, b: &HomCollection) -> HomCollection {
    HomCollection::from_fn(a.names().to_vec(), |i, j| b.dim(f.map_object(i), g.map_object(j)))
}

impl PreNaturalTransformation {
    pub fn new(
        a: &AInfCategory,
        b: &AInfCategory,
        f: &ExtendedMap,
        g: &ExtendedMap,
        t0: Vec<BitVec>,
        tprime: ExtendedMap,
    ) -> Result<Self, AinfError> {
        let pair = pair_collection(a.hom(), f, g, b.hom());
        if t0.len() != a.objects() {
            return Err(AinfError::DimensionMismatch("T^0 needs one element per object".into()));
        }
        for (i, v) in t0.iter().enumerate() {
            if v.len() != pair.dim(i, i) {
                return Err(AinfError::DimensionMismatch(format!("T^0 at {} has the wrong length", a.name(i))));
            }
        }
        if tprime.source() != a.hom() || tprime.target() != &pair || !tprime.index_map().iter().enumerate().all(|(i, &j)| i == j) {
            return Err(AinfError::CollectionMismatch("T' must map C_A into C^{F,G} with identity object action".into()));
        }
        Ok(PreNaturalTransformation { t0, tprime })
    }

    pub fn zero(a: &AInfCategory, b: &AInfCategory, f: &ExtendedMap, g: &ExtendedMap) -> Self {
        let pair = pair_collection(a.hom(), f, g, b.hom());
        let t0 = (0..a.objects()).map(|i| BitVec::zeros(pair.dim(i, i))).collect();
        let tprime = ExtendedMap::new(a.hom().clone(), pair, (0..a.objects()).collect(), a.arity_cap())
            .expect("identity index map fits");
        PreNaturalTransformation { t0, tprime }
    }

    /// `(0, ℱ − 𝒢)` for functors with the same object action.
    pub fn difference(a: &AInfCategory, b: &AInfCategory, f: &ExtendedMap, g: &ExtendedMap) -> Result<Self, AinfError> {
        if f.index_map() != g.index_map() {
            return Err(AinfError::ObjectActionMismatch);
        }
        let mut t = Self::zero(a, b, f, g);
        t.tprime = retarget(&f.add(g)?, t.tprime.target().clone())?;
        Ok(t)
    }

    pub fn is_zero(&self) -> bool {
        self.t0.iter().all(BitVec::is_zero) && self.tprime.is_zero()
    }
}

/// Re-expresses a map into `C_B` (through an object action) as a map into a
/// pair collection with identity object action; tables are unchanged.
fn retarget(f: &ExtendedMap, pair: HomCollection) -> Result<ExtendedMap, AinfError> {
    let n = f.source().objects();
    let mut out = ExtendedMap::new(f.source().clone(), pair, (0..n).collect(), f.arity_cap())?;
    for (t, m) in f.components() {
        out.set_component(t.clone(), m.clone())?;
    }
    Ok(out)
}

/// Sums `μ^B(ℱ_0(…),…,ℱ_0(…), T_1(…), ℱ_1(…),…, T_n(…), ℱ_n(…),…)` over all
/// ways to cut the inputs into consecutive blocks: any number of nonempty
/// blocks for each functor, exactly one (possibly empty) block for each
/// transformation, an empty block contributing `T^0`.
///
/// Returns the result as a pre-natural transformation `ℱ_0 → ℱ_n`.
pub fn mu_chain(
    a: &AInfCategory,
    b: &AInfCategory,
    functors: &[&ExtendedMap],
    transforms: &[&PreNaturalTransformation],
) -> Result<PreNaturalTransformation, AinfError> {
    assert_eq!(functors.len(), transforms.len() + 1, "one transformation between consecutive functors");
    for f in functors {
        if f.source() != a.hom() || f.target() != b.hom() {
            return Err(AinfError::CollectionMismatch("functor does not map A to B".into()));
        }
    }
    let first = functors[0];
    let last = functors[functors.len() - 1];
    let mut out = PreNaturalTransformation::zero(a, b, first, last);
    let max_eff = functors
        .iter()
        .map(|f| f.effective_arity())
        .chain(transforms.iter().map(|t| t.tprime.effective_arity()))
        .max()
        .unwrap_or(0)
        .max(1);
    let emu = b.mu().effective_arity();
    let ctx = Ctx { b, functors, transforms, emu };
    for (l, slot) in out.t0.iter_mut().enumerate() {
        *slot = ctx.column(&[l], &[]);
    }
    let pair = out.tprime.target().clone();
    for k in 1..=emu * max_eff {
        for_each_tuple(a.objects(), k + 1, |t| {
            let in_dims = a.hom().chain_dims(t);
            let od = pair.dim(t[0], t[k]);
            if od == 0 || in_dims.contains(&0) {
                return;
            }
            let mut m = Multilinear::zeros(in_dims, od);
            for idx in 0..m.len() {
                let basis = m.basis_of(idx);
                *m.entry_mut(idx) = ctx.column(t, &basis);
            }
            if !m.is_zero() {
                out.tprime.set_arity_cap(out.tprime.arity_cap().max(k)).expect("raising the cap");
                out.tprime.set_component(t.to_vec(), m).expect("shape computed from the collections");
            }
        });
    }
    Ok(out)
}

struct Ctx<'a> {
    b: &'a AInfCategory,
    functors: &'a [&'a ExtendedMap],
    transforms: &'a [&'a PreNaturalTransformation],
    emu: usize,
}

impl Ctx<'_> {
    fn column(&self, t: &[usize], basis: &[usize]) -> BitVec {
        let od = self.b.dim(self.functors[0].map_object(t[0]), self.functors.last().unwrap().map_object(*t.last().unwrap()));
        let mut acc = BitVec::zeros(od);
        let mut bobjs = vec![self.functors[0].map_object(t[0])];
        let mut outs = Vec::new();
        self.rec(t, basis, 0, 0, &mut bobjs, &mut outs, &mut acc);
        acc
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        t: &[usize],
        basis: &[usize],
        stage: usize,
        pos: usize,
        bobjs: &mut Vec<usize>,
        outs: &mut Vec<BitVec>,
        acc: &mut BitVec,
    ) {
        let k = basis.len();
        if outs.len() > self.emu {
            return;
        }
        if stage.is_multiple_of(2) {
            let i = stage / 2;
            let f = self.functors[i];
            if i + 1 == self.functors.len() {
                if pos == k && !outs.is_empty() {
                    acc.xor_assign(&self.b.mu().eval(bobjs, outs));
                }
            } else {
                self.rec(t, basis, stage + 1, pos, bobjs, outs, acc);
            }
            for q in pos + 1..=k.min(pos + f.effective_arity()) {
                let v = f.eval_basis(&t[pos..=q], &basis[pos..q]);
                if v.is_zero() {
                    continue;
                }
                bobjs.push(f.map_object(t[q]));
                outs.push(v);
                self.rec(t, basis, stage, q, bobjs, outs, acc);
                outs.pop();
                bobjs.pop();
            }
        } else {
            let tr = self.transforms[stage / 2];
            let next = self.functors[stage / 2 + 1];
            for q in pos..=k.min(pos + tr.tprime.effective_arity()) {
                let v = if q == pos { tr.t0[t[pos]].clone() } else { tr.tprime.eval_basis(&t[pos..=q], &basis[pos..q]) };
                if v.is_zero() {
                    continue;
                }
                bobjs.push(next.map_object(t[q]));
                outs.push(v);
                self.rec(t, basis, stage + 1, q, bobjs, outs, acc);
                outs.pop();
                bobjs.pop();
            }
        }
    }
}

/// `μ_1(T)` in the functor category: `μ^B ∘⋆∘ (ℱ, T, 𝒢) + T' ⋆ μ^A`, whose
/// arity-0 part is `μ_1^B(T^0)`.
pub fn functor_differential(
    a: &AInfCategory,
    b: &AInfCategory,
    f: &ExtendedMap,
    g: &ExtendedMap,
    t: &PreNaturalTransformation,
) -> Result<PreNaturalTransformation, AinfError> {
    let mut d = mu_chain(a, b, &[f, g], &[t])?;
    let star = compose_star(&t.tprime, a.mu())?;
    let cap = d.tprime.arity_cap().max(star.arity_cap());
    d.tprime.set_arity_cap(cap)?;
    let mut star = star;
    star.set_arity_cap(cap)?;
    d.tprime = d.tprime.add(&star)?;
    Ok(d)
}

/// Checks `μ_1^B(T^0_L) = 0` and `μ^B ∘⋆∘ (ℱ,T,𝒢) + T' ⋆ μ^A = 0`.
pub fn check_natural_transformation(
    a: &AInfCategory,
    b: &AInfCategory,
    f: &ExtendedMap,
    g: &ExtendedMap,
    t: &PreNaturalTransformation,
) -> Report {
    let mut report = Report::new("natural-transformation");
    if f.index_map() != g.index_map() {
        report.note("functors have different object actions");
    }
    let d = match functor_differential(a, b, f, g, t) {
        Ok(d) => d,
        Err(e) => return Report::error("natural-transformation", e.to_string()),
    };
    report.tick(a.objects() + d.tprime.components().map(|(_, m)| m.len()).sum::<usize>());
    for (l, v) in d.t0.iter().enumerate() {
        if !v.is_zero() {
            report.violation(format!("mu1(T0) at {}", a.name(l)), format!("-> {v}"));
        }
    }
    for (tu, m) in d.tprime.components() {
        for (idx, v) in m.table().iter().enumerate() {
            if !v.is_zero() {
                report.violation(format!("D {} ({})", fmt_tuple(a.hom(), tu), fmt_basis(&m.basis_of(idx))), format!("-> {v}"));
            }
        }
    }
    report
}

/// `S ∘ T` for `T : ℱ → 𝒢`, `S : 𝒢 → ℋ`: arity 0 is `μ_2^B(T^0, S^0)`, higher
/// arities expand `μ^B ∘⋆∘⋆∘ (ℱ, T, 𝒢, S, ℋ)`.
pub fn compose_pre_natural(
    a: &AInfCategory,
    b: &AInfCategory,
    functors: [&ExtendedMap; 3],
    s: &PreNaturalTransformation,
    t: &PreNaturalTransformation,
) -> Result<PreNaturalTransformation, AinfError> {
    let [f, g, h] = functors;
    if t.tprime.target() != &pair_collection(a.hom(), f, g, b.hom())
        || s.tprime.target() != &pair_collection(a.hom(), g, h, b.hom())
    {
        return Err(AinfError::CollectionMismatch("transformations are not chainable".into()));
    }
    mu_chain(a, b, &[f, g, h], &[t, s])
}

/// True iff `(0, ℱ − 𝒢) = μ_1(T)`.
pub fn check_homotopic(
    a: &AInfCategory,
    b: &AInfCategory,
    f: &ExtendedMap,
    g: &ExtendedMap,
    t: &PreNaturalTransformation,
) -> Result<bool, AinfError> {
    if f.index_map() != g.index_map() {
        return Err(AinfError::ObjectActionMismatch);
    }
    if t.t0.iter().any(|v| !v.is_zero()) {
        return Err(AinfError::DimensionMismatch("a homotopy must have T^0 = 0".into()));
    }
    let d = functor_differential(a, b, f, g, t)?;
    let diff = PreNaturalTransformation::difference(a, b, f, g)?;
    if d.t0.iter().any(|v| !v.is_zero()) {
        return Ok(false);
    }
    let mut lhs = d.tprime;
    let mut rhs = diff.tprime;
    let cap = lhs.arity_cap().max(rhs.arity_cap());
    lhs.set_arity_cap(cap)?;
    rhs.set_arity_cap(cap)?;
    Ok(lhs.add(&rhs)?.is_zero())
}
