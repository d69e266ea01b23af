//! Extended multilinear maps between collections of hom spaces, and the
//! compositions `∘` and `⋆`.

use std::collections::BTreeMap;

use super::multilinear::{compositions, for_each_tuple, Multilinear};
use super::AinfError;
use crate::f2::BitVec;

/// Default arity cap for extended maps.
pub const DEFAULT_ARITY_CAP: usize = 4;

/// A collection of vector spaces `C(L', L'')` indexed by ordered pairs of objects.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomCollection {
    names: Vec<String>,
    dims: Vec<usize>,
}

impl HomCollection {
    /// `dims[i][j]` is the dimension of `C(i, j)`.
    pub fn new(names: Vec<String>, dims: Vec<Vec<usize>>) -> Result<Self, AinfError> {
        let n = names.len();
        if dims.len() != n || dims.iter().any(|r| r.len() != n) {
            return Err(AinfError::DimensionMismatch(format!("hom table must be {n}x{n}")));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(AinfError::DimensionMismatch(format!("duplicate object {name}")));
            }
        }
        Ok(HomCollection { names, dims: dims.into_iter().flatten().collect() })
    }

    pub fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let dims = (0..n * n).map(|x| f(x / n, x % n)).collect();
        HomCollection { names, dims }
    }

    pub fn objects(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.dims[i * self.names.len() + j]
    }

    /// Input dimensions of a component keyed by the object tuple `t`.
    pub fn chain_dims(&self, t: &[usize]) -> Vec<usize> {
        t.windows(2).map(|w| self.dim(w[0], w[1])).collect()
    }
}

/// An arity-indexed family of multilinear maps `F_k : C(i_0,i_1)⊗…⊗C(i_{k−1},i_k) → D(F i_0, F i_k)`.
#[derive(Clone, Debug)]
pub struct ExtendedMap {
    source: HomCollection,
    target: HomCollection,
    index_map: Vec<usize>,
    arity_cap: usize,
    components: BTreeMap<Vec<usize>, Multilinear>,
}

impl PartialEq for ExtendedMap {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.index_map == other.index_map
            && self.components == other.components
    }
}

impl Eq for ExtendedMap {}

impl ExtendedMap {
    pub fn new(
        source: HomCollection,
        target: HomCollection,
        index_map: Vec<usize>,
        arity_cap: usize,
    ) -> Result<Self, AinfError> {
        if index_map.len() != source.objects() || index_map.iter().any(|&i| i >= target.objects()) {
            return Err(AinfError::CollectionMismatch("index map does not fit the collections".into()));
        }
        Ok(ExtendedMap { source, target, index_map, arity_cap, components: BTreeMap::new() })
    }

    /// The zero map with identity object action.
    pub fn zero_endo(c: &HomCollection, arity_cap: usize) -> Self {
        ExtendedMap {
            source: c.clone(),
            target: c.clone(),
            index_map: (0..c.objects()).collect(),
            arity_cap,
            components: BTreeMap::new(),
        }
    }

    /// Degree-1 identity, higher parts zero.
    pub fn identity(c: &HomCollection, arity_cap: usize) -> Self {
        let mut m = Self::zero_endo(c, arity_cap);
        for i in 0..c.objects() {
            for j in 0..c.objects() {
                let n = c.dim(i, j);
                let table = (0..n).map(|b| BitVec::unit(n, b)).collect();
                m.insert(vec![i, j], Multilinear::from_table(vec![n], n, table));
            }
        }
        m
    }

    pub fn source(&self) -> &HomCollection {
        &self.source
    }

    pub fn target(&self) -> &HomCollection {
        &self.target
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    pub fn map_object(&self, i: usize) -> usize {
        self.index_map[i]
    }

    pub fn has_identity_index(&self) -> bool {
        self.source == self.target && self.index_map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    pub fn set_arity_cap(&mut self, cap: usize) -> Result<(), AinfError> {
        let eff = self.effective_arity();
        if eff > cap {
            return Err(AinfError::AboveCap { arity: eff, cap });
        }
        self.arity_cap = cap;
        Ok(())
    }

    /// Largest arity with a nonzero stored component.
    pub fn effective_arity(&self) -> usize {
        self.components.keys().map(|k| k.len() - 1).max().unwrap_or(0)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Multilinear)> {
        self.components.iter()
    }

    pub fn component(&self, tuple: &[usize]) -> Option<&Multilinear> {
        self.components.get(tuple)
    }

    pub fn component_dims(&self, tuple: &[usize]) -> (Vec<usize>, usize) {
        let out = self.target.dim(self.index_map[tuple[0]], self.index_map[*tuple.last().unwrap()]);
        (self.source.chain_dims(tuple), out)
    }

    /// Stores a component after validating its shape; zero tables are dropped.
    pub fn set_component(&mut self, tuple: Vec<usize>, m: Multilinear) -> Result<(), AinfError> {
        if tuple.len() < 2 {
            return Err(AinfError::DimensionMismatch("component needs arity at least 1".into()));
        }
        if tuple.iter().any(|&i| i >= self.source.objects()) {
            return Err(AinfError::DimensionMismatch(format!("object tuple {tuple:?} out of range")));
        }
        let arity = tuple.len() - 1;
        if arity > self.arity_cap {
            return Err(AinfError::AboveCap { arity, cap: self.arity_cap });
        }
        let (in_dims, out) = self.component_dims(&tuple);
        if m.in_dims() != in_dims.as_slice() || m.out_dim() != out {
            return Err(AinfError::DimensionMismatch(format!(
                "component {tuple:?} has shape {:?}->{}, expected {:?}->{}",
                m.in_dims(),
                m.out_dim(),
                in_dims,
                out
            )));
        }
        self.insert(tuple, m);
        Ok(())
    }

    fn insert(&mut self, tuple: Vec<usize>, m: Multilinear) {
        if m.is_zero() {
            self.components.remove(&tuple);
        } else {
            self.components.insert(tuple, m);
        }
    }

    /// Sets a single table entry, creating the component if needed.
    pub fn set_entry(&mut self, tuple: &[usize], basis: &[usize], value: BitVec) -> Result<(), AinfError> {
        let mut m = self.component_or_zero(tuple)?;
        let (in_dims, out) = (m.in_dims().to_vec(), m.out_dim());
        if basis.len() != in_dims.len() || basis.iter().zip(&in_dims).any(|(b, n)| b >= n) || value.len() != out {
            return Err(AinfError::DimensionMismatch(format!("entry {basis:?} does not fit component {tuple:?}")));
        }
        m.set(basis, value);
        self.set_component(tuple.to_vec(), m)
    }

    fn component_or_zero(&self, tuple: &[usize]) -> Result<Multilinear, AinfError> {
        if tuple.len() < 2 || tuple.iter().any(|&i| i >= self.source.objects()) {
            return Err(AinfError::DimensionMismatch(format!("bad object tuple {tuple:?}")));
        }
        Ok(match self.components.get(tuple) {
            Some(m) => m.clone(),
            None => {
                let (d, o) = self.component_dims(tuple);
                Multilinear::zeros(d, o)
            }
        })
    }

    /// Output on basis elements; zero when the component is absent.
    pub fn eval_basis(&self, tuple: &[usize], basis: &[usize]) -> BitVec {
        match self.components.get(tuple) {
            Some(m) => m.get(basis).clone(),
            None => BitVec::zeros(self.component_dims(tuple).1),
        }
    }

    /// Output on arbitrary vectors.
    pub fn eval(&self, tuple: &[usize], inputs: &[BitVec]) -> BitVec {
        match self.components.get(tuple) {
            Some(m) => m.apply(inputs),
            None => BitVec::zeros(self.component_dims(tuple).1),
        }
    }

    pub fn add(&self, other: &ExtendedMap) -> Result<ExtendedMap, AinfError> {
        if self.source != other.source || self.target != other.target || self.index_map != other.index_map {
            return Err(AinfError::CollectionMismatch("sum of incompatible extended maps".into()));
        }
        let mut out = self.clone();
        out.arity_cap = self.arity_cap.max(other.arity_cap);
        for (t, m) in &other.components {
            let mut acc = out.component_or_zero(t)?;
            acc.add_assign(m);
            out.insert(t.clone(), acc);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Keeps only components of arity `≤ k`.
    pub fn truncated(&self, k: usize) -> ExtendedMap {
        let mut out = self.clone();
        out.components.retain(|t, _| t.len() - 1 <= k);
        out
    }

    /// The degree-1 part.
    pub fn linear_part(&self) -> ExtendedMap {
        self.truncated(1)
    }

    /// Components of exactly arity `k`.
    pub fn components_of_arity(&self, k: usize) -> impl Iterator<Item = (&Vec<usize>, &Multilinear)> {
        self.components.iter().filter(move |(t, _)| t.len() == k + 1)
    }

    /// Builds a map by evaluating `column(tuple, basis)` for every object tuple of
    /// arity `1..=max_arity` and every basis tuple.
    pub(crate) fn tabulate(
        source: HomCollection,
        target: HomCollection,
        index_map: Vec<usize>,
        arity_cap: usize,
        max_arity: usize,
        mut column: impl FnMut(&[usize], &Multilinear) -> Option<Multilinear>,
    ) -> ExtendedMap {
        let mut out = ExtendedMap { source, target, index_map, arity_cap, components: BTreeMap::new() };
        let n = out.source.objects();
        for k in 1..=max_arity {
            for_each_tuple(n, k + 1, |t| {
                let (in_dims, od) = out.component_dims(t);
                if od == 0 || in_dims.contains(&0) {
                    return;
                }
                let zero = Multilinear::zeros(in_dims, od);
                if let Some(m) = column(t, &zero) {
                    out.insert(t.to_vec(), m);
                }
            });
        }
        out.arity_cap = out.arity_cap.max(out.effective_arity());
        out
    }
}

/// Tensor table of two tables: entry `(i, j)` is `a[i] ⊗ b[j]`.
fn kron_tables(a: &[BitVec], b: &[BitVec]) -> Vec<BitVec> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.tensor(y));
        }
    }
    out
}

/// `(G ∘ F)(a_1,…,a_k) = Σ G(F(a_1…a_{n_1}), F(…), …)` over ordered partitions
/// into consecutive blocks.
pub fn compose_circle(g: &ExtendedMap, f: &ExtendedMap) -> Result<ExtendedMap, AinfError> {
    if f.target != g.source {
        return Err(AinfError::CollectionMismatch("target of F is not the source of G".into()));
    }
    let index_map: Vec<usize> = f.index_map.iter().map(|&i| g.index_map[i]).collect();
    let (eg, ef) = (g.effective_arity(), f.effective_arity());
    let cap = g.arity_cap.max(f.arity_cap);
    let max_arity = eg * ef;
    let out = ExtendedMap::tabulate(f.source.clone(), g.target.clone(), index_map, cap, max_arity, |t, zero| {
        let k = t.len() - 1;
        let mut acc = zero.clone();
        let mut touched = false;
        'parts: for parts in compositions(k, ef, eg) {
            let mut cuts = vec![0];
            for p in &parts {
                cuts.push(cuts.last().unwrap() + p);
            }
            let g_tuple: Vec<usize> = cuts.iter().map(|&c| f.index_map[t[c]]).collect();
            let Some(gm) = g.component(&g_tuple) else { continue };
            let mut tensor_table = vec![BitVec::unit(1, 0)];
            for w in cuts.windows(2) {
                let Some(fm) = f.component(&t[w[0]..=w[1]]) else { continue 'parts };
                tensor_table = kron_tables(&tensor_table, fm.table());
            }
            for (idx, tv) in tensor_table.iter().enumerate() {
                acc.entry_mut(idx).xor_assign(&gm.apply_tensor(tv));
            }
            touched = true;
        }
        touched.then_some(acc)
    });
    Ok(out)
}

/// `(G ⋆ F)(a_1,…,a_k) = Σ G(a_1,…,a_{i−1}, F(a_i,…,a_l), a_{l+1},…,a_k)`.
pub fn compose_star(g: &ExtendedMap, f: &ExtendedMap) -> Result<ExtendedMap, AinfError> {
    if !f.has_identity_index() || f.source != g.source {
        return Err(AinfError::CollectionMismatch(
            "F must be an endomorphism of G's source with identity object action".into(),
        ));
    }
    let (eg, ef) = (g.effective_arity(), f.effective_arity());
    if eg == 0 || ef == 0 {
        return Ok(ExtendedMap {
            source: f.source.clone(),
            target: g.target.clone(),
            index_map: g.index_map.clone(),
            arity_cap: g.arity_cap.max(f.arity_cap),
            components: BTreeMap::new(),
        });
    }
    let cap = g.arity_cap.max(f.arity_cap);
    let max_arity = eg + ef - 1;
    let out = ExtendedMap::tabulate(f.source.clone(), g.target.clone(), g.index_map.clone(), cap, max_arity, |t, zero| {
        let k = t.len() - 1;
        let mut acc = zero.clone();
        let mut touched = false;
        for m in 1..=ef.min(k) {
            if k - m + 1 > eg {
                continue;
            }
            for s in 0..=(k - m) {
                let Some(fm) = f.component(&t[s..=s + m]) else { continue };
                let mut g_tuple: Vec<usize> = t[..=s].to_vec();
                g_tuple.extend_from_slice(&t[s + m..]);
                let Some(gm) = g.component(&g_tuple) else { continue };
                insert_into_slot(&mut acc, gm, fm, s, m);
                touched = true;
            }
        }
        touched.then_some(acc)
    });
    Ok(out)
}

/// `acc += G ∘ (id^{s} ⊗ F ⊗ id^{rest})` where `F` consumes inputs `s..s+m`.
pub(crate) fn insert_into_slot(acc: &mut Multilinear, gm: &Multilinear, fm: &Multilinear, s: usize, m: usize) {
    let dims = acc.in_dims().to_vec();
    let g_dims = gm.in_dims();
    let suffix: usize = g_dims[s + 1..].iter().product();
    for idx in 0..acc.len() {
        let b = acc.basis_of(idx);
        let v = fm.get(&b[s..s + m]);
        if v.is_zero() {
            continue;
        }
        let prefix = b[..s].iter().zip(&dims[..s]).fold(0, |a, (&x, &n)| a * n + x);
        let suf = b[s + m..].iter().zip(&dims[s + m..]).fold(0, |a, (&x, &n)| a * n + x);
        let mut out = BitVec::zeros(gm.out_dim());
        for j in v.ones() {
            out.xor_assign(&gm.table()[(prefix * g_dims[s] + j) * suffix + suf]);
        }
        acc.entry_mut(idx).xor_assign(&out);
    }
}
