//! Mixed extended maps: the last input comes from a module-space collection.
//!
//! A component is keyed by the object tuple `(i_0, …, i_{k−1})` and maps
//! `C(i_0,i_1)⊗…⊗C(i_{k−2},i_{k−1})⊗M(i_{k−1}) → N(Q i_0)`.

use std::collections::BTreeMap;

use super::extended::{insert_into_slot, ExtendedMap, HomCollection};
use super::multilinear::{compositions, for_each_tuple, Multilinear};
use super::AinfError;
use crate::f2::{BitMatrix, BitVec};

#[derive(Clone, Debug)]
pub struct MixedExtendedMap {
    category: HomCollection,
    input: Vec<usize>,
    output: Vec<usize>,
    index_map: Vec<usize>,
    arity_cap: usize,
    components: BTreeMap<Vec<usize>, Multilinear>,
}

impl PartialEq for MixedExtendedMap {
    fn eq(&self, other: &Self) -> bool {
        self.category == other.category
            && self.input == other.input
            && self.output == other.output
            && self.index_map == other.index_map
            && self.components == other.components
    }
}

impl Eq for MixedExtendedMap {}

impl MixedExtendedMap {
    /// Zero map with identity object action; `input`/`output` are per-object dimensions.
    pub fn zero(category: HomCollection, input: Vec<usize>, output: Vec<usize>, arity_cap: usize) -> Result<Self, AinfError> {
        let n = category.objects();
        if input.len() != n || output.len() != n {
            return Err(AinfError::DimensionMismatch("module dimensions must be given per object".into()));
        }
        Ok(MixedExtendedMap {
            category,
            input,
            output,
            index_map: (0..n).collect(),
            arity_cap,
            components: BTreeMap::new(),
        })
    }

    /// Arity-1 identity `b ↦ b`.
    pub fn identity(category: HomCollection, dims: Vec<usize>, arity_cap: usize) -> Result<Self, AinfError> {
        let mut m = Self::zero(category, dims.clone(), dims.clone(), arity_cap)?;
        for (i, &n) in dims.iter().enumerate() {
            let table = (0..n).map(|b| BitVec::unit(n, b)).collect();
            m.insert(vec![i], Multilinear::from_table(vec![n], n, table));
        }
        Ok(m)
    }

    pub fn category(&self) -> &HomCollection {
        &self.category
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.input
    }

    pub fn output_dims(&self) -> &[usize] {
        &self.output
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    pub fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    pub fn effective_arity(&self) -> usize {
        self.components.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Multilinear)> {
        self.components.iter()
    }

    pub fn component(&self, tuple: &[usize]) -> Option<&Multilinear> {
        self.components.get(tuple)
    }

    pub fn component_dims(&self, tuple: &[usize]) -> (Vec<usize>, usize) {
        let mut d = self.category.chain_dims(tuple);
        d.push(self.input[*tuple.last().unwrap()]);
        (d, self.output[self.index_map[tuple[0]]])
    }

    pub fn set_component(&mut self, tuple: Vec<usize>, m: Multilinear) -> Result<(), AinfError> {
        if tuple.is_empty() || tuple.iter().any(|&i| i >= self.category.objects()) {
            return Err(AinfError::DimensionMismatch(format!("bad object tuple {tuple:?}")));
        }
        if tuple.len() > self.arity_cap {
            return Err(AinfError::AboveCap { arity: tuple.len(), cap: self.arity_cap });
        }
        let (d, o) = self.component_dims(&tuple);
        if m.in_dims() != d.as_slice() || m.out_dim() != o {
            return Err(AinfError::DimensionMismatch(format!(
                "component {tuple:?} has shape {:?}->{}, expected {:?}->{}",
                m.in_dims(),
                m.out_dim(),
                d,
                o
            )));
        }
        self.insert(tuple, m);
        Ok(())
    }

    pub(crate) fn insert(&mut self, tuple: Vec<usize>, m: Multilinear) {
        if m.is_zero() {
            self.components.remove(&tuple);
        } else {
            self.components.insert(tuple, m);
        }
    }

    pub fn set_entry(&mut self, tuple: &[usize], basis: &[usize], value: BitVec) -> Result<(), AinfError> {
        if tuple.is_empty() || tuple.iter().any(|&i| i >= self.category.objects()) {
            return Err(AinfError::DimensionMismatch(format!("bad object tuple {tuple:?}")));
        }
        let (d, o) = self.component_dims(tuple);
        if basis.len() != d.len() || basis.iter().zip(&d).any(|(b, n)| b >= n) || value.len() != o {
            return Err(AinfError::DimensionMismatch(format!("entry {basis:?} does not fit component {tuple:?}")));
        }
        let mut m = self.components.get(tuple).cloned().unwrap_or_else(|| Multilinear::zeros(d, o));
        m.set(basis, value);
        self.set_component(tuple.to_vec(), m)
    }

    /// Arity-1 component at an object as a matrix.
    pub fn linear_at(&self, object: usize) -> BitMatrix {
        match self.components.get(&vec![object]) {
            Some(m) => m.to_matrix(),
            None => BitMatrix::zeros(self.output[self.index_map[object]], self.input[object]),
        }
    }

    pub fn eval_basis(&self, tuple: &[usize], basis: &[usize]) -> BitVec {
        match self.components.get(tuple) {
            Some(m) => m.get(basis).clone(),
            None => BitVec::zeros(self.component_dims(tuple).1),
        }
    }

    pub fn eval(&self, tuple: &[usize], inputs: &[BitVec]) -> BitVec {
        match self.components.get(tuple) {
            Some(m) => m.apply(inputs),
            None => BitVec::zeros(self.component_dims(tuple).1),
        }
    }

    pub fn add(&self, other: &MixedExtendedMap) -> Result<MixedExtendedMap, AinfError> {
        if self.category != other.category
            || self.input != other.input
            || self.output != other.output
            || self.index_map != other.index_map
        {
            return Err(AinfError::CollectionMismatch("sum of incompatible mixed maps".into()));
        }
        let mut out = self.clone();
        out.arity_cap = self.arity_cap.max(other.arity_cap);
        for (t, m) in &other.components {
            let mut acc = match out.components.get(t) {
                Some(a) => a.clone(),
                None => Multilinear::zeros(m.in_dims().to_vec(), m.out_dim()),
            };
            acc.add_assign(m);
            out.insert(t.clone(), acc);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn truncated(&self, k: usize) -> MixedExtendedMap {
        let mut out = self.clone();
        out.components.retain(|t, _| t.len() <= k);
        out
    }

    /// Evaluates `column` on every object tuple of length `1..=max_arity`.
    pub(crate) fn tabulate(
        template: MixedExtendedMap,
        max_arity: usize,
        mut column: impl FnMut(&[usize], &Multilinear) -> Option<Multilinear>,
    ) -> MixedExtendedMap {
        let mut out = template;
        out.components.clear();
        let n = out.category.objects();
        for k in 1..=max_arity {
            for_each_tuple(n, k, |t| {
                let (d, o) = out.component_dims(t);
                if o == 0 || d.contains(&0) {
                    return;
                }
                let zero = Multilinear::zeros(d, o);
                if let Some(m) = column(t, &zero) {
                    out.insert(t.to_vec(), m);
                }
            });
        }
        out.arity_cap = out.arity_cap.max(out.effective_arity());
        out
    }
}

/// `(P ⊣ Q)(a_1,…,a_{k−1},b) = Σ_i P(a_1,…,a_{i−1}, Q(a_i,…,a_{k−1},b))`.
pub fn compose_mixed(p: &MixedExtendedMap, q: &MixedExtendedMap) -> Result<MixedExtendedMap, AinfError> {
    if p.category != q.category || q.output != p.input || q.index_map.iter().enumerate().any(|(i, &j)| i != j) {
        return Err(AinfError::CollectionMismatch("output of Q is not the module input of P".into()));
    }
    let (ep, eq) = (p.effective_arity(), q.effective_arity());
    let template = MixedExtendedMap {
        category: q.category.clone(),
        input: q.input.clone(),
        output: p.output.clone(),
        index_map: p.index_map.clone(),
        arity_cap: p.arity_cap.max(q.arity_cap),
        components: BTreeMap::new(),
    };
    if ep == 0 || eq == 0 {
        return Ok(template);
    }
    Ok(MixedExtendedMap::tabulate(template, ep + eq - 1, |t, zero| {
        let k = t.len();
        let mut acc = zero.clone();
        let mut touched = false;
        // P takes inputs a_1..a_{i-1} plus Q's output; P's tuple is t[..i].
        for i in 1..=k {
            if i > ep || k - i + 1 > eq {
                continue;
            }
            let Some(pm) = p.component(&t[..i]) else { continue };
            let Some(qm) = q.component(&t[i - 1..]) else { continue };
            insert_into_slot(&mut acc, pm, qm, i - 1, k - i + 1);
            touched = true;
        }
        touched.then_some(acc)
    }))
}

/// `(Q ⋆ F)(a_1,…,a_{k−1},b)`: `F` inserted into category slots only.
pub fn compose_mixed_star(q: &MixedExtendedMap, f: &ExtendedMap) -> Result<MixedExtendedMap, AinfError> {
    if !f.has_identity_index() || f.source() != &q.category {
        return Err(AinfError::CollectionMismatch("F must act on Q's category inputs with identity object action".into()));
    }
    let (eq, ef) = (q.effective_arity(), f.effective_arity());
    let template = MixedExtendedMap {
        components: BTreeMap::new(),
        arity_cap: q.arity_cap.max(f.arity_cap()),
        ..q.clone()
    };
    if eq == 0 || ef == 0 {
        return Ok(template);
    }
    Ok(MixedExtendedMap::tabulate(template, eq + ef - 1, |t, zero| {
        let k = t.len();
        let ncat = k - 1;
        let mut acc = zero.clone();
        let mut touched = false;
        for m in 1..=ef.min(ncat) {
            if k - m + 1 > eq {
                continue;
            }
            for s in 0..=(ncat - m) {
                let Some(fm) = f.component(&t[s..=s + m]) else { continue };
                let mut q_tuple = t[..=s].to_vec();
                q_tuple.extend_from_slice(&t[s + m..]);
                let Some(qm) = q.component(&q_tuple) else { continue };
                insert_into_slot(&mut acc, qm, fm, s, m);
                touched = true;
            }
        }
        touched.then_some(acc)
    }))
}

/// `R(a_1,…,a_{k−1},b) = Σ Q(φ(block_1),…,φ(block_r), b)` over partitions of
/// the category inputs into nonempty consecutive blocks. This is the action of
/// a pulled-back module (or morphism) along a functor `φ`.
pub fn compose_mixed_circle(q: &MixedExtendedMap, phi: &ExtendedMap) -> Result<MixedExtendedMap, AinfError> {
    if phi.target() != &q.category {
        return Err(AinfError::CollectionMismatch("functor target is not the module's category".into()));
    }
    let map = phi.index_map();
    let eq = q.effective_arity();
    let ef = phi.effective_arity();
    let template = MixedExtendedMap {
        category: phi.source().clone(),
        input: map.iter().map(|&j| q.input[j]).collect(),
        output: map.iter().map(|&j| q.output[q.index_map[j]]).collect(),
        index_map: (0..map.len()).collect(),
        arity_cap: q.arity_cap.max(phi.arity_cap()),
        components: BTreeMap::new(),
    };
    if eq == 0 {
        return Ok(template);
    }
    let max_arity = (eq - 1) * ef.max(1) + 1;
    Ok(MixedExtendedMap::tabulate(template, max_arity, |t, zero| {
        let ncat = t.len() - 1;
        let mut acc = zero.clone();
        let mut touched = false;
        'parts: for parts in compositions(ncat, ef.max(1), eq - 1) {
            let mut cuts = vec![0];
            for p in &parts {
                cuts.push(cuts.last().unwrap() + p);
            }
            let q_tuple: Vec<usize> = cuts.iter().map(|&c| map[t[c]]).collect();
            let Some(qm) = q.component(&q_tuple) else { continue };
            let mut tensor = vec![BitVec::unit(1, 0)];
            for w in cuts.windows(2) {
                let Some(fm) = phi.component(&t[w[0]..=w[1]]) else { continue 'parts };
                tensor = tensor.iter().flat_map(|x| fm.table().iter().map(move |y| x.tensor(y))).collect();
            }
            let nb = q.input[map[t[ncat]]];
            for (i, tv) in tensor.iter().enumerate() {
                for b in 0..nb {
                    let full = tv.tensor(&BitVec::unit(nb, b));
                    acc.entry_mut(i * nb + b).xor_assign(&qm.apply_tensor(&full));
                }
            }
            touched = true;
        }
        touched.then_some(acc)
    }))
}
