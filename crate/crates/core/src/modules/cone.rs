//! Mapping cones of module morphisms.

use super::module::{check_module_morphism, AInfModule, ModuleMorphism};
use super::ModuleError;
use crate::ainf::{Multilinear, MixedExtendedMap};
use crate::f2::BitVec;

/// `Cone(ν)` with `i : M'' → Cone(ν)` and `π : Cone(ν) → M'`.
#[derive(Clone, Debug)]
pub struct ModuleCone {
    pub module: AInfModule,
    pub inclusion: ModuleMorphism,
    pub projection: ModuleMorphism,
}

/// `Cone(ν)(L) = M'(L) ⊕ M''(L)` with action
/// `μ(a…, (b', b'')) = (μ'(a…, b'), μ''(a…, b'') + ν(a…, b'))`.
pub fn cone(nu: &ModuleMorphism) -> Result<ModuleCone, ModuleError> {
    if !check_module_morphism(nu).passed() {
        return Err(ModuleError::NotModuleMorphism);
    }
    Ok(cone_unchecked(nu))
}

pub(crate) fn cone_unchecked(nu: &ModuleMorphism) -> ModuleCone {
    let src = &nu.source;
    let tgt = &nu.target;
    let base = nu.base().clone();
    let n = base.objects();
    let d1 = src.dims().to_vec();
    let d2 = tgt.dims().to_vec();
    let dims: Vec<usize> = (0..n).map(|l| d1[l] + d2[l]).collect();
    let cap = src.action().arity_cap().max(tgt.action().arity_cap()).max(nu.nu.arity_cap());
    let template = MixedExtendedMap::zero(base.hom().clone(), dims.clone(), dims.clone(), cap).expect("sizes fit");
    let max_arity = src.action().effective_arity().max(tgt.action().effective_arity()).max(nu.nu.effective_arity());
    let action = MixedExtendedMap::tabulate(template, max_arity, |t, zero| {
        let k = t.len();
        let (l0, ll) = (t[0], t[k - 1]);
        let mut m: Multilinear = zero.clone();
        for idx in 0..m.len() {
            let mut basis = m.basis_of(idx);
            let b = basis[k - 1];
            let out = if b < d1[ll] {
                src.action().eval_basis(t, &basis).concat(&nu.nu.eval_basis(t, &basis))
            } else {
                basis[k - 1] = b - d1[ll];
                BitVec::zeros(d1[l0]).concat(&tgt.action().eval_basis(t, &basis))
            };
            *m.entry_mut(idx) = out;
        }
        Some(m)
    });
    let module = AInfModule::new(base.clone(), action).expect("cone action has module shape");
    let mut inc = MixedExtendedMap::zero(base.hom().clone(), d2.clone(), dims.clone(), cap).expect("sizes fit");
    let mut proj = MixedExtendedMap::zero(base.hom().clone(), dims.clone(), d1.clone(), cap).expect("sizes fit");
    for l in 0..n {
        if d2[l] > 0 {
            let table = (0..d2[l]).map(|b| BitVec::unit(dims[l], d1[l] + b)).collect();
            inc.set_component(vec![l], Multilinear::from_table(vec![d2[l]], dims[l], table)).expect("shape");
        }
        if dims[l] > 0 && d1[l] > 0 {
            let table = (0..dims[l])
                .map(|b| if b < d1[l] { BitVec::unit(d1[l], b) } else { BitVec::zeros(d1[l]) })
                .collect();
            proj.set_component(vec![l], Multilinear::from_table(vec![dims[l]], d1[l], table)).expect("shape");
        }
    }
    ModuleCone {
        inclusion: ModuleMorphism { source: tgt.clone(), target: module.clone(), nu: inc },
        projection: ModuleMorphism { source: module.clone(), target: src.clone(), nu: proj },
        module,
    }
}
