//! The Yoneda embedding `L ↦ C(−, L)`.

use std::sync::Arc;

use super::module::{compose_module_morphisms, AInfModule, ModuleMorphism};
use super::ModuleError;
use crate::ainf::{for_each_tuple, homology_category, AInfCategory, MixedExtendedMap, Multilinear};
use crate::f2::BitVec;
use crate::report::Report;

/// `𝓜_L(K) = C(K, L)` with action `μ^A`.
pub fn yoneda_module(a: &Arc<AInfCategory>, l: usize) -> AInfModule {
    let n = a.objects();
    let dims: Vec<usize> = (0..n).map(|k| a.dim(k, l)).collect();
    let mut action = MixedExtendedMap::zero(a.hom().clone(), dims.clone(), dims, a.arity_cap()).expect("sizes fit");
    for (t, m) in a.mu().components() {
        if *t.last().unwrap() == l {
            action.set_component(t[..t.len() - 1].to_vec(), m.clone()).expect("μ^A tables fit C(−, L)");
        }
    }
    AInfModule::new(a.clone(), action).expect("module shape")
}

/// The Yoneda modules of every object.
pub fn yoneda(a: &Arc<AInfCategory>) -> Vec<AInfModule> {
    (0..a.objects()).map(|l| yoneda_module(a, l)).collect()
}

/// `𝒴(a_1,…,a_k) : 𝓜_{L_0} → 𝓜_{L_k}` with
/// `ν(c_1,…,c_{d−1}, b) = μ^A(c_1,…,c_{d−1}, b, a_1,…,a_k)`.
///
/// `objects = (L_0, …, L_k)` and `a_i ∈ C(L_{i−1}, L_i)`.
pub fn yoneda_morphism(a: &Arc<AInfCategory>, objects: &[usize], inputs: &[BitVec]) -> Result<ModuleMorphism, ModuleError> {
    let k = inputs.len();
    if objects.len() != k + 1 || k == 0 {
        return Err(ModuleError::Shape("need k ≥ 1 elements and k + 1 objects".into()));
    }
    for (i, v) in inputs.iter().enumerate() {
        if objects[i] >= a.objects() || objects[i + 1] >= a.objects() || v.len() != a.dim(objects[i], objects[i + 1]) {
            return Err(ModuleError::Shape(format!("element {} does not lie in the stated hom space", i + 1)));
        }
    }
    let src = yoneda_module(a, objects[0]);
    let tgt = yoneda_module(a, objects[k]);
    let template = MixedExtendedMap::zero(a.hom().clone(), src.dims().to_vec(), tgt.dims().to_vec(), a.arity_cap())
        .expect("sizes fit");
    let eff = a.mu().effective_arity();
    let max_d = eff.saturating_sub(k);
    let mut nu = template;
    for d in 1..=max_d {
        for_each_tuple(a.objects(), d, |t| {
            let (in_dims, od) = nu.component_dims(t);
            if od == 0 || in_dims.contains(&0) {
                return;
            }
            let mut full_t = t.to_vec();
            full_t.extend_from_slice(objects);
            let mut m = Multilinear::zeros(in_dims.clone(), od);
            for idx in 0..m.len() {
                let basis = m.basis_of(idx);
                let mut vs: Vec<BitVec> = basis.iter().zip(&in_dims).map(|(&b, &n)| BitVec::unit(n, b)).collect();
                vs.extend(inputs.iter().cloned());
                *m.entry_mut(idx) = a.mu().eval(&full_t, &vs);
            }
            nu.set_component(t.to_vec(), m).expect("shape");
        });
    }
    ModuleMorphism::new(src, tgt, nu)
}

/// Checks the functor relation `𝒴 ⋆ μ^A = μ^{mod} ∘ 𝒴` on basis tuples of
/// arity `≤ max_arity`, where `μ_1^{mod}` is the module-morphism differential
/// and `μ_2^{mod}(ν, η) = η ⊣ ν`.
pub fn check_yoneda_functor(a: &Arc<AInfCategory>, max_arity: usize) -> Report {
    let mut report = Report::new("yoneda-functor");
    report.note("fullness of the Yoneda embedding is not verified");
    let hom = a.hom();
    for k in 1..=max_arity {
        for_each_tuple(a.objects(), k + 1, |objs| {
            let dims = hom.chain_dims(objs);
            if dims.contains(&0) {
                return;
            }
            let probe = Multilinear::zeros(dims.clone(), 0);
            for idx in 0..probe.len() {
                let basis = probe.basis_of(idx);
                let elems: Vec<BitVec> = basis.iter().zip(&dims).map(|(&b, &n)| BitVec::unit(n, b)).collect();
                report.tick(1);
                match yoneda_relation_defect(a, objs, &elems) {
                    Ok(None) => {}
                    Ok(Some(msg)) => report.violation(format!("tuple {objs:?} basis {basis:?}"), msg),
                    Err(e) => report.violation(format!("tuple {objs:?}"), e.to_string()),
                }
            }
        });
    }
    report
}

fn yoneda_relation_defect(a: &Arc<AInfCategory>, objs: &[usize], elems: &[BitVec]) -> Result<Option<String>, ModuleError> {
    let k = elems.len();
    let mut total = ModuleMorphism::zero(&yoneda_module(a, objs[0]), &yoneda_module(a, objs[k])).nu;
    // 𝒴 ⋆ μ^A
    for s in 0..k {
        for m in 1..=k - s {
            let v = a.mu().eval(&objs[s..=s + m], &elems[s..s + m]);
            if v.is_zero() {
                continue;
            }
            let mut new_objs = objs[..=s].to_vec();
            new_objs.extend_from_slice(&objs[s + m..]);
            let mut new_elems = elems[..s].to_vec();
            new_elems.push(v);
            new_elems.extend_from_slice(&elems[s + m..]);
            total = total.add(&yoneda_morphism(a, &new_objs, &new_elems)?.nu)?;
        }
    }
    // μ_1^{mod} 𝒴(a_1…a_k)
    let y = yoneda_morphism(a, objs, elems)?;
    total = total.add(&y.differential()?)?;
    // μ_2^{mod}(𝒴(a_1…a_j), 𝒴(a_{j+1}…a_k))
    for j in 1..k {
        let first = yoneda_morphism(a, &objs[..=j], &elems[..j])?;
        let second = yoneda_morphism(a, &objs[j..], &elems[j..])?;
        total = total.add(&compose_module_morphisms(&second, &first)?.nu)?;
    }
    Ok(if total.is_zero() { None } else { Some("relation does not vanish".into()) })
}

/// Result of the faithfulness probe at one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    pub source: usize,
    pub target: usize,
    pub class: BitVec,
    pub image_class: BitVec,
}

/// For every object `L` with a unit class `[e_L]` and every basis class `[a]`
/// of `H(L, L')`, evaluates the arity-1 part of `𝒴(a)` on `e_L` (that is,
/// `μ_2(e_L, a)`) and compares classes.
pub fn yoneda_probe(a: &Arc<AInfCategory>) -> Result<(Report, Vec<ProbeOutcome>), ModuleError> {
    let hc = homology_category(a)?;
    let mut report = Report::new("yoneda-probe");
    report.note("fullness of the Yoneda embedding is not verified");
    let mut outcomes = Vec::new();
    for l in 0..a.objects() {
        let Some(unit) = hc.unit(l) else {
            report.note(format!("object {} has no homology unit; skipped", a.name(l)));
            continue;
        };
        let e = hc.homology(l, l).inclusion().mul_vec(unit);
        for lp in 0..a.objects() {
            let h = hc.homology(l, lp);
            for (i, rep) in h.representatives.iter().enumerate() {
                let y = yoneda_morphism(a, &[l, lp], std::slice::from_ref(rep))?;
                let image = y.apply_linear(l, &e);
                let image_class = h.class_of(&image);
                let class = BitVec::unit(h.rank, i);
                report.tick(1);
                if image_class != class {
                    report.violation(
                        format!("class {} of H({},{})", i, a.name(l), a.name(lp)),
                        format!("image class {image_class}"),
                    );
                }
                outcomes.push(ProbeOutcome { source: l, target: lp, class, image_class });
            }
        }
    }
    Ok((report, outcomes))
}
