//! A∞-modules and module morphisms.

use std::sync::Arc;

use super::ModuleError;
use crate::ainf::category::{fmt_basis, fmt_tuple};
use crate::ainf::{compose_mixed, compose_mixed_star, homology_category, AInfCategory, MixedExtendedMap};
use crate::f2::{induced_on_homology, BitVec, ChainComplex, ChainError, ChainMap};
use crate::report::Report;

/// A module over `A`: spaces `M(L)` and an action `μ^M` with
/// `(μ^M ⊣ μ^M) + (μ^M ⋆ μ^A) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfModule {
    base: Arc<AInfCategory>,
    action: MixedExtendedMap,
}

impl AInfModule {
    pub fn new(base: Arc<AInfCategory>, action: MixedExtendedMap) -> Result<Self, ModuleError> {
        if action.category() != base.hom() || action.input_dims() != action.output_dims() {
            return Err(ModuleError::Shape("action must map C_A ⊗ M into M".into()));
        }
        if action.index_map().iter().enumerate().any(|(i, &j)| i != j) {
            return Err(ModuleError::Shape("action must have identity object action".into()));
        }
        Ok(AInfModule { base, action })
    }

    /// Zero module over `A`.
    pub fn zero(base: Arc<AInfCategory>) -> Self {
        let n = base.objects();
        let action = MixedExtendedMap::zero(base.hom().clone(), vec![0; n], vec![0; n], base.arity_cap()).expect("sizes fit");
        AInfModule { base, action }
    }

    pub fn base(&self) -> &Arc<AInfCategory> {
        &self.base
    }

    pub fn action(&self) -> &MixedExtendedMap {
        &self.action
    }

    pub fn dims(&self) -> &[usize] {
        self.action.input_dims()
    }

    pub fn dim(&self, l: usize) -> usize {
        self.dims()[l]
    }

    /// `(M(L), μ_1^M)`.
    pub fn complex_at(&self, l: usize) -> Result<ChainComplex, ChainError> {
        ChainComplex::new(self.action.linear_at(l))
    }

    /// True when every `M(L)` is acyclic.
    pub fn is_acyclic(&self) -> Result<bool, ChainError> {
        for l in 0..self.base.objects() {
            if !self.complex_at(l)?.is_acyclic() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `H(M(L))` is a unital module over `H(L, L)` for every object
    /// with a unit class. `None` when the base has an object without a unit.
    pub fn is_homologically_unital(&self) -> Result<Option<bool>, ChainError> {
        let hc = homology_category(&self.base)?;
        if !hc.is_unital() {
            return Ok(None);
        }
        for l in 0..self.base.objects() {
            let c = self.complex_at(l)?;
            let h = c.homology();
            let unit = hc.unit(l).expect("unital");
            let u = hc.homology(l, l).inclusion().mul_vec(unit);
            for m in &h.representatives {
                let out = self.action.eval(&[l, l], &[u.clone(), m.clone()]);
                if h.class_of(&out) != h.class_of(m) {
                    return Ok(Some(false));
                }
            }
        }
        Ok(Some(true))
    }
}

/// Checks `(μ^M ⊣ μ^M) + (μ^M ⋆ μ^A) = 0` on all basis tuples.
pub fn check_module(m: &AInfModule) -> Report {
    let mut report = Report::new("module");
    let a = compose_mixed(&m.action, &m.action);
    let b = compose_mixed_star(&m.action, m.base.mu());
    let sum = match (a, b) {
        (Ok(a), Ok(b)) => a.add(&b),
        (Err(e), _) | (_, Err(e)) => return Report::error("module", e.to_string()),
    };
    let sum = match sum {
        Ok(s) => s,
        Err(e) => return Report::error("module", e.to_string()),
    };
    report.tick(count_mixed(&sum, 2 * m.action.effective_arity().max(m.base.mu().effective_arity())));
    list_nonzero(&mut report, &sum, m.base.hom(), "relation");
    report
}

pub(crate) fn count_mixed(m: &MixedExtendedMap, max_arity: usize) -> usize {
    let c = m.category();
    let mut total = 0;
    for k in 1..=max_arity {
        crate::ainf::for_each_tuple(c.objects(), k, |t| {
            total += c.chain_dims(t).iter().product::<usize>() * m.input_dims()[t[k - 1]];
        });
    }
    total
}

pub(crate) fn list_nonzero(report: &mut Report, m: &MixedExtendedMap, c: &crate::ainf::HomCollection, label: &str) {
    for (t, comp) in m.components() {
        for (idx, v) in comp.table().iter().enumerate() {
            if !v.is_zero() {
                report.violation(format!("{label} {} ({})", fmt_tuple(c, t), fmt_basis(&comp.basis_of(idx))), format!("-> {v}"));
            }
        }
    }
}

/// A pre-module morphism `ν : M' → M''`; a module morphism when
/// `(μ^{M''} ⊣ ν) + (ν ⊣ μ^{M'}) + (ν ⋆ μ^A) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub source: AInfModule,
    pub target: AInfModule,
    pub nu: MixedExtendedMap,
}

impl ModuleMorphism {
    pub fn new(source: AInfModule, target: AInfModule, nu: MixedExtendedMap) -> Result<Self, ModuleError> {
        if source.base != target.base {
            return Err(ModuleError::Shape("modules over different categories".into()));
        }
        if nu.category() != source.base.hom() || nu.input_dims() != source.dims() || nu.output_dims() != target.dims() {
            return Err(ModuleError::Shape("morphism table does not fit the modules".into()));
        }
        Ok(ModuleMorphism { source, target, nu })
    }

    pub fn zero(source: &AInfModule, target: &AInfModule) -> Self {
        let nu = MixedExtendedMap::zero(
            source.base.hom().clone(),
            source.dims().to_vec(),
            target.dims().to_vec(),
            source.base.arity_cap(),
        )
        .expect("sizes fit");
        ModuleMorphism { source: source.clone(), target: target.clone(), nu }
    }

    /// `ν_1(b) = b`, higher parts zero.
    pub fn identity(m: &AInfModule) -> Self {
        let nu = MixedExtendedMap::identity(m.base.hom().clone(), m.dims().to_vec(), m.base.arity_cap()).expect("sizes fit");
        ModuleMorphism { source: m.clone(), target: m.clone(), nu }
    }

    pub fn base(&self) -> &Arc<AInfCategory> {
        &self.source.base
    }

    /// The arity-1 part at `L` as a chain map `M'(L) → M''(L)`.
    pub fn chain_map_at(&self, l: usize) -> Result<ChainMap, ChainError> {
        ChainMap::new(self.source.complex_at(l)?, self.target.complex_at(l)?, self.nu.linear_at(l))
    }

    pub fn is_objectwise_quasi_iso(&self) -> Result<bool, ChainError> {
        for l in 0..self.base().objects() {
            if !induced_on_homology(&self.chain_map_at(l)?)?.is_invertible() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
        if self.source != other.source || self.target != other.target {
            return Err(ModuleError::Shape("sum of morphisms with different ends".into()));
        }
        Ok(ModuleMorphism { source: self.source.clone(), target: self.target.clone(), nu: self.nu.add(&other.nu)? })
    }

    /// `μ_1` of the module dg-category: `(μ'' ⊣ ν) + (ν ⊣ μ') + (ν ⋆ μ^A)`.
    pub fn differential(&self) -> Result<MixedExtendedMap, ModuleError> {
        let a = compose_mixed(self.target.action(), &self.nu)?;
        let b = compose_mixed(&self.nu, self.source.action())?;
        let c = compose_mixed_star(&self.nu, self.base().mu())?;
        Ok(a.add(&b)?.add(&c)?)
    }

    /// Evaluates the arity-1 part at `L`.
    pub fn apply_linear(&self, l: usize, v: &BitVec) -> BitVec {
        self.nu.linear_at(l).mul_vec(v)
    }
}

/// Checks `(μ^{M''} ⊣ ν) + (ν ⊣ μ^{M'}) + (ν ⋆ μ^A) = 0`.
pub fn check_module_morphism(nu: &ModuleMorphism) -> Report {
    let mut report = Report::new("module-morphism");
    let d = match nu.differential() {
        Ok(d) => d,
        Err(e) => return Report::error("module-morphism", e.to_string()),
    };
    let eff = nu.nu.effective_arity().max(nu.source.action.effective_arity()).max(nu.target.action.effective_arity());
    report.tick(count_mixed(&d, 2 * eff));
    list_nonzero(&mut report, &d, nu.base().hom(), "relation");
    report
}

/// `η ⊣ ν`: first `ν`, then `η`.
pub fn compose_module_morphisms(eta: &ModuleMorphism, nu: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
    if nu.target != eta.source {
        return Err(ModuleError::Ainf(crate::ainf::AinfError::CollectionMismatch(
            "target of ν is not the source of η".into(),
        )));
    }
    Ok(ModuleMorphism { source: nu.source.clone(), target: eta.target.clone(), nu: compose_mixed(&eta.nu, &nu.nu)? })
}
