//! Cobordism data: iterated cones of Yoneda modules, their filtration, the
//! assembled T^S morphism at a test object, and compatibility with gluing.

use std::sync::Arc;

use super::snake_category::SnakeCategory;
use super::CobordismError;
use crate::ainf::{AInfCategory, MixedExtendedMap};
use crate::cone_calc::{check_ts_equivalence, compose_ts, sum_ts, ConeDecomposition, Summand, TSMorphism};
use crate::f2::{is_quasi_iso, BitMatrix, BitVec, ChainMap};
use crate::modules::{cone, pullback, yoneda_module, AInfModule, ExactTriangleCertificate, ModuleError, ModuleMorphism};
use crate::report::Report;

/// A cobordism with positive end `L` and negative ends `L_1, …, L_m`, given
/// by its connecting morphisms `φ_j : 𝒴(L_j) → 𝓜_{j−1}` (`2 ≤ j ≤ m`) and an
/// optional end comparison `φ_V : 𝒴(L) → 𝓜_m`, all as tables over the
/// category. Statements about modules are checked at the test objects.
#[derive(Clone, Debug)]
pub struct CobordismDatum {
    pub category: Arc<AInfCategory>,
    pub positive_end: usize,
    pub negative_ends: Vec<usize>,
    pub connecting: Vec<MixedExtendedMap>,
    pub end_comparison: Option<MixedExtendedMap>,
    pub test_objects: Vec<usize>,
}

impl CobordismDatum {
    pub fn new(
        category: Arc<AInfCategory>,
        positive_end: usize,
        negative_ends: Vec<usize>,
        connecting: Vec<MixedExtendedMap>,
        end_comparison: Option<MixedExtendedMap>,
        test_objects: Vec<usize>,
    ) -> Result<Self, CobordismError> {
        let n = category.objects();
        if negative_ends.is_empty() {
            return Err(CobordismError::InvalidDatum("at least one negative end".into()));
        }
        if connecting.len() + 1 != negative_ends.len() {
            return Err(CobordismError::InvalidDatum(format!(
                "{} ends need {} connecting morphisms, got {}",
                negative_ends.len(),
                negative_ends.len() - 1,
                connecting.len()
            )));
        }
        if positive_end >= n || negative_ends.iter().chain(&test_objects).any(|&o| o >= n) {
            return Err(CobordismError::InvalidDatum("object index out of range".into()));
        }
        Ok(CobordismDatum { category, positive_end, negative_ends, connecting, end_comparison, test_objects })
    }

    pub fn m(&self) -> usize {
        self.negative_ends.len()
    }
}

/// `𝓜_1 = 𝒴(L_1)`, `𝓜_j = Cone(φ_j)`, the connecting morphisms as module
/// morphisms and the `m − 1` strict-cone triangles.
#[derive(Clone, Debug)]
pub struct IteratedCones {
    pub modules: Vec<AInfModule>,
    pub connecting: Vec<ModuleMorphism>,
    pub triangles: Vec<ExactTriangleCertificate>,
    pub end_comparison: Option<ModuleMorphism>,
}

impl IteratedCones {
    pub fn top(&self) -> &AInfModule {
        self.modules.last().expect("m ≥ 1")
    }
}

pub fn build_iterated_cones(v: &CobordismDatum) -> Result<IteratedCones, CobordismError> {
    let a = &v.category;
    let mut modules = vec![yoneda_module(a, v.negative_ends[0])];
    let mut connecting = Vec::new();
    let mut triangles = Vec::new();
    for (j, table) in v.connecting.iter().enumerate() {
        let src = yoneda_module(a, v.negative_ends[j + 1]);
        let phi = ModuleMorphism::new(src, modules[j].clone(), table.clone())?;
        let c = cone(&phi).map_err(|e| match e {
            ModuleError::NotModuleMorphism => CobordismError::InvalidDatum(format!("φ_{} is not a module morphism", j + 2)),
            e => e.into(),
        })?;
        triangles.push(ExactTriangleCertificate {
            nu: phi.clone(),
            j: c.inclusion.clone(),
            p: c.projection.clone(),
            witness: Some(ModuleMorphism::identity(&c.module)),
        });
        connecting.push(phi);
        modules.push(c.module);
    }
    let end_comparison = match &v.end_comparison {
        Some(t) => {
            let phi = ModuleMorphism::new(yoneda_module(a, v.positive_end), modules.last().unwrap().clone(), t.clone())?;
            if !crate::modules::check_module_morphism(&phi).passed() {
                return Err(CobordismError::InvalidDatum("φ_V is not a module morphism".into()));
            }
            Some(phi)
        }
        None => None,
    };
    Ok(IteratedCones { modules, connecting, triangles, end_comparison })
}

/// Filtration levels of a module over the snake category: `levels[N][b]` is
/// the level of basis vector `b` of `M(N)`. A generator `x^(j)` of a hom
/// space has type `o_j`; odd types are positive, even ones negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationProfile {
    pub l: usize,
    pub levels: Vec<Vec<usize>>,
}

impl FiltrationProfile {
    /// Type `j` of snake basis vector `idx` in a hom space of base
    /// dimension `dim`.
    pub fn type_of(idx: usize, dim: usize) -> usize {
        idx / dim + 1
    }

    pub fn is_positive(ty: usize) -> bool {
        ty % 2 == 1
    }
}

/// Checks that the action of `m` (over a snake category) never raises the
/// level and vanishes when a category input of type `> 2s + 1` meets a
/// module input of level `s`.
pub fn check_filtration_profile(m: &AInfModule, profile: &FiltrationProfile) -> Report {
    let mut report = Report::new("filtration");
    let base = m.base();
    if profile.levels.len() != base.objects() || (0..base.objects()).any(|n| profile.levels[n].len() != m.dim(n)) {
        report.violation("profile", "level profile does not match the module dimensions");
        return report;
    }
    for (t, comp) in m.action().components() {
        let k = t.len();
        let n_out = t[0];
        let n_in = t[k - 1];
        for (idx, out) in comp.table().iter().enumerate() {
            report.tick(1);
            if out.is_zero() {
                continue;
            }
            let basis = comp.basis_of(idx);
            let s = profile.levels[n_in][basis[k - 1]];
            if let Some(hi) = out.ones().find(|&o| profile.levels[n_out][o] > s) {
                report.violation(
                    format!("action at {:?} basis {:?}", t, basis),
                    format!("output level {} above input level {s}", profile.levels[n_out][hi]),
                );
                continue;
            }
            for i in 0..k - 1 {
                let dim = base.dim(t[i], t[i + 1]) / profile.l;
                let ty = FiltrationProfile::type_of(basis[i], dim.max(1));
                if ty > 2 * s + 1 {
                    report.violation(
                        format!("action at {:?} basis {:?}", t, basis),
                        format!("input of type o_{ty} acts on level {s}"),
                    );
                    break;
                }
            }
        }
    }
    report
}

/// Lifts `𝓜_m` to the snake category of length `l` along `c_1` and checks
/// it against the summand filtration, level `s` on `CF(N, L_s)`.
pub fn check_filtration(v: &CobordismDatum, built: &IteratedCones, l: usize) -> Result<Report, CobordismError> {
    let snake = SnakeCategory::new(v.category.clone(), l)?;
    let c1 = snake.projection(1)?;
    let lifted = pullback(&c1, &snake.total, built.top())?;
    let a = &v.category;
    let levels = (0..a.objects())
        .map(|n| {
            let mut lv = Vec::new();
            for s in (1..=v.m()).rev() {
                lv.extend(std::iter::repeat_n(s, a.dim(n, v.negative_ends[s - 1])));
            }
            lv
        })
        .collect();
    let mut report = check_filtration_profile(&lifted, &FiltrationProfile { l, levels });
    report.note("the snake-level module is the pullback along c_1; higher snake products are not determined by the datum");
    Ok(report)
}

/// `CF(N, L) → (CF(N, L_1), …, CF(N, L_m))`: the strict decomposition with
/// pieces `(CF(N, L_s), φ_s)` and `φ = φ_V` at `N`.
pub fn assemble_functor_value(v: &CobordismDatum, n: usize) -> Result<TSMorphism, CobordismError> {
    let phi_v = v.end_comparison.as_ref().ok_or(CobordismError::MissingEndComparison)?;
    let a = &v.category;
    let mut pieces = Vec::with_capacity(v.m());
    let first = a.hom_complex(n, v.negative_ends[0])?;
    pieces.push((first.clone(), BitMatrix::zeros(0, first.dim())));
    for (j, table) in v.connecting.iter().enumerate() {
        pieces.push((a.hom_complex(n, v.negative_ends[j + 1])?, table.linear_at(n)));
    }
    let decomposition = ConeDecomposition::strict(pieces)?;
    let source = a.hom_complex(n, v.positive_end)?;
    let phi = ChainMap::new(source, decomposition.top().clone(), phi_v.linear_at(n))?;
    if !is_quasi_iso(&phi)? {
        return Err(CobordismError::NotQuasiIso(a.name(n).to_string()));
    }
    Ok(TSMorphism::new(vec![Summand::new(phi, decomposition)?]))
}

/// Compares `assemble(V'')` with `(id + … + assemble(V') + … + id) ∘
/// assemble(V)` at every test object of `V`, where `V'` is glued to the end
/// `L_{i+1}` of `V` (zero-based `i`). Per-object witness lists are checked as
/// given; without them an equivalence is searched for.
pub fn check_composition_compatibility(
    v: &CobordismDatum,
    v_prime: &CobordismDatum,
    v_glued: &CobordismDatum,
    i: usize,
    witnesses: Option<&[Vec<Vec<ChainMap>>]>,
) -> Result<Report, CobordismError> {
    if !Arc::ptr_eq(&v.category, &v_prime.category) && v.category != v_prime.category
        || !Arc::ptr_eq(&v.category, &v_glued.category) && v.category != v_glued.category
    {
        return Err(CobordismError::InvalidDatum("data over different categories".into()));
    }
    if i >= v.m() || v_prime.positive_end != v.negative_ends[i] {
        return Err(CobordismError::InvalidDatum("V' does not start at the glued end".into()));
    }
    let a = &v.category;
    let mut report = Report::new("composition-compatibility");
    for (pos, &n) in v.test_objects.iter().enumerate() {
        let w = match witnesses {
            Some(ws) => Some(ws.get(pos).ok_or(CobordismError::MissingWitness)?.as_slice()),
            None => None,
        };
        let outer_v = assemble_functor_value(v, n)?;
        let inner = assemble_functor_value(v_prime, n)?;
        let ends: Vec<_> = v.negative_ends.iter().map(|&e| a.hom_complex(n, e)).collect::<Result<_, _>>()?;
        let glue = sum_ts(&sum_ts(&TSMorphism::identity(&ends[..i]), &inner), &TSMorphism::identity(&ends[i + 1..]));
        let composite = compose_ts(&glue, &outer_v)?;
        let direct = assemble_functor_value(v_glued, n)?;
        let r = check_ts_equivalence(&direct, &composite, w);
        report.tick(1);
        if !r.passed() {
            report.violation(format!("test object {}", a.name(n)), r.detail());
        }
    }
    Ok(report)
}

/// `φ_V` at `L` applied to a unit cycle of `CF(L, L)`, followed by the
/// projection onto the `CF(L, L_m)` summand; returns the homology class.
pub fn functor_class_from_unit(v: &CobordismDatum, unit: &BitVec) -> Result<BitVec, CobordismError> {
    let phi_v = v.end_comparison.as_ref().ok_or(CobordismError::MissingEndComparison)?;
    let a = &v.category;
    let l = v.positive_end;
    let cf = a.hom_complex(l, l)?;
    if unit.len() != cf.dim() || !cf.d().mul_vec(unit).is_zero() {
        return Err(CobordismError::NotACycle);
    }
    let image = phi_v.linear_at(l).mul_vec(unit);
    let last = a.hom_complex(l, *v.negative_ends.last().unwrap())?;
    Ok(last.homology().class_of(&image.slice(0, last.dim())))
}
