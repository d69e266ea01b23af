//! The cobordism group and K₀ over F₂, and the check that the comparison
//! map between them is well defined.
//!
//! Ungraded K₀ is 2-torsion, so every relation is a vector over F₂. A
//! triangle `X → Y → Z` contributes `X + Y + Z`.

use thiserror::Error;

use crate::cobordism::{build_iterated_cones, CobordismDatum, CobordismError};
use crate::cone_calc::ConeDecomposition;
use crate::f2::{in_span, span_rank, BitVec};
use crate::modules::verify_exact_triangle;
use crate::report::Report;

/// Name reserved for the zero object in triangle lists.
pub const ZERO: &str = "0";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KError {
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("relation has length {got}, expected {expected}")]
    RelationLength { expected: usize, got: usize },
    #[error("object map has {got} entries for {expected} generators")]
    ObjectMap { expected: usize, got: usize },
    #[error("the top module is not acyclic at {0}")]
    NotAcyclic(String),
    #[error(transparent)]
    Cobordism(#[from] CobordismError),
}

/// Free F₂-vector space on named generators modulo relation vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relations: Vec<BitVec>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<BitVec>) -> Result<Self, KError> {
        let n = generators.len();
        if let Some(r) = relations.iter().find(|r| r.len() != n) {
            return Err(KError::RelationLength { expected: n, got: r.len() });
        }
        Ok(GroupPresentation { generators, relations })
    }

    pub fn free(generators: Vec<String>) -> Self {
        GroupPresentation { generators, relations: Vec::new() }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[BitVec] {
        &self.relations
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn add_relation(&mut self, r: BitVec) -> Result<(), KError> {
        if r.len() != self.generators.len() {
            return Err(KError::RelationLength { expected: self.generators.len(), got: r.len() });
        }
        self.relations.push(r);
        Ok(())
    }

    /// Appends a generator (no-op if present) and pads existing relations.
    pub fn add_generator(&mut self, name: &str) -> usize {
        if let Some(i) = self.index_of(name) {
            return i;
        }
        self.generators.push(name.to_string());
        let n = self.generators.len();
        for r in &mut self.relations {
            *r = r.concat(&BitVec::zeros(1));
            debug_assert_eq!(r.len(), n);
        }
        n - 1
    }

    /// The sum of the named generators, or `UnknownObject`. `ZERO` adds nothing.
    pub fn vector(&self, names: &[&str]) -> Result<BitVec, KError> {
        let mut v = BitVec::zeros(self.generators.len());
        for &name in names {
            if name == ZERO {
                continue;
            }
            let i = self.index_of(name).ok_or_else(|| KError::UnknownObject(name.to_string()))?;
            v.flip(i);
        }
        Ok(v)
    }

    pub fn is_relation(&self, v: &BitVec) -> bool {
        v.is_zero() || in_span(&self.relations, v)
    }
}

/// `n − rank(relations)`.
pub fn quotient_rank(p: &GroupPresentation) -> usize {
    p.generators.len() - span_rank(&p.relations, p.generators.len())
}

/// K₀ with one relation per declared triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Presentation {
    pub presentation: GroupPresentation,
    pub triangles: Vec<[String; 3]>,
}

impl K0Presentation {
    pub fn rank(&self) -> usize {
        quotient_rank(&self.presentation)
    }

    pub fn add_triangle(&mut self, x: &str, y: &str, z: &str) -> Result<(), KError> {
        let r = self.presentation.vector(&[x, y, z])?;
        self.presentation.add_relation(r)?;
        self.triangles.push([x.to_string(), y.to_string(), z.to_string()]);
        Ok(())
    }
}

pub fn k0_from_triangles<S: AsRef<str>>(objects: &[S], triangles: &[[S; 3]]) -> Result<K0Presentation, KError> {
    let names = objects.iter().map(|o| o.as_ref().to_string()).collect();
    let mut k0 = K0Presentation { presentation: GroupPresentation::free(names), triangles: Vec::new() };
    for [x, y, z] in triangles {
        k0.add_triangle(x.as_ref(), y.as_ref(), z.as_ref())?;
    }
    Ok(k0)
}

/// Checks that each relation of `gcob` maps into the relation span of `k0`.
/// `object_map[g]` is the K₀ generator of cobordism generator `g`.
pub fn theta_well_defined(gcob: &GroupPresentation, k0: &K0Presentation, object_map: &[usize]) -> Result<Report, KError> {
    let n = gcob.generators.len();
    if object_map.len() != n {
        return Err(KError::ObjectMap { expected: n, got: object_map.len() });
    }
    let target = k0.presentation.generators.len();
    if let Some(&bad) = object_map.iter().find(|&&t| t >= target) {
        return Err(KError::UnknownObject(format!("K0 generator #{bad}")));
    }
    let mut report = Report::new("theta-well-defined");
    for (i, r) in gcob.relations.iter().enumerate() {
        report.tick(1);
        let mut image = BitVec::zeros(target);
        for g in r.ones() {
            image.flip(object_map[g]);
        }
        if !k0.presentation.is_relation(&image) {
            let names: Vec<_> = r.ones().map(|g| gcob.generators[g].as_str()).collect();
            report.violation(format!("relation {i}"), format!("{} is not in the K0 relation span", names.join("+")));
        }
    }
    Ok(report)
}

/// Generators `Y1..Y{k+1}` and `X1..Xk` of a decomposition, with one relation
/// per triangle that passes its check and `Y1 = 0`. `[A] = [Y{k+1}]`.
pub fn k0_of_decomposition(eta: &ConeDecomposition) -> K0Presentation {
    let k = eta.len();
    let mut names: Vec<String> = (1..=k + 1).map(|i| format!("Y{i}")).collect();
    names.extend((1..=k).map(|i| format!("X{i}")));
    let mut k0 = K0Presentation { presentation: GroupPresentation::free(names), triangles: Vec::new() };
    k0.add_triangle("Y1", ZERO, ZERO).expect("declared");
    for (i, t) in eta.triangles().iter().enumerate() {
        if t.check().is_ok() {
            let (x, y, z) = (format!("X{}", i + 1), format!("Y{}", i + 1), format!("Y{}", i + 2));
            k0.add_triangle(&x, &y, &z).expect("declared");
        }
    }
    k0
}

/// Names used for the stages `𝓜_j` of a datum.
pub fn stage_name(j: usize) -> String {
    format!("M{j}")
}

/// The category's objects plus stages `M1..Mm`, with `M1 = L_1` and one
/// relation `L_j + M_{j−1} + M_j` for every certified triangle.
pub fn k0_of_datum(v: &CobordismDatum) -> Result<K0Presentation, KError> {
    let a = &v.category;
    let built = build_iterated_cones(v)?;
    let mut names: Vec<String> = (0..a.objects()).map(|i| a.name(i).to_string()).collect();
    names.extend((1..=v.m()).map(stage_name));
    let mut k0 = K0Presentation { presentation: GroupPresentation::free(names), triangles: Vec::new() };
    k0.add_triangle(ZERO, a.name(v.negative_ends[0]), &stage_name(1))?;
    for (j, tri) in built.triangles.iter().enumerate() {
        let ok = verify_exact_triangle(tri).map(|r| r.passed()).unwrap_or(false);
        if ok {
            k0.add_triangle(a.name(v.negative_ends[j + 1]), &stage_name(j + 1), &stage_name(j + 2))?;
        }
    }
    Ok(k0)
}

/// `[𝓜_m] + Σ [L_i]` as a vector over the generators of `k0_of_datum`.
pub fn stage_relation(v: &CobordismDatum, k0: &K0Presentation) -> Result<BitVec, KError> {
    let a = &v.category;
    let top = stage_name(v.m());
    let mut names: Vec<&str> = v.negative_ends.iter().map(|&e| a.name(e)).collect();
    names.push(&top);
    k0.presentation.vector(&names)
}

/// For a datum whose top module is acyclic at every test object, adds
/// `𝓜_m = 0` and the datum's certified triangles to `k0` and checks that
/// `Σ [L_i] = 0` follows. Generators of `k0` must include the ends by name.
pub fn verify_null_cobordism(v: &CobordismDatum, k0: &K0Presentation) -> Result<Report, KError> {
    let a = &v.category;
    let built = build_iterated_cones(v)?;
    for &n in &v.test_objects {
        if !built.top().complex_at(n).map_err(CobordismError::from)?.is_acyclic() {
            return Err(KError::NotAcyclic(a.name(n).to_string()));
        }
    }
    let mut ext = k0.clone();
    for &e in &v.negative_ends {
        if ext.presentation.index_of(a.name(e)).is_none() {
            return Err(KError::UnknownObject(a.name(e).to_string()));
        }
    }
    for j in 1..=v.m() {
        ext.presentation.add_generator(&stage_name(j));
    }
    let local = k0_of_datum(v)?;
    for [x, y, z] in &local.triangles {
        for name in [x, y, z] {
            if name != ZERO {
                ext.presentation.add_generator(name);
            }
        }
        ext.add_triangle(x, y, z)?;
    }
    ext.add_triangle(&stage_name(v.m()), ZERO, ZERO)?;
    let ends: Vec<&str> = v.negative_ends.iter().map(|&e| a.name(e)).collect();
    let target = ext.presentation.vector(&ends)?;
    let mut report = Report::new("null-cobordism");
    report.tick(1);
    if !ext.presentation.is_relation(&target) {
        report.violation("ends", format!("{} is not zero in K0", ends.join("+")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::{realize_towers, Tower};
    use crate::f2::ChainComplex;
    use crate::gen;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("g{i}")).collect()
    }

    #[test]
    fn quotient_ranks() {
        assert_eq!(quotient_rank(&GroupPresentation::free(names(3))), 3);
        let basis = (0..3).map(|i| BitVec::unit(3, i)).collect();
        assert_eq!(quotient_rank(&GroupPresentation::new(names(3), basis).unwrap()), 0);
        let rels = vec![BitVec::parse("110").unwrap(), BitVec::parse("011").unwrap()];
        assert_eq!(quotient_rank(&GroupPresentation::new(names(3), rels).unwrap()), 1);
        assert!(GroupPresentation::new(names(2), vec![BitVec::zeros(3)]).is_err());
    }

    #[test]
    fn triangles_to_relations() {
        let k0 = k0_from_triangles::<&str>(&["X", "Y"], &[]).unwrap();
        assert_eq!(k0.rank(), 2);
        let k0 = k0_from_triangles(&["X"], &[["X", "X", "0"]]).unwrap();
        assert!(k0.presentation.relations()[0].is_zero());
        assert_eq!(k0.rank(), 1);
        assert_eq!(k0_from_triangles(&["X"], &[["X", "W", "0"]]), Err(KError::UnknownObject("W".into())));
    }

    #[test]
    fn decomposition_relation() {
        let mut rng = gen::rng(5);
        let eta = gen::random_decomposition(&mut rng, 3, 2);
        let k0 = k0_of_decomposition(&eta);
        let v = k0.presentation.vector(&["Y4", "X1", "X2", "X3"]).unwrap();
        assert!(k0.presentation.is_relation(&v));
        let partial = k0.presentation.vector(&["Y4", "X1", "X2"]).unwrap();
        assert!(!k0.presentation.is_relation(&partial));
    }

    #[test]
    fn theta_checks() {
        let k0 = k0_from_triangles(&["A", "B", "C"], &[["A", "B", "C"]]).unwrap();
        let empty = GroupPresentation::free(vec!["A".into()]);
        assert!(theta_well_defined(&empty, &k0, &[0]).unwrap().passed());
        let g = GroupPresentation::new(vec!["A".into(), "B".into()], vec![BitVec::parse("11").unwrap()]).unwrap();
        assert!(!theta_well_defined(&g, &k0, &[0, 1]).unwrap().passed());
        let g = GroupPresentation::new(vec!["A".into(), "B".into(), "C".into()], vec![BitVec::parse("111").unwrap()]).unwrap();
        assert!(theta_well_defined(&g, &k0, &[0, 1, 2]).unwrap().passed());
        assert!(theta_well_defined(&g, &k0, &[0, 1]).is_err());
    }

    #[test]
    fn null_data() {
        let mut rng = gen::rng(11);
        for m in [2, 3] {
            let t = Tower::random_null(&mut rng, m, 2);
            let (a, data) = realize_towers(&[t], &[ChainComplex::trivial(1)], 4).unwrap();
            let v = &data[0];
            let objs: Vec<String> = (0..a.objects()).map(|i| a.name(i).to_string()).collect();
            let k0 = k0_from_triangles::<String>(&objs, &[]).unwrap();
            assert!(verify_null_cobordism(v, &k0).unwrap().passed());
            let ledger = k0_of_datum(v).unwrap();
            assert!(ledger.presentation.is_relation(&stage_relation(v, &ledger).unwrap()));
        }
        let t = Tower::identity(&ChainComplex::trivial(1));
        let (a, data) = realize_towers(&[t], &[ChainComplex::trivial(1)], 4).unwrap();
        let k0 = k0_from_triangles(&[a.name(0)], &[]).unwrap();
        assert!(matches!(verify_null_cobordism(&data[0], &k0), Err(KError::NotAcyclic(_))));
    }
}
