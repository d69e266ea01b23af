//! Exact triangles of modules, certified by a comparison with the cone.

use super::cone::cone;
use super::module::{check_module_morphism, ModuleMorphism};
use super::ModuleError;
use crate::f2::{induced_on_homology, BitMatrix};
use crate::report::Report;

/// `M' --ν--> M'' --j--> C --p--> M'` together with a comparison
/// `t : C → Cone(ν)`.
#[derive(Clone, Debug)]
pub struct ExactTriangleCertificate {
    pub nu: ModuleMorphism,
    pub j: ModuleMorphism,
    pub p: ModuleMorphism,
    pub witness: Option<ModuleMorphism>,
}

/// Verifies the certificate:
/// `ν, j, p, t` are module morphisms, `t` is a quasi-isomorphism at every
/// object, and on homology `H(t)H(j) = H(i)` and `H(π)H(t) = H(p)` hold at
/// every object.
pub fn verify_exact_triangle(cert: &ExactTriangleCertificate) -> Result<Report, ModuleError> {
    let t = cert.witness.as_ref().ok_or(ModuleError::MissingWitness)?;
    let mut report = Report::new("exact-triangle");
    if cert.j.source != cert.nu.target || cert.p.target != cert.nu.source || cert.p.source != cert.j.target {
        return Err(ModuleError::Shape("ν, j, p do not form a triangle".into()));
    }
    if t.source != cert.j.target {
        return Err(ModuleError::Shape("witness must start at the third vertex".into()));
    }
    for (name, m) in [("ν", &cert.nu), ("j", &cert.j), ("p", &cert.p), ("t", t)] {
        report.tick(1);
        if !check_module_morphism(m).passed() {
            report.violation(name, "not a module morphism");
        }
    }
    if !report.passed() {
        return Ok(report);
    }
    let c = cone(&cert.nu)?;
    if t.target != c.module {
        return Err(ModuleError::Shape("witness must land in Cone(ν)".into()));
    }
    let hom = |m: &ModuleMorphism, l: usize| -> Result<BitMatrix, ModuleError> { Ok(induced_on_homology(&m.chain_map_at(l)?)?) };
    for l in 0..cert.nu.base().objects() {
        let name = cert.nu.base().name(l).to_string();
        let ht = hom(t, l)?;
        report.tick(3);
        if !ht.is_invertible() {
            report.violation(format!("object {name}"), "t is not a quasi-isomorphism");
            continue;
        }
        if ht.mul(&hom(&cert.j, l)?) != hom(&c.inclusion, l)? {
            report.violation(format!("object {name}"), "H(t)H(j) differs from H(i)");
        }
        if hom(&c.projection, l)?.mul(&ht) != hom(&cert.p, l)? {
            report.violation(format!("object {name}"), "H(π)H(t) differs from H(p)");
        }
    }
    Ok(report)
}
