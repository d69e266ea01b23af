//! A∞-categories over GF(2).

use super::extended::{compose_star, ExtendedMap, HomCollection};
use super::multilinear::Multilinear;
use super::AinfError;
use crate::f2::{BitMatrix, BitVec, ChainComplex, ChainError};
use crate::report::Report;

/// Objects, hom spaces and compositions `μ_k` with `μ ⋆ μ = 0`.
///
/// Inputs follow the order `C(X_1,X_2) ⊗ … ⊗ C(X_k,X_{k+1}) → C(X_1,X_{k+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfCategory {
    mu: ExtendedMap,
}

impl AInfCategory {
    /// Wraps a structure map. Validity of the A∞ relation is checked separately.
    pub fn new(mu: ExtendedMap) -> Result<Self, AinfError> {
        if !mu.has_identity_index() {
            return Err(AinfError::CollectionMismatch("μ must be an endomorphism with identity object action".into()));
        }
        Ok(AInfCategory { mu })
    }

    pub fn hom(&self) -> &HomCollection {
        self.mu.source()
    }

    pub fn mu(&self) -> &ExtendedMap {
        &self.mu
    }

    pub fn objects(&self) -> usize {
        self.hom().objects()
    }

    pub fn name(&self, i: usize) -> &str {
        self.hom().name(i)
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.hom().dim(i, j)
    }

    pub fn arity_cap(&self) -> usize {
        self.mu.arity_cap()
    }

    /// `μ_1` on `C(i, j)`.
    pub fn mu1(&self, i: usize, j: usize) -> BitMatrix {
        match self.mu.component(&[i, j]) {
            Some(m) => m.to_matrix(),
            None => BitMatrix::zeros(self.dim(i, j), self.dim(i, j)),
        }
    }

    pub fn hom_complex(&self, i: usize, j: usize) -> Result<ChainComplex, ChainError> {
        ChainComplex::new(self.mu1(i, j))
    }

    /// `μ_2(a, b)` for `a ∈ C(i,j)`, `b ∈ C(j,k)`.
    pub fn mu2(&self, i: usize, j: usize, k: usize, a: &BitVec, b: &BitVec) -> BitVec {
        self.mu.eval(&[i, j, k], &[a.clone(), b.clone()])
    }

    /// The dg-category whose objects are the given complexes, with
    /// `C(X, Y) = Hom(X, Y)`, `μ_1 f = d f + f d` and `μ_2(a, b) = b ∘ a`.
    ///
    /// The basis element `E_{r,c}` of `Hom(X, Y)` (sending `e_c` to `e_r`) has
    /// index `r · dim X + c`.
    pub fn dg_of_complexes(names: Vec<String>, complexes: &[ChainComplex], arity_cap: usize) -> Result<Self, AinfError> {
        if names.len() != complexes.len() {
            return Err(AinfError::DimensionMismatch("one name per complex".into()));
        }
        let dims: Vec<usize> = complexes.iter().map(ChainComplex::dim).collect();
        let hom = HomCollection::from_fn(names, |i, j| dims[i] * dims[j]);
        let mut mu = ExtendedMap::zero_endo(&hom, arity_cap.max(2));
        let n = complexes.len();
        for i in 0..n {
            for j in 0..n {
                let (di, dj) = (dims[i], dims[j]);
                if di * dj == 0 {
                    continue;
                }
                let table = (0..di * dj)
                    .map(|idx| {
                        let e = elementary(dj, di, idx / di, idx % di);
                        let m = complexes[j].d().mul(&e).add(&e.mul(complexes[i].d()));
                        hom_vector(&m)
                    })
                    .collect();
                mu.set_component(vec![i, j], Multilinear::from_table(vec![di * dj], di * dj, table))?;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (di, dj, dk) = (dims[i], dims[j], dims[k]);
                    if di * dj == 0 || dj * dk == 0 || di * dk == 0 {
                        continue;
                    }
                    let mut m = Multilinear::zeros(vec![di * dj, dj * dk], di * dk);
                    for r1 in 0..dj {
                        for c1 in 0..di {
                            for r2 in 0..dk {
                                let out = BitVec::unit(di * dk, r2 * di + c1);
                                m.set(&[r1 * di + c1, r2 * dj + r1], out);
                            }
                        }
                    }
                    mu.set_component(vec![i, j, k], m)?;
                }
            }
        }
        AInfCategory::new(mu)
    }

    /// Changes the declared arity cap.
    pub fn with_arity_cap(mut self, cap: usize) -> Result<Self, AinfError> {
        self.mu.set_arity_cap(cap)?;
        Ok(self)
    }
}

fn elementary(rows: usize, cols: usize, r: usize, c: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    m.set(r, c, true);
    m
}

/// Coordinates of a linear map `X → Y` in the basis `E_{r,c}` of `Hom(X, Y)`.
pub fn hom_vector(m: &BitMatrix) -> BitVec {
    let (rows, cols) = (m.rows(), m.cols());
    let mut v = BitVec::zeros(rows * cols);
    for r in 0..rows {
        for c in m.row(r).ones() {
            v.set(r * cols + c, true);
        }
    }
    v
}

/// Inverse of [`hom_vector`] for a map `F2^cols → F2^rows`.
pub fn hom_matrix(v: &BitVec, rows: usize, cols: usize) -> BitMatrix {
    assert_eq!(v.len(), rows * cols);
    let mut m = BitMatrix::zeros(rows, cols);
    for idx in v.ones() {
        m.set(idx / cols, idx % cols, true);
    }
    m
}

/// Evaluates `μ ⋆ μ` and lists every nonzero output.
///
/// Components vanish above the effective arity `e`, so `μ ⋆ μ` vanishes above
/// `2e − 1`; every arity up to the declared `2 · cap` is therefore covered.
pub fn check_a_infinity(a: &AInfCategory) -> Report {
    let mut report = Report::new("a-infinity");
    let eff = a.mu.effective_arity();
    report.note(format!(
        "arity cap {}; effective arity {}; relation complete through arity {}",
        a.arity_cap(),
        eff,
        2 * a.arity_cap()
    ));
    let mm = match compose_star(&a.mu, &a.mu) {
        Ok(m) => m,
        Err(e) => return Report::error("a-infinity", e.to_string()),
    };
    report.tick(count_basis_tuples(a.hom(), (2 * eff).saturating_sub(1)));
    for (t, m) in mm.components() {
        for (idx, v) in m.table().iter().enumerate() {
            if !v.is_zero() {
                report.violation(
                    format!("mu*mu {} ({})", fmt_tuple(a.hom(), t), fmt_basis(&m.basis_of(idx))),
                    format!("-> {v}"),
                );
            }
        }
    }
    report
}

pub(crate) fn count_basis_tuples(c: &HomCollection, max_arity: usize) -> usize {
    let mut total = 0;
    for k in 1..=max_arity {
        super::multilinear::for_each_tuple(c.objects(), k + 1, |t| {
            total += c.chain_dims(t).iter().product::<usize>();
        });
    }
    total
}

pub(crate) fn fmt_tuple(c: &HomCollection, t: &[usize]) -> String {
    t.iter().map(|&i| c.name(i)).collect::<Vec<_>>().join(" ")
}

pub(crate) fn fmt_basis(b: &[usize]) -> String {
    b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_object(mu1: Option<&str>, mu2: Option<&str>) -> AInfCategory {
        let hom = HomCollection::new(vec!["X".into()], vec![vec![1]]).unwrap();
        let mut mu = ExtendedMap::zero_endo(&hom, 4);
        if let Some(b) = mu1 {
            mu.set_entry(&[0, 0], &[0], BitVec::parse(b).unwrap()).unwrap();
        }
        if let Some(b) = mu2 {
            mu.set_entry(&[0, 0, 0], &[0, 0], BitVec::parse(b).unwrap()).unwrap();
        }
        AInfCategory::new(mu).unwrap()
    }

    #[test]
    fn idempotent_algebra_passes() {
        assert!(check_a_infinity(&one_object(None, Some("1"))).passed());
    }

    #[test]
    fn non_differential_fails() {
        let r = check_a_infinity(&one_object(Some("1"), Some("1")));
        assert!(!r.passed());
    }

    #[test]
    fn complexes_form_a_dg_category() {
        let c = ChainComplex::from_images(&[BitVec::parse("00").unwrap(), BitVec::parse("10").unwrap()]).unwrap();
        let a = AInfCategory::dg_of_complexes(
            vec!["P".into(), "Q".into(), "R".into()],
            &[c, ChainComplex::trivial(1), ChainComplex::trivial(2)],
            4,
        )
        .unwrap();
        assert!(check_a_infinity(&a).passed());
    }

    #[test]
    fn hom_vector_round_trip() {
        let m = BitMatrix::from_strs(&["101", "011"]);
        assert_eq!(hom_matrix(&hom_vector(&m), 2, 3), m);
    }
}
