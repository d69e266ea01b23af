//! Exact triangles of chain complexes and iterated cone decompositions.

use super::ConeError;
use crate::f2::{cone_of_chain_map, induced_on_homology, BitMatrix, ChainComplex, ChainMap};
use crate::report::Report;

/// `x --u--> y --v--> z --w--> x` with a comparison `t : z → Cone(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTriangle {
    pub u: ChainMap,
    pub v: ChainMap,
    pub w: ChainMap,
    pub witness: Option<ChainMap>,
}

impl ChainTriangle {
    pub fn new(u: ChainMap, v: ChainMap, w: ChainMap, witness: Option<ChainMap>) -> Result<Self, ConeError> {
        if u.target != v.source || v.target != w.source || w.target != u.source {
            return Err(ConeError::Shape("maps do not close up into a triangle".into()));
        }
        if let Some(t) = &witness {
            if t.source != v.target {
                return Err(ConeError::Shape("witness must start at the cone vertex".into()));
            }
        }
        Ok(ChainTriangle { u, v, w, witness })
    }

    /// The strict triangle `x → y → Cone(u) → x` with `t = id`.
    pub fn strict(u: ChainMap) -> Self {
        let c = cone_of_chain_map(&u).expect("u is a chain map");
        let t = ChainMap::identity(&c.complex);
        ChainTriangle { u, v: c.inclusion, w: c.projection, witness: Some(t) }
    }

    pub fn x(&self) -> &ChainComplex {
        &self.u.source
    }

    pub fn y(&self) -> &ChainComplex {
        &self.u.target
    }

    pub fn z(&self) -> &ChainComplex {
        &self.v.target
    }

    /// Literally the strict cone of `u`.
    pub fn is_strict(&self) -> bool {
        let c = cone_of_chain_map(&self.u).expect("u is a chain map");
        self.v == c.inclusion
            && self.w == c.projection
            && self.witness.as_ref().is_some_and(|t| t.f == BitMatrix::identity(c.complex.dim()) && t.target == c.complex)
    }

    /// Exactness through the witness: `t` is a quasi-isomorphism into
    /// `Cone(u)` and on homology `H(t)H(v) = H(i)`, `H(π)H(t) = H(w)`.
    pub fn check(&self) -> Result<(), String> {
        let t = self.witness.as_ref().ok_or("no comparison witness")?;
        let c = cone_of_chain_map(&self.u).map_err(|e| e.to_string())?;
        if t.target != c.complex {
            return Err("witness does not land in Cone(u)".into());
        }
        let h = |m: &ChainMap| induced_on_homology(m).map_err(|e| e.to_string());
        let ht = h(t)?;
        if !ht.is_invertible() {
            return Err("witness is not a quasi-isomorphism".into());
        }
        if ht.mul(&h(&self.v)?) != h(&c.inclusion)? {
            return Err("H(t)H(v) differs from H(i)".into());
        }
        if h(&c.projection)?.mul(&ht) != h(&self.w)? {
            return Err("H(π)H(t) differs from H(w)".into());
        }
        Ok(())
    }
}

/// Triangles `X_i → Y_i → Y_{i+1} → X_i` for `i = 1..k` with `Y_1 = 0` and
/// `Y_{k+1} = A`. The linearization is `(X_1, …, X_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecomposition {
    triangles: Vec<ChainTriangle>,
}

impl ConeDecomposition {
    pub fn new(triangles: Vec<ChainTriangle>) -> Result<Self, ConeError> {
        if triangles.is_empty() {
            return Err(ConeError::Empty);
        }
        Ok(ConeDecomposition { triangles })
    }

    /// Strict decomposition from pieces `(X_i, u_i)` with `u_i : X_i → Y_i`
    /// given as a matrix and `Y_{i+1} = Cone(u_i) = X_i ⊕ Y_i`.
    pub fn strict(pieces: Vec<(ChainComplex, BitMatrix)>) -> Result<Self, ConeError> {
        if pieces.is_empty() {
            return Err(ConeError::Empty);
        }
        let mut y = ChainComplex::zero();
        let mut triangles = Vec::with_capacity(pieces.len());
        for (x, u) in pieces {
            let u = ChainMap::new(x, y, u)?;
            let t = ChainTriangle::strict(u);
            y = t.z().clone();
            triangles.push(t);
        }
        Ok(ConeDecomposition { triangles })
    }

    /// `0 → A → A`, the length-one decomposition of `A`.
    pub fn trivial(a: &ChainComplex) -> Self {
        Self::strict(vec![(a.clone(), BitMatrix::zeros(0, a.dim()))]).expect("zero map")
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangles(&self) -> &[ChainTriangle] {
        &self.triangles
    }

    pub fn linearization(&self) -> Vec<ChainComplex> {
        self.triangles.iter().map(|t| t.x().clone()).collect()
    }

    /// `Y_{k+1} = A`.
    pub fn top(&self) -> &ChainComplex {
        self.triangles.last().expect("nonempty").z()
    }

    /// `Y_i` for `1 ≤ i ≤ k + 1`.
    pub fn stage(&self, i: usize) -> &ChainComplex {
        if i <= self.len() {
            self.triangles[i - 1].y()
        } else {
            self.top()
        }
    }

    pub fn is_strict(&self) -> bool {
        self.triangles[0].y().dim() == 0
            && self.triangles.windows(2).all(|w| w[0].z() == w[1].y())
            && self.triangles.iter().all(ChainTriangle::is_strict)
    }

    /// First failure found by [`check_cone_decomposition`].
    pub fn validate(&self) -> Result<(), ConeError> {
        if self.triangles[0].y().dim() != 0 {
            return Err(ConeError::NonzeroStart);
        }
        for (i, w) in self.triangles.windows(2).enumerate() {
            if w[0].z() != w[1].y() {
                return Err(ConeError::BrokenChain(i + 1));
            }
        }
        for (i, t) in self.triangles.iter().enumerate() {
            t.check().map_err(|e| ConeError::TriangleFailure(i + 1, e))?;
        }
        Ok(())
    }

    /// A strict decomposition with the same linearization together with a
    /// quasi-isomorphism `s : A → A'` onto its top. Strict input is returned
    /// unchanged with `s = id`.
    pub fn strictify(&self) -> Result<(ConeDecomposition, ChainMap), ConeError> {
        if self.is_strict() {
            return Ok((self.clone(), ChainMap::identity(self.top())));
        }
        self.validate()?;
        let mut s = ChainMap::zero(self.triangles[0].y(), &ChainComplex::zero());
        let mut out = Vec::with_capacity(self.len());
        for t in &self.triangles {
            let u = s.compose(&t.u)?;
            let strict = ChainTriangle::strict(u);
            let nx = t.x().dim();
            let lift = ChainMap {
                source: cone_of_chain_map(&t.u)?.complex,
                target: strict.z().clone(),
                f: BitMatrix::block_diag(&BitMatrix::identity(nx), &s.f),
            };
            s = lift.compose(t.witness.as_ref().expect("validated"))?;
            out.push(strict);
        }
        Ok((ConeDecomposition { triangles: out }, s))
    }
}

/// Checks `Y_1 = 0`, that consecutive triangles share `Y_{i+1}`, and that
/// every triangle is exact through its witness.
pub fn check_cone_decomposition(eta: &ConeDecomposition) -> Report {
    let mut report = Report::new("cone-decomposition");
    report.tick(1);
    if eta.triangles[0].y().dim() != 0 {
        report.violation("Y_1", format!("{}", ConeError::NonzeroStart));
    }
    for (i, w) in eta.triangles.windows(2).enumerate() {
        report.tick(1);
        if w[0].z() != w[1].y() {
            report.violation(format!("Y_{}", i + 2), format!("{}", ConeError::BrokenChain(i + 1)));
        }
    }
    for (i, t) in eta.triangles.iter().enumerate() {
        report.tick(1);
        if let Err(e) = t.check() {
            report.violation(format!("triangle {}", i + 1), e);
        }
    }
    report
}
