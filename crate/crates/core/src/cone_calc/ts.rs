//! Morphisms of stable triangle resolutions and their composition.

use super::decomposition::ConeDecomposition;
use super::ConeError;
use crate::f2::{homotopy_inverse, is_quasi_iso, BitMatrix, ChainComplex, ChainMap, ChainError};

/// One summand `x → (y_α, …, y_{α+ν})`: a quasi-isomorphism `φ : x → a`
/// and a cone decomposition of `a` whose linearization is the block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub phi: ChainMap,
    pub decomposition: ConeDecomposition,
    /// Always 0; the setting is ungraded.
    pub shift: i32,
}

impl Summand {
    pub fn new(phi: ChainMap, decomposition: ConeDecomposition) -> Result<Self, ConeError> {
        if &phi.target != decomposition.top() {
            return Err(ConeError::Shape("φ must land in the decomposed complex".into()));
        }
        if !is_quasi_iso(&phi)? {
            return Err(ConeError::NoHomotopyInverse);
        }
        Ok(Summand { phi, decomposition, shift: 0 })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.phi.source
    }

    fn strictified(&self) -> Result<Summand, ConeError> {
        let (decomposition, s) = self.decomposition.strictify()?;
        Ok(Summand { phi: s.compose(&self.phi)?, decomposition, shift: 0 })
    }
}

/// A morphism `(x_1, …, x_r) → (y_1, …, y_n)` given by one summand per
/// source entry; the blocks of the summands partition the target in order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TSMorphism {
    summands: Vec<Summand>,
}

impl TSMorphism {
    pub fn new(summands: Vec<Summand>) -> Self {
        TSMorphism { summands }
    }

    /// The morphism out of the empty family.
    pub fn empty() -> Self {
        TSMorphism::default()
    }

    /// Identity of a family: each entry with its trivial decomposition.
    pub fn identity(family: &[ChainComplex]) -> Self {
        let summands = family
            .iter()
            .map(|x| Summand { phi: ChainMap::identity(x), decomposition: ConeDecomposition::trivial(x), shift: 0 })
            .collect();
        TSMorphism { summands }
    }

    /// `φ̄ : x → (y)` for a quasi-isomorphism `φ : x → y`.
    pub fn lift(phi: &ChainMap) -> Result<Self, ConeError> {
        let s = Summand::new(phi.clone(), ConeDecomposition::trivial(&phi.target))?;
        Ok(TSMorphism { summands: vec![s] })
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn source(&self) -> Vec<ChainComplex> {
        self.summands.iter().map(|s| s.source().clone()).collect()
    }

    pub fn target(&self) -> Vec<ChainComplex> {
        self.summands.iter().flat_map(|s| s.decomposition.linearization()).collect()
    }

    /// `(α(j), ν(j))` per summand, zero-based: summand `j` covers target
    /// entries `α(j) ..= α(j) + ν(j)`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.summands
            .iter()
            .map(|s| {
                let b = (start, s.decomposition.len() - 1);
                start += s.decomposition.len();
                b
            })
            .collect()
    }
}

/// Monoidal sum: concatenation of families and summands.
pub fn sum_ts(a: &TSMorphism, b: &TSMorphism) -> TSMorphism {
    let mut summands = a.summands.clone();
    summands.extend(b.summands.iter().cloned());
    TSMorphism { summands }
}

/// `𝒫(Φ) = w_k ∘ φ` for the last summand: a map into the last target entry.
pub fn project_ts(phi: &TSMorphism) -> Result<ChainMap, ConeError> {
    let s = phi.summands.last().ok_or(ConeError::Empty)?;
    let w = &s.decomposition.triangles().last().expect("nonempty").w;
    Ok(w.compose(&s.phi)?)
}

/// `Φ ∘ Φ'` where `Φ' : x → y` and `Φ : y → z`.
pub fn compose_ts(phi: &TSMorphism, phi_prime: &TSMorphism) -> Result<TSMorphism, ConeError> {
    let mid = phi_prime.target();
    let src = phi.source();
    if mid != src {
        return Err(ConeError::TupleMismatch(format!(
            "first morphism has {} target entries, second has {} source entries or they differ",
            mid.len(),
            src.len()
        )));
    }
    let inner: Vec<Summand> = phi.summands.iter().map(Summand::strictified).collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(phi_prime.summands.len());
    for (s, (alpha, nu)) in phi_prime.summands.iter().zip(phi_prime.blocks()) {
        let mut acc = s.strictified()?;
        for h in (0..=nu).rev() {
            acc = insert(&acc, h, &inner[alpha + h])?;
        }
        out.push(acc);
    }
    Ok(TSMorphism { summands: out })
}

/// Replaces entry `h` of a strict summand's linearization by the
/// decomposition of a strict summand `Ψ : y_h → (z_1, …, z_p)`.
fn insert(outer: &Summand, h: usize, psi: &Summand) -> Result<Summand, ConeError> {
    let tri = outer.decomposition.triangles();
    let k = tri.len();
    let inner = psi.decomposition.triangles();
    let p = inner.len();
    let a = psi.decomposition.top();
    let u_h = &tri[h].u;
    let nh = u_h.target.dim();
    let inv = homotopy_inverse(&psi.phi).map_err(|e| match e {
        ChainError::NotQuasiIso => ConeError::NoHomotopyInverse,
        e => e.into(),
    })?;
    let g = &inv.inverse.f;
    // α_q = u'_h ∘ G ∘ β_q, with Y_q the tail of a.
    let ug = u_h.f.mul(g);
    let alpha = |q: usize| -> BitMatrix {
        let dq = psi.decomposition.stage(q).dim();
        ug.submatrix(0, nh, a.dim() - dq, dq)
    };
    let mut pieces: Vec<(ChainComplex, BitMatrix)> =
        tri[..h].iter().map(|t| (t.x().clone(), t.u.f.clone())).collect();
    for (q, t) in inner.iter().enumerate() {
        let nz = t.x().dim();
        let next = alpha(q + 2).submatrix(0, nh, 0, nz);
        pieces.push((t.x().clone(), t.u.f.vstack(&next)));
    }
    // ψ_{h+1}(y, w) = (φ y, w + u'_h H_s y)
    let ny = u_h.source.dim();
    let mut psi_map = BitMatrix::block(
        &psi.phi.f,
        &BitMatrix::zeros(a.dim(), nh),
        &u_h.f.mul(&inv.source_homotopy),
        &BitMatrix::identity(nh),
    );
    debug_assert_eq!(psi_map.cols(), ny + nh);
    for t in &tri[h + 1..] {
        pieces.push((t.x().clone(), psi_map.mul(&t.u.f)));
        psi_map = BitMatrix::block_diag(&BitMatrix::identity(t.x().dim()), &psi_map);
    }
    let decomposition = ConeDecomposition::strict(pieces)?;
    debug_assert_eq!(decomposition.len(), k + p - 1);
    let phi = ChainMap::new(outer.phi.source.clone(), decomposition.top().clone(), psi_map.mul(&outer.phi.f))?;
    Ok(Summand { phi, decomposition, shift: 0 })
}
