//! Ungraded chain complexes over GF(2), homology, chain maps and mapping cones.

use super::bits::{in_span, BitMatrix, BitVec};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("differential does not square to zero")]
    NotDifferential,
    #[error("map does not commute with the differentials")]
    NotChainMap,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not a quasi-isomorphism")]
    NotQuasiIso,
}

/// A finite-dimensional complex `(F2^dim, d)` with `d² = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    d: BitMatrix,
}

impl std::fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainComplex(dim {}) {:?}", self.dim(), self.d)
    }
}

impl ChainComplex {
    pub fn new(d: BitMatrix) -> Result<Self, ChainError> {
        if d.rows() != d.cols() {
            return Err(ChainError::DimensionMismatch(format!(
                "differential is {}x{}",
                d.rows(),
                d.cols()
            )));
        }
        if !d.mul(&d).is_zero() {
            return Err(ChainError::NotDifferential);
        }
        Ok(ChainComplex { d })
    }

    /// Complex with zero differential.
    pub fn trivial(dim: usize) -> Self {
        ChainComplex { d: BitMatrix::zeros(dim, dim) }
    }

    pub fn zero() -> Self {
        Self::trivial(0)
    }

    /// Builds a complex from the images `d(e_1), d(e_2), …`.
    pub fn from_images(images: &[BitVec]) -> Result<Self, ChainError> {
        let n = images.len();
        if images.iter().any(|v| v.len() != n) {
            return Err(ChainError::DimensionMismatch("image width differs from dimension".into()));
        }
        Self::new(BitMatrix::from_columns(images, n))
    }

    pub fn dim(&self) -> usize {
        self.d.rows()
    }

    pub fn d(&self) -> &BitMatrix {
        &self.d
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        ChainComplex { d: BitMatrix::block_diag(&self.d, &other.d) }
    }

    pub fn homology(&self) -> Homology {
        Homology::compute(self)
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology().rank == 0
    }
}

/// Homology of a complex together with a strong deformation retract onto it.
///
/// With `ι` the representative cycles and `p` the projection,
/// `p ι = id` and `ι p + d h + h d = id`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub rank: usize,
    pub cycle_basis: Vec<BitVec>,
    pub boundary_basis: Vec<BitVec>,
    /// Cycles whose classes form the homology basis.
    pub representatives: Vec<BitVec>,
    /// `w_i` with `d w_i = boundary_basis[i]`.
    pub preimages: Vec<BitVec>,
    projection: BitMatrix,
    homotopy: BitMatrix,
}

impl Homology {
    fn compute(c: &ChainComplex) -> Homology {
        let n = c.dim();
        let d = c.d();
        let cycle_basis = d.kernel();
        let boundary_basis = d.image();
        let mut spanning = boundary_basis.clone();
        let mut representatives = Vec::new();
        for z in &cycle_basis {
            if !in_span(&spanning, z) {
                spanning.push(z.clone());
                representatives.push(z.clone());
            }
        }
        let preimages: Vec<BitVec> = boundary_basis
            .iter()
            .map(|b| d.solve(b).expect("boundary has a preimage"))
            .collect();
        let nb = boundary_basis.len();
        let r = representatives.len();
        let mut cols = boundary_basis.clone();
        cols.extend(representatives.iter().cloned());
        cols.extend(preimages.iter().cloned());
        let s = BitMatrix::from_columns(&cols, n);
        let s_inv = s.inverse().expect("boundaries, representatives and preimages form a basis");
        let projection = s_inv.submatrix(nb, r, 0, n);
        let w = BitMatrix::from_columns(&preimages, n);
        let homotopy = w.mul(&s_inv.submatrix(0, nb, 0, n));
        Homology { rank: r, cycle_basis, boundary_basis, representatives, preimages, projection, homotopy }
    }

    /// Dimension of the underlying complex; the homology rank is `rank`.
    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    /// `ι : H → C`, columns are the representatives.
    pub fn inclusion(&self) -> BitMatrix {
        BitMatrix::from_columns(&self.representatives, self.ambient_dim())
    }

    /// `p : C → H`, vanishing on boundaries and on the chosen preimages.
    pub fn projection(&self) -> &BitMatrix {
        &self.projection
    }

    /// `h : C → C` with `ι p + d h + h d = id`.
    pub fn homotopy(&self) -> &BitMatrix {
        &self.homotopy
    }

    /// Homology coordinates of a cycle.
    pub fn class_of(&self, v: &BitVec) -> BitVec {
        self.projection.mul_vec(v)
    }

    pub fn is_cycle(&self, c: &ChainComplex, v: &BitVec) -> bool {
        c.d().mul_vec(v).is_zero()
    }
}

/// A chain map `f : source → target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub f: BitMatrix,
}

impl ChainMap {
    pub fn new(source: ChainComplex, target: ChainComplex, f: BitMatrix) -> Result<Self, ChainError> {
        if f.rows() != target.dim() || f.cols() != source.dim() {
            return Err(ChainError::DimensionMismatch(format!(
                "map is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if f.mul(source.d()) != target.d().mul(&f) {
            return Err(ChainError::NotChainMap);
        }
        Ok(ChainMap { source, target, f })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        ChainMap { source: c.clone(), target: c.clone(), f: BitMatrix::identity(c.dim()) }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            f: BitMatrix::zeros(target.dim(), source.dim()),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap, ChainError> {
        if other.target != self.source {
            return Err(ChainError::DimensionMismatch("composition of non-adjacent maps".into()));
        }
        Ok(ChainMap {
            source: other.source.clone(),
            target: self.target.clone(),
            f: self.f.mul(&other.f),
        })
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap, ChainError> {
        if self.source != other.source || self.target != other.target {
            return Err(ChainError::DimensionMismatch("sum of maps with different ends".into()));
        }
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), f: self.f.add(&other.f) })
    }

    pub fn apply(&self, v: &BitVec) -> BitVec {
        self.f.mul_vec(v)
    }
}

/// Matrix of `H(f)` in the deterministic homology bases.
pub fn induced_on_homology(f: &ChainMap) -> Result<BitMatrix, ChainError> {
    check_chain_map(f)?;
    let hs = f.source.homology();
    let ht = f.target.homology();
    Ok(induced_with(&hs, &ht, &f.f))
}

pub(crate) fn induced_with(hs: &Homology, ht: &Homology, f: &BitMatrix) -> BitMatrix {
    ht.projection().mul(f).mul(&hs.inclusion())
}

fn check_chain_map(f: &ChainMap) -> Result<(), ChainError> {
    if f.f.rows() != f.target.dim() || f.f.cols() != f.source.dim() {
        return Err(ChainError::DimensionMismatch("map shape".into()));
    }
    if f.f.mul(f.source.d()) != f.target.d().mul(&f.f) {
        return Err(ChainError::NotChainMap);
    }
    Ok(())
}

pub fn is_quasi_iso(f: &ChainMap) -> Result<bool, ChainError> {
    Ok(induced_on_homology(f)?.is_invertible())
}

/// Strict mapping cone of `f : X → Y` with its inclusion and projection.
#[derive(Clone, Debug)]
pub struct Cone {
    /// `X ⊕ Y` with `d(x, y) = (dx, dy + f x)`.
    pub complex: ChainComplex,
    /// `y ↦ (0, y)`.
    pub inclusion: ChainMap,
    /// `(x, y) ↦ x`.
    pub projection: ChainMap,
}

pub fn cone_of_chain_map(f: &ChainMap) -> Result<Cone, ChainError> {
    check_chain_map(f)?;
    Ok(cone_unchecked(f))
}

pub(crate) fn cone_matrix(dx: &BitMatrix, dy: &BitMatrix, f: &BitMatrix) -> BitMatrix {
    BitMatrix::block(dx, &BitMatrix::zeros(dx.rows(), dy.cols()), f, dy)
}

fn cone_unchecked(f: &ChainMap) -> Cone {
    let (nx, ny) = (f.source.dim(), f.target.dim());
    let complex = ChainComplex { d: cone_matrix(f.source.d(), f.target.d(), &f.f) };
    let inclusion = ChainMap {
        source: f.target.clone(),
        target: complex.clone(),
        f: BitMatrix::zeros(nx, ny).vstack(&BitMatrix::identity(ny)),
    };
    let projection = ChainMap {
        source: complex.clone(),
        target: f.source.clone(),
        f: BitMatrix::identity(nx).hstack(&BitMatrix::zeros(nx, ny)),
    };
    Cone { complex, inclusion, projection }
}

/// A homotopy inverse `g` of a quasi-isomorphism `f : C → D` with
/// `g f = id + d G_s + G_s d` and `f g = id + d G_t + G_t d`.
#[derive(Clone, Debug)]
pub struct HomotopyInverse {
    pub inverse: ChainMap,
    pub source_homotopy: BitMatrix,
    pub target_homotopy: BitMatrix,
}

/// Homotopy inverse of a quasi-isomorphism. Invertible matrices get their
/// exact inverse and zero homotopies.
pub fn homotopy_inverse(f: &ChainMap) -> Result<HomotopyInverse, ChainError> {
    check_chain_map(f)?;
    let (nc, nd) = (f.source.dim(), f.target.dim());
    if let Some(inv) = f.f.inverse() {
        return Ok(HomotopyInverse {
            inverse: ChainMap { source: f.target.clone(), target: f.source.clone(), f: inv },
            source_homotopy: BitMatrix::zeros(nc, nc),
            target_homotopy: BitMatrix::zeros(nd, nd),
        });
    }
    let hc = f.source.homology();
    let hd = f.target.homology();
    let hf = induced_with(&hc, &hd, &f.f);
    let hf_inv = hf.inverse().ok_or(ChainError::NotQuasiIso)?;
    let iota_c = hc.inclusion();
    let p_d = hd.projection();
    let back = iota_c.mul(&hf_inv);
    let g = back.mul(p_d);
    let source_homotopy = hc.homotopy().add(&back.mul(p_d).mul(&f.f).mul(hc.homotopy()));
    let target_homotopy = hd.homotopy().add(&hd.homotopy().mul(&f.f).mul(&g));
    Ok(HomotopyInverse {
        inverse: ChainMap { source: f.target.clone(), target: f.source.clone(), f: g },
        source_homotopy,
        target_homotopy,
    })
}

/// `G` with `f = d G + G d`, when `f` vanishes on homology.
pub fn null_homotopy(f: &ChainMap) -> Option<BitMatrix> {
    check_chain_map(f).ok()?;
    let hc = f.source.homology();
    let hd = f.target.homology();
    if !induced_with(&hc, &hd, &f.f).is_zero() {
        return None;
    }
    let k = f.target.d().solve_matrix(&f.f.mul(&hc.inclusion()))?;
    Some(k.mul(hc.projection()).add(&f.f.mul(hc.homotopy())))
}

/// Homotopy `G` with `f + g = d G + G d`, if the maps are homotopic.
pub fn homotopy_between(f: &ChainMap, g: &ChainMap) -> Option<BitMatrix> {
    null_homotopy(&f.add(g).ok()?)
}

/// Over a field two chain maps are homotopic iff they agree on homology.
pub fn homotopic(f: &ChainMap, g: &ChainMap) -> Result<bool, ChainError> {
    Ok(induced_on_homology(f)? == induced_on_homology(g)?)
}

/// Checks `f + g = d_t G + G d_s`.
pub fn is_homotopy(f: &BitMatrix, g: &BitMatrix, h: &BitMatrix, source: &ChainComplex, target: &ChainComplex) -> bool {
    h.rows() == target.dim()
        && h.cols() == source.dim()
        && f.add(g) == target.d().mul(h).add(&h.mul(source.d()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(images: &[&str]) -> ChainComplex {
        let v: Vec<BitVec> = images.iter().map(|s| BitVec::parse(s).unwrap()).collect();
        ChainComplex::from_images(&v).unwrap()
    }

    #[test]
    fn homology_examples() {
        assert_eq!(ChainComplex::trivial(2).homology().rank, 2);
        assert_eq!(cx(&["00", "10"]).homology().rank, 0);
        assert_eq!(cx(&["000", "100", "000"]).homology().rank, 1);
    }

    #[test]
    fn retract_identities() {
        let c = cx(&["0000", "1000", "0000", "0010"]);
        let h = c.homology();
        let n = c.dim();
        let lhs = h
            .inclusion()
            .mul(h.projection())
            .add(&c.d().mul(h.homotopy()))
            .add(&h.homotopy().mul(c.d()));
        assert_eq!(lhs, BitMatrix::identity(n));
        assert_eq!(h.projection().mul(&h.inclusion()), BitMatrix::identity(h.rank));
    }

    #[test]
    fn induced_examples() {
        let a = ChainComplex::trivial(2);
        let b = cx(&["00", "10"]);
        // e1 -> e1, e2 -> 0; the target is acyclic
        let f = ChainMap::new(a.clone(), b, BitMatrix::from_strs(&["10", "00"])).unwrap();
        assert!(induced_on_homology(&f).unwrap().is_zero());
        assert_eq!(induced_on_homology(&ChainMap::identity(&a)).unwrap(), BitMatrix::identity(2));
    }

    #[test]
    fn cone_examples() {
        let one = ChainComplex::trivial(1);
        let id = ChainMap::identity(&one);
        assert_eq!(cone_of_chain_map(&id).unwrap().complex.homology().rank, 0);
        let z = ChainMap::zero(&one, &one);
        assert_eq!(cone_of_chain_map(&z).unwrap().complex.homology().rank, 2);
        let y = cx(&["00", "10"]);
        let f = ChainMap::new(one, y, BitMatrix::from_strs(&["1", "0"])).unwrap();
        assert_eq!(cone_of_chain_map(&f).unwrap().complex.homology().rank, 1);
    }

    #[test]
    fn not_chain_map_is_rejected() {
        let y = cx(&["00", "10"]);
        let f = BitMatrix::identity(2);
        assert_eq!(
            ChainMap::new(ChainComplex::trivial(2), y, f).unwrap_err(),
            ChainError::NotChainMap
        );
    }

    #[test]
    fn homotopy_inverse_of_non_iso() {
        // inclusion of the one-dimensional homology into a 3-dim complex
        let c = ChainComplex::trivial(1);
        let d = cx(&["000", "100", "000"]);
        let f = ChainMap::new(c.clone(), d.clone(), BitMatrix::from_strs(&["0", "0", "1"])).unwrap();
        let hi = homotopy_inverse(&f).unwrap();
        let gf = hi.inverse.f.mul(&f.f);
        assert!(is_homotopy(&gf, &BitMatrix::identity(1), &hi.source_homotopy, &c, &c));
        let fg = f.f.mul(&hi.inverse.f);
        assert!(is_homotopy(&fg, &BitMatrix::identity(3), &hi.target_homotopy, &d, &d));
    }
}
