//! Snake complexes: `l` copies of a base complex, the odd copies glued to
//! their even neighbours.

use super::CobordismError;
use crate::f2::{BitMatrix, ChainComplex, ChainMap};

/// Total complex `⊕_{j=1}^{l} base` with
/// `d̄ x^(j) = (dx)^(j) + [j odd] (x^(j−1) + x^(j+1))`, where
/// `x^(0) = x^(l+1) = 0`. The copy `x^(j)` of basis vector `b` has index
/// `(j − 1) · dim + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeComplex {
    pub base: ChainComplex,
    pub l: usize,
    pub total: ChainComplex,
}

/// The snake differential built from any square matrix `d`.
pub(crate) fn snake_matrix(d: &BitMatrix, l: usize) -> BitMatrix {
    let n = d.rows();
    let mut out = BitMatrix::zeros(l * n, l * n);
    for j in 1..=l {
        let off = (j - 1) * n;
        for r in 0..n {
            for c in 0..n {
                if d.get(r, c) {
                    out.set(off + r, off + c, true);
                }
            }
        }
        if j % 2 == 1 {
            for b in 0..n {
                if j > 1 {
                    out.set(off - n + b, off + b, true);
                }
                if j < l {
                    out.set(off + n + b, off + b, true);
                }
            }
        }
    }
    out
}

pub fn build_snake(base: &ChainComplex, l: usize) -> Result<SnakeComplex, CobordismError> {
    if l.is_multiple_of(2) {
        return Err(CobordismError::EvenL(l));
    }
    if l < 3 {
        return Err(CobordismError::LTooSmall(l));
    }
    let total = ChainComplex::new(snake_matrix(base.d(), l)).expect("snake differential squares to zero");
    Ok(SnakeComplex { base: base.clone(), l, total })
}

/// `c_j : x^(i) ↦ δ_{ij} x` for odd `j`.
pub fn snake_projection(s: &SnakeComplex, j: usize) -> Result<ChainMap, CobordismError> {
    if j.is_multiple_of(2) {
        return Err(CobordismError::EvenIndex(j));
    }
    if j == 0 || j > s.l {
        return Err(CobordismError::IndexOutOfRange(j));
    }
    let n = s.base.dim();
    let mut f = BitMatrix::zeros(n, s.l * n);
    for b in 0..n {
        f.set(b, (j - 1) * n + b, true);
    }
    Ok(ChainMap { source: s.total.clone(), target: s.base.clone(), f })
}

/// `e : x ↦ Σ_{i odd} x^(i)`.
pub fn snake_inclusion(s: &SnakeComplex) -> ChainMap {
    let n = s.base.dim();
    let mut f = BitMatrix::zeros(s.l * n, n);
    for j in (1..=s.l).step_by(2) {
        for b in 0..n {
            f.set((j - 1) * n + b, b, true);
        }
    }
    ChainMap { source: s.base.clone(), target: s.total.clone(), f }
}

/// `p : x^(i) ↦ x^(i)` for `i ≤ l − 2`, zero on the last two copies; a map
/// onto the snake of length `l − 2`.
pub fn snake_truncation(s: &SnakeComplex) -> Result<ChainMap, CobordismError> {
    if s.l < 5 {
        return Err(CobordismError::LTooSmall(s.l));
    }
    let short = build_snake(&s.base, s.l - 2)?;
    let n = s.base.dim();
    let keep = (s.l - 2) * n;
    let mut f = BitMatrix::zeros(keep, s.l * n);
    for i in 0..keep {
        f.set(i, i, true);
    }
    Ok(ChainMap { source: s.total.clone(), target: short.total, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::{induced_on_homology, BitVec};

    fn base1() -> ChainComplex {
        ChainComplex::trivial(1)
    }

    #[test]
    fn dim_one_base_l3() {
        let s = build_snake(&base1(), 3).unwrap();
        assert_eq!(s.total.dim(), 3);
        let h = s.total.homology();
        assert_eq!(h.rank, 1);
        // kernel ⟨x^(2), x^(1)+x^(3)⟩, image ⟨x^(2)⟩
        assert!(s.total.d().mul_vec(&BitVec::parse("010").unwrap()).is_zero());
        assert!(s.total.d().mul_vec(&BitVec::parse("101").unwrap()).is_zero());
        assert_eq!(s.total.d().mul_vec(&BitVec::parse("100").unwrap()), BitVec::parse("010").unwrap());
    }

    #[test]
    fn zero_base() {
        let s = build_snake(&ChainComplex::zero(), 3).unwrap();
        assert_eq!(s.total.dim(), 0);
        assert!(snake_projection(&s, 1).unwrap().f.is_zero());
        assert!(snake_inclusion(&s).f.is_zero());
    }

    #[test]
    fn acyclic_base_l5() {
        let b = ChainComplex::from_images(&[BitVec::parse("00").unwrap(), BitVec::parse("10").unwrap()]).unwrap();
        let s = build_snake(&b, 5).unwrap();
        assert_eq!(s.total.dim(), 10);
        assert_eq!(s.total.homology().rank, 0);
    }

    #[test]
    fn bad_lengths() {
        assert_eq!(build_snake(&base1(), 4), Err(CobordismError::EvenL(4)));
        assert_eq!(build_snake(&base1(), 1), Err(CobordismError::LTooSmall(1)));
        let s = build_snake(&base1(), 3).unwrap();
        assert_eq!(snake_projection(&s, 2), Err(CobordismError::EvenIndex(2)));
        assert_eq!(snake_truncation(&s), Err(CobordismError::LTooSmall(3)));
    }

    #[test]
    fn maps_are_chain_maps_and_sections() {
        let s = build_snake(&base1(), 3).unwrap();
        let e = snake_inclusion(&s);
        assert_eq!(e.f, BitMatrix::from_strs(&["1", "0", "1"]));
        for j in [1, 3] {
            let c = snake_projection(&s, j).unwrap();
            assert_eq!(c.compose(&e).unwrap(), ChainMap::identity(&s.base));
        }
        let c1 = snake_projection(&s, 1).unwrap();
        assert!(!induced_on_homology(&c1).unwrap().is_zero());
    }

    #[test]
    fn truncation_l5_to_l3() {
        let s = build_snake(&base1(), 5).unwrap();
        let p = snake_truncation(&s).unwrap();
        assert_eq!(p.f, BitMatrix::from_strs(&["10000", "01000", "00100"]));
        let short = build_snake(&base1(), 3).unwrap();
        assert_eq!(p.compose(&snake_inclusion(&s)).unwrap(), snake_inclusion(&short));
        assert!(ChainMap::new(p.source.clone(), p.target.clone(), p.f.clone()).is_ok());
    }
}
