//! Bit-packed vectors and dense matrices over GF(2).
//!
//! Matrices act on column vectors: an `r × c` matrix maps `F2^c → F2^r`.
//! Storage is row-major with 64 bits per word.

use std::fmt;

const W: usize = 64;

#[inline]
fn words(n: usize) -> usize {
    n.div_ceil(W)
}

/// A vector in `F2^len`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    data: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, data: vec![0; words(len)] }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters. Returns `None` on any other character.
    pub fn parse(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, ch) in s.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.data[i / W] >> (i % W)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let m = 1u64 << (i % W);
        if b {
            self.data[i / W] |= m;
        } else {
            self.data[i / W] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.data[i / W] ^= 1u64 << (i % W);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self += other`.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    /// Inner product `Σ a_i b_i`.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let mut acc = 0u32;
        for (a, b) in self.data.iter().zip(&other.data) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.data.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * W + t)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut r = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            r.set(i, true);
        }
        for i in other.ones() {
            r.set(self.len + i, true);
        }
        r
    }

    /// The sub-vector of coordinates `start..start+len`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len);
        let mut r = BitVec::zeros(len);
        for i in self.ones() {
            if i >= start && i < start + len {
                r.set(i - start, true);
            }
        }
        r
    }

    /// Tensor product `self ⊗ other`, indexed `i * other.len + j`.
    pub fn tensor(&self, other: &BitVec) -> BitVec {
        let mut r = BitVec::zeros(self.len * other.len);
        for i in self.ones() {
            for j in other.ones() {
                r.set(i * other.len + j, true);
            }
        }
        r
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_bit_string())
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// Dense `rows × cols` matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

/// Result of row reduction: reduced row echelon form plus pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: BitMatrix,
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols, data: vec![BitVec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row width mismatch");
        }
        BitMatrix { rows: rows.len(), cols, data: rows }
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(columns: &[BitVec], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column height mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Parses rows written as `0`/`1` strings.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| BitVec::parse(r).expect("matrix rows must be 0/1 strings"))
            .collect();
        Self::from_rows(data, cols)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        self.data[r].set(c, b)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[BitVec] {
        &self.data
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<BitVec> {
        self.transpose().data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].dot(v) {
                out.set(r, true);
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = BitVec::zeros(other.cols);
            for k in self.data[r].ones() {
                acc.xor_assign(&other.data[k]);
            }
            out.data[r] = acc;
        }
        out
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn add_assign(&mut self, other: &BitMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.concat(b)).collect();
        BitMatrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        BitMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// 2×2 block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &BitMatrix, b: &BitMatrix, c: &BitMatrix, d: &BitMatrix) -> BitMatrix {
        a.hstack(b).vstack(&c.hstack(d))
    }

    /// Block diagonal `diag(a, b)`.
    pub fn block_diag(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
        Self::block(a, &Self::zeros(a.rows, b.cols), &Self::zeros(b.rows, a.cols), b)
    }

    /// Rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> BitMatrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "submatrix out of range");
        let data = self.data[r0..r0 + nr].iter().map(|row| row.slice(c0, nc)).collect();
        BitMatrix { rows: nr, cols: nc, data }
    }

    /// Reduced row echelon form. Pivots are taken at the lowest-index
    /// nonzero column; rows are processed top-down.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            let Some(p) = (next..self.rows).find(|&r| m[r].get(c)) else {
                continue;
            };
            m.swap(next, p);
            let pr = m[next].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != next && row.get(c) {
                    row.xor_assign(&pr);
                }
            }
            pivots.push(c);
            next += 1;
            if next == self.rows {
                break;
            }
        }
        Echelon { rref: BitMatrix { rows: self.rows, cols: self.cols, data: m }, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the null space `{x : self·x = 0}`, one vector per free column
    /// in ascending order.
    pub fn kernel(&self) -> Vec<BitVec> {
        let Echelon { rref, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::unit(self.cols, free);
                for (i, &p) in pivots.iter().enumerate() {
                    if rref.get(i, free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, taken as the nonzero rows of the reduced
    /// echelon form of the transpose.
    pub fn image(&self) -> Vec<BitVec> {
        let e = self.transpose().echelon();
        e.rref.data.into_iter().take(e.pivots.len()).collect()
    }

    /// Some `x` with `self·x = b`, or `None` if `b` is not in the image.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch in solve");
        let aug = self.hstack(&BitMatrix::from_columns(std::slice::from_ref(b), self.rows));
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if rref.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }

    /// Solves `self · X = B` column by column.
    pub fn solve_matrix(&self, b: &BitMatrix) -> Option<BitMatrix> {
        let cols: Option<Vec<BitVec>> = b.columns().iter().map(|c| self.solve(c)).collect();
        Some(BitMatrix::from_columns(&cols?, self.cols))
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let e = self.hstack(&BitMatrix::identity(n)).echelon();
        if (0..n).any(|i| e.pivots.get(i) != Some(&i)) {
            return None;
        }
        Some(e.rref.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Kronecker product, rows/cols indexed `i * other.dim + j`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                for r2 in 0..other.rows {
                    for c2 in other.data[r2].ones() {
                        out.set(r * other.rows + r2, c * other.cols + c2, true);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "  {}", r)?;
        }
        Ok(())
    }
}

/// Rank of a matrix over GF(2).
pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// Rank of the span of a list of vectors of equal length.
pub fn span_rank(vectors: &[BitVec], len: usize) -> usize {
    BitMatrix::from_columns(vectors, len).rank()
}

/// True iff `v` lies in the span of `vectors`.
pub fn in_span(vectors: &[BitVec], v: &BitVec) -> bool {
    BitMatrix::from_columns(vectors, v.len()).solve(v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(BitMatrix::identity(4).rank(), 4);
        assert_eq!(BitMatrix::from_strs(&["110", "011", "101"]).rank(), 2);
    }

    #[test]
    fn kernel_and_image_dimensions() {
        let m = BitMatrix::from_strs(&["110", "011", "101"]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).is_zero());
        assert_eq!(m.image().len(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = BitMatrix::from_strs(&["110", "010", "011"]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), BitMatrix::identity(3));
        assert!(BitMatrix::from_strs(&["11", "11"]).inverse().is_none());
        assert_eq!(BitMatrix::zeros(0, 0).inverse(), Some(BitMatrix::zeros(0, 0)));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let m = BitMatrix::from_strs(&["10", "10"]);
        assert!(m.solve(&BitVec::parse("01").unwrap()).is_none());
        let x = m.solve(&BitVec::parse("11").unwrap()).unwrap();
        assert_eq!(m.mul_vec(&x), BitVec::parse("11").unwrap());
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.slice(60, 10).ones().collect::<Vec<_>>(), vec![4]);
    }
}
