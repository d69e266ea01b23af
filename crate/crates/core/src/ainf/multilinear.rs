//! Multilinear maps `V_1 ⊗ … ⊗ V_k → W` stored as tables over basis tuples.

use crate::f2::{BitMatrix, BitVec};

/// Table of images of basis tuples. Tuple `(b_1, …, b_k)` sits at the
/// mixed-radix index with `b_1` most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multilinear {
    in_dims: Vec<usize>,
    out_dim: usize,
    table: Vec<BitVec>,
}

impl Multilinear {
    pub fn zeros(in_dims: Vec<usize>, out_dim: usize) -> Self {
        let n = in_dims.iter().product();
        Multilinear { in_dims, out_dim, table: vec![BitVec::zeros(out_dim); n] }
    }

    /// Arity-1 map from a matrix (`out × in`).
    pub fn from_matrix(m: &BitMatrix) -> Self {
        Multilinear { in_dims: vec![m.cols()], out_dim: m.rows(), table: m.columns() }
    }

    pub fn from_table(in_dims: Vec<usize>, out_dim: usize, table: Vec<BitVec>) -> Self {
        assert_eq!(table.len(), in_dims.iter().product::<usize>(), "table size");
        assert!(table.iter().all(|v| v.len() == out_dim), "table entry width");
        Multilinear { in_dims, out_dim, table }
    }

    pub fn arity(&self) -> usize {
        self.in_dims.len()
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn table(&self) -> &[BitVec] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn index(&self, basis: &[usize]) -> usize {
        debug_assert_eq!(basis.len(), self.in_dims.len());
        basis.iter().zip(&self.in_dims).fold(0, |acc, (&b, &n)| {
            debug_assert!(b < n);
            acc * n + b
        })
    }

    /// Inverse of [`Multilinear::index`].
    pub fn basis_of(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.in_dims.len()];
        for (slot, &n) in out.iter_mut().zip(&self.in_dims).rev() {
            *slot = idx % n;
            idx /= n;
        }
        out
    }

    pub fn get(&self, basis: &[usize]) -> &BitVec {
        &self.table[self.index(basis)]
    }

    pub fn set(&mut self, basis: &[usize], v: BitVec) {
        assert_eq!(v.len(), self.out_dim, "output width");
        let i = self.index(basis);
        self.table[i] = v;
    }

    pub fn entry_mut(&mut self, idx: usize) -> &mut BitVec {
        &mut self.table[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(BitVec::is_zero)
    }

    pub fn add_assign(&mut self, other: &Multilinear) {
        assert_eq!(self.in_dims, other.in_dims);
        assert_eq!(self.out_dim, other.out_dim);
        for (a, b) in self.table.iter_mut().zip(&other.table) {
            a.xor_assign(b);
        }
    }

    /// Sum of table entries over the support of a tensor vector.
    pub fn apply_tensor(&self, t: &BitVec) -> BitVec {
        assert_eq!(t.len(), self.table.len(), "tensor length");
        let mut out = BitVec::zeros(self.out_dim);
        for i in t.ones() {
            out.xor_assign(&self.table[i]);
        }
        out
    }

    /// Evaluates on a list of vectors.
    pub fn apply(&self, inputs: &[BitVec]) -> BitVec {
        assert_eq!(inputs.len(), self.in_dims.len(), "arity mismatch");
        self.apply_tensor(&tensor_all(inputs))
    }

    /// Arity-1 map as a matrix.
    pub fn to_matrix(&self) -> BitMatrix {
        assert_eq!(self.arity(), 1);
        BitMatrix::from_columns(&self.table, self.out_dim)
    }
}

/// `v_1 ⊗ … ⊗ v_k`; the empty product is the 1-dimensional vector `1`.
pub fn tensor_all(vs: &[BitVec]) -> BitVec {
    let mut acc = BitVec::unit(1, 0);
    for v in vs {
        acc = acc.tensor(v);
    }
    acc
}

/// All ordered compositions of `k` into positive parts, each at most `max_part`,
/// with at most `max_parts` parts.
pub fn compositions(k: usize, max_part: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(rem: usize, max_part: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for p in 1..=rem.min(max_part) {
            cur.push(p);
            go(rem - p, max_part, max_parts, cur, out);
            cur.pop();
        }
    }
    go(k, max_part, max_parts, &mut cur, &mut out);
    out
}

/// Iterates over all tuples `(t_0, …, t_{len-1})` with entries `< n`.
pub fn for_each_tuple(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 && len > 0 {
        return;
    }
    let mut t = vec![0; len];
    loop {
        f(&t);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let m = Multilinear::zeros(vec![2, 3, 4], 1);
        for i in 0..24 {
            assert_eq!(m.index(&m.basis_of(i)), i);
        }
        assert_eq!(m.index(&[1, 0, 0]), 12);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 4, 4).len(), 8);
        assert_eq!(compositions(3, 2, 3).len(), 3);
        assert_eq!(compositions(0, 2, 3), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn tuples_visit_everything() {
        let mut count = 0;
        for_each_tuple(3, 2, |_| count += 1);
        assert_eq!(count, 9);
        let mut count = 0;
        for_each_tuple(2, 0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
