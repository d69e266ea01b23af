//! Slow reference computations written from the definitions, sharing no
//! code with the library beyond basis-level evaluation of tables.

use ainfty::ainf::{ExtendedMap, HomCollection, MixedExtendedMap, Multilinear};
use ainfty::f2::{BitMatrix, BitVec};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Dense = Vec<Vec<bool>>;

pub fn dense(m: &BitMatrix) -> Dense {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect()).collect()
}

/// Gaussian elimination on a copy.
pub fn rank(m: &Dense) -> usize {
    let mut rows = m.clone();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn bm_rank(m: &BitMatrix) -> usize {
    rank(&dense(m))
}

/// `dim ker d − rank d`.
pub fn homology_rank(d: &BitMatrix) -> usize {
    let r = bm_rank(d);
    d.cols() - 2 * r
}

pub fn mul_vec(m: &Dense, v: &[bool]) -> Vec<bool> {
    m.iter().map(|row| row.iter().zip(v).fold(false, |a, (&x, &y)| a ^ (x & y))).collect()
}

/// Every vector of length `n` (n ≤ 16).
pub fn all_vectors(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |x| (0..n).map(|i| x >> i & 1 == 1).collect())
}

/// Rank of `H(f) : H(X) → H(Y)` by enumerating the cycles of `X`.
pub fn induced_rank(dx: &BitMatrix, dy: &BitMatrix, f: &BitMatrix) -> usize {
    let (dx, dy, f) = (dense(dx), dense(dy), dense(f));
    let ny = dy.len();
    let nx = dx.len();
    // columns of dY and f(cycles), as rows of a matrix
    let mut rows: Dense = (0..ny).map(|c| dy.iter().map(|row| row[c]).collect()).collect();
    let boundaries = rank(&rows);
    for v in all_vectors(nx) {
        if mul_vec(&dx, &v).iter().all(|&b| !b) {
            rows.push(mul_vec(&f, &v));
        }
    }
    if rows.is_empty() || ny == 0 {
        return 0;
    }
    rank(&rows) - boundaries
}

/// Whether `v` is a sum of some subset of `vs`, by enumeration.
pub fn in_subset_span(vs: &[BitVec], v: &BitVec) -> bool {
    assert!(vs.len() <= 20);
    (0u32..1 << vs.len()).any(|mask| {
        let mut acc = BitVec::zeros(v.len());
        for (i, w) in vs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc.xor_assign(w);
            }
        }
        acc == *v
    })
}

/// Every tuple in `0..n` of length `len`.
pub fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Every basis tuple for the given input dimensions.
pub fn basis_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out.into_iter().flat_map(|t| (0..d).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// All ways to cut `k` into consecutive nonempty blocks, as cut points.
pub fn cuts(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << (k - 1) {
        let mut c = vec![0];
        for i in 1..k {
            if mask >> (i - 1) & 1 == 1 {
                c.push(i);
            }
        }
        c.push(k);
        out.push(c);
    }
    out
}

/// `Σ G(a_1…, F(a_s…a_{s+m−1}), …)` at one basis tuple.
pub fn star_at(g: &ExtendedMap, f: &ExtendedMap, t: &[usize], b: &[usize]) -> BitVec {
    let k = b.len();
    let mut acc = BitVec::zeros(out_dim(g, t));
    for m in 1..=k {
        for s in 0..=k - m {
            let v = f.eval_basis(&t[s..=s + m], &b[s..s + m]);
            let mut gt = t[..=s].to_vec();
            gt.extend_from_slice(&t[s + m..]);
            for j in v.ones() {
                let mut gb = b[..s].to_vec();
                gb.push(j);
                gb.extend_from_slice(&b[s + m..]);
                acc.xor_assign(&g.eval_basis(&gt, &gb));
            }
        }
    }
    acc
}

fn out_dim(g: &ExtendedMap, t: &[usize]) -> usize {
    g.component_dims(&[t[0], t[t.len() - 1]]).1
}

/// `Σ G(F(block_1), …, F(block_r))` at one basis tuple.
pub fn circle_at(g: &ExtendedMap, f: &ExtendedMap, t: &[usize], b: &[usize]) -> BitVec {
    let k = b.len();
    let first = f.map_object(t[0]);
    let last = f.map_object(t[k]);
    let mut acc = BitVec::zeros(g.component_dims(&[first, last]).1);
    for c in cuts(k) {
        let outs: Vec<BitVec> = c.windows(2).map(|w| f.eval_basis(&t[w[0]..=w[1]], &b[w[0]..w[1]])).collect();
        let gt: Vec<usize> = c.iter().map(|&i| f.map_object(t[i])).collect();
        // expand the tensor of the block outputs over basis choices
        let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
        for o in &outs {
            choices = choices.into_iter().flat_map(|p| o.ones().map(move |j| [p.clone(), vec![j]].concat())).collect();
        }
        for gb in choices {
            acc.xor_assign(&g.eval_basis(&gt, &gb));
        }
    }
    acc
}

/// `Σ_i P(a_1…a_{i−1}, Q(a_i…, b))` at one basis tuple of a mixed map.
pub fn mixed_at(p: &MixedExtendedMap, q: &MixedExtendedMap, t: &[usize], b: &[usize]) -> BitVec {
    let k = t.len();
    let mut acc = BitVec::zeros(p.component_dims(&t[..1]).1);
    for i in 1..=k {
        let v = q.eval_basis(&t[i - 1..], &b[i - 1..]);
        for j in v.ones() {
            let mut pb = b[..i - 1].to_vec();
            pb.push(j);
            acc.xor_assign(&p.eval_basis(&t[..i], &pb));
        }
    }
    acc
}

fn random_table(rng: &mut ChaCha8Rng, in_dims: &[usize], out: usize, density: f64) -> Multilinear {
    let len: usize = in_dims.iter().product();
    let table = (0..len)
        .map(|_| BitVec::from_bools(&(0..out).map(|_| rng.gen_bool(density)).collect::<Vec<_>>()))
        .collect();
    Multilinear::from_table(in_dims.to_vec(), out, table)
}

pub fn random_collection(rng: &mut ChaCha8Rng, objects: usize, max_dim: usize) -> HomCollection {
    let names = (0..objects).map(|i| format!("O{i}")).collect();
    let dims: Vec<usize> = (0..objects * objects).map(|_| rng.gen_range(0..=max_dim)).collect();
    HomCollection::from_fn(names, |i, j| dims[i * objects + j])
}

/// Random components of arity `1..=max_arity`, each present with
/// probability one half.
pub fn random_extended(
    rng: &mut ChaCha8Rng,
    source: &HomCollection,
    target: &HomCollection,
    index: Vec<usize>,
    max_arity: usize,
) -> ExtendedMap {
    let mut m = ExtendedMap::new(source.clone(), target.clone(), index, max_arity).unwrap();
    for k in 1..=max_arity {
        for t in tuples(source.objects(), k + 1) {
            let (in_dims, out) = m.component_dims(&t);
            if out == 0 || in_dims.contains(&0) || rng.gen_bool(0.5) {
                continue;
            }
            let table = random_table(rng, &in_dims, out, 0.4);
            m.set_component(t, table).unwrap();
        }
    }
    m
}

pub fn random_mixed(
    rng: &mut ChaCha8Rng,
    c: &HomCollection,
    input: Vec<usize>,
    output: Vec<usize>,
    max_arity: usize,
) -> MixedExtendedMap {
    let mut m = MixedExtendedMap::zero(c.clone(), input, output, max_arity).unwrap();
    for k in 1..=max_arity {
        for t in tuples(c.objects(), k) {
            let (in_dims, out) = m.component_dims(&t);
            if out == 0 || in_dims.contains(&0) || rng.gen_bool(0.5) {
                continue;
            }
            let table = random_table(rng, &in_dims, out, 0.4);
            m.set_component(t, table).unwrap();
        }
    }
    m
}

/// Compares `computed` against `oracle` on every object tuple of arity
/// `1..=max_arity`; returns the first disagreement.
pub fn compare_extended(
    computed: &ExtendedMap,
    max_arity: usize,
    oracle: impl Fn(&[usize], &[usize]) -> BitVec,
) -> Result<usize, String> {
    let mut checked = 0;
    for k in 1..=max_arity {
        for t in tuples(computed.source().objects(), k + 1) {
            let (in_dims, _) = computed.component_dims(&t);
            for b in basis_tuples(&in_dims) {
                let want = oracle(&t, &b);
                let got = computed.eval_basis(&t, &b);
                if want != got {
                    return Err(format!("tuple {t:?} basis {b:?}: expected {want}, got {got}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

pub fn compare_mixed(
    computed: &MixedExtendedMap,
    max_arity: usize,
    oracle: impl Fn(&[usize], &[usize]) -> BitVec,
) -> Result<usize, String> {
    let mut checked = 0;
    for k in 1..=max_arity {
        for t in tuples(computed.category().objects(), k) {
            let (in_dims, _) = computed.component_dims(&t);
            for b in basis_tuples(&in_dims) {
                let want = oracle(&t, &b);
                let got = computed.eval_basis(&t, &b);
                if want != got {
                    return Err(format!("tuple {t:?} basis {b:?}: expected {want}, got {got}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// The snake differential from its defining formula.
pub fn snake_differential(d: &BitMatrix, l: usize) -> Dense {
    let n = d.rows();
    let mut out = vec![vec![false; l * n]; l * n];
    for j in 1..=l {
        for b in 0..n {
            let col = (j - 1) * n + b;
            for r in 0..n {
                out[(j - 1) * n + r][col] ^= d.get(r, b);
            }
            if j % 2 == 1 {
                if j > 1 {
                    out[(j - 2) * n + b][col] ^= true;
                }
                if j < l {
                    out[j * n + b][col] ^= true;
                }
            }
        }
    }
    out
}

/// `entries.sum − exit − (k − 1)`.
pub fn index(entries: &[u8], exit: u8) -> i64 {
    entries.iter().map(|&e| e as i64).sum::<i64>() - exit as i64 - (entries.len() as i64 - 1)
}
