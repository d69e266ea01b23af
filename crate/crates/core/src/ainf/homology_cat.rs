//! The homology category `H(A)`: hom homologies with the product induced by `μ_2`.

use std::collections::BTreeMap;

use super::category::AInfCategory;
use crate::f2::{BitMatrix, BitVec, ChainError, Homology};

#[derive(Clone, Debug)]
pub struct HomologyCategory {
    objects: usize,
    homologies: Vec<Homology>,
    /// `(i, j, k)` ↦ matrix `H(i,j) ⊗ H(j,k) → H(i,k)`, columns indexed `x · rank(j,k) + y`.
    products: BTreeMap<(usize, usize, usize), BitMatrix>,
    units: Vec<Option<BitVec>>,
}

impl HomologyCategory {
    pub fn homology(&self, i: usize, j: usize) -> &Homology {
        &self.homologies[i * self.objects + j]
    }

    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.homology(i, j).rank
    }

    /// Product of homology classes `x ∈ H(i,j)`, `y ∈ H(j,k)`.
    pub fn product(&self, i: usize, j: usize, k: usize, x: &BitVec, y: &BitVec) -> BitVec {
        let m = &self.products[&(i, j, k)];
        m.mul_vec(&x.tensor(y))
    }

    pub fn product_matrix(&self, i: usize, j: usize, k: usize) -> &BitMatrix {
        &self.products[&(i, j, k)]
    }

    /// The unit class of `H(L, L)`, when one exists.
    pub fn unit(&self, l: usize) -> Option<&BitVec> {
        self.units[l].as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.units.iter().all(Option::is_some)
    }

    /// Checks `(x y) z = x (y z)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.objects;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for x in 0..self.rank(i, j) {
                            for y in 0..self.rank(j, k) {
                                for z in 0..self.rank(k, l) {
                                    let ex = BitVec::unit(self.rank(i, j), x);
                                    let ey = BitVec::unit(self.rank(j, k), y);
                                    let ez = BitVec::unit(self.rank(k, l), z);
                                    let left = self.product(i, k, l, &self.product(i, j, k, &ex, &ey), &ez);
                                    let right = self.product(i, j, l, &ex, &self.product(j, k, l, &ey, &ez));
                                    if left != right {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Computes hom homologies, the induced products and unit classes.
pub fn homology_category(a: &AInfCategory) -> Result<HomologyCategory, ChainError> {
    let n = a.objects();
    let mut homologies = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            homologies.push(a.hom_complex(i, j)?.homology());
        }
    }
    let h = |i: usize, j: usize| &homologies[i * n + j];
    let mut products = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (hij, hjk, hik) = (h(i, j), h(j, k), h(i, k));
                let mut cols = Vec::with_capacity(hij.rank * hjk.rank);
                for x in &hij.representatives {
                    for y in &hjk.representatives {
                        cols.push(hik.class_of(&a.mu2(i, j, k, x, y)));
                    }
                }
                products.insert((i, j, k), BitMatrix::from_columns(&cols, hik.rank));
            }
        }
    }
    let mut hc = HomologyCategory { objects: n, homologies, products, units: vec![None; n] };
    for l in 0..n {
        hc.units[l] = find_unit(&hc, l);
    }
    Ok(hc)
}

/// Solves `x · u = x` and `u · y = y` for all basis classes, linear in `u`.
fn find_unit(hc: &HomologyCategory, l: usize) -> Option<BitVec> {
    let n = hc.objects;
    let r = hc.rank(l, l);
    let mut rows: Vec<BitVec> = Vec::new();
    let mut rhs: Vec<bool> = Vec::new();
    for x_obj in 0..n {
        let rx = hc.rank(x_obj, l);
        for x in 0..rx {
            let ex = BitVec::unit(rx, x);
            let images: Vec<BitVec> = (0..r).map(|t| hc.product(x_obj, l, l, &ex, &BitVec::unit(r, t))).collect();
            for c in 0..rx {
                rows.push(BitVec::from_bools(&images.iter().map(|v| v.get(c)).collect::<Vec<_>>()));
                rhs.push(c == x);
            }
        }
    }
    for y_obj in 0..n {
        let ry = hc.rank(l, y_obj);
        for y in 0..ry {
            let ey = BitVec::unit(ry, y);
            let images: Vec<BitVec> = (0..r).map(|t| hc.product(l, l, y_obj, &BitVec::unit(r, t), &ey)).collect();
            for c in 0..ry {
                rows.push(BitVec::from_bools(&images.iter().map(|v| v.get(c)).collect::<Vec<_>>()));
                rhs.push(c == y);
            }
        }
    }
    let m = BitMatrix::from_rows(rows, r);
    m.solve(&BitVec::from_bools(&rhs))
}
