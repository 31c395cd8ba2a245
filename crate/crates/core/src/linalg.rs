//! Exact rational row reduction.

use std::collections::{BTreeMap, HashMap};

use crate::symbolic::Scalar;

/// Incremental rank computation over sparse rational rows.
///
/// Each stored pivot row is monic in its largest column.
#[derive(Debug, Default)]
pub struct SparseEliminator {
    pivots: HashMap<usize, BTreeMap<usize, Scalar>>,
}

impl SparseEliminator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; keeps it if it is independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: BTreeMap<usize, Scalar>) -> bool {
        row.retain(|_, c| !c.is_zero());
        while let Some((&col, lead)) = row.iter().next_back() {
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = lead.clone();
                    for (k, c) in pivot {
                        let entry = row.entry(*k).or_default();
                        *entry -= &(c * &factor);
                        if entry.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    let inv = lead.inv().expect("nonzero lead");
                    for c in row.values_mut() {
                        *c *= &inv;
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
        false
    }
}

/// Dense matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for k in c..self.cols {
                let v = self.get(r, k) * &inv;
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for k in c..self.cols {
                    let v = self.get(i, k) - &(self.get(r, k) * &f);
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, in RREF-canonical form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f);
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn row(entries: &[(usize, i64)]) -> BTreeMap<usize, Scalar> {
        entries.iter().map(|&(k, v)| (k, s(v))).collect()
    }

    #[test]
    fn sparse_rank_detects_dependence() {
        let mut e = SparseEliminator::new();
        assert!(e.insert(row(&[(0, 1), (1, 1)])));
        assert!(e.insert(row(&[(1, 1), (2, 1)])));
        assert!(!e.insert(row(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(!e.insert(BTreeMap::new()));
    }

    #[test]
    fn dense_kernel() {
        let mut m = Matrix::zeros(2, 3);
        m.set(0, 0, s(1));
        m.set(0, 1, s(2));
        m.set(1, 2, s(3));
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![s(-2), s(1), s(0)]]);
    }

    #[test]
    fn zero_matrix_full_kernel() {
        let m = Matrix::zeros(3, 2);
        assert_eq!(m.kernel_basis().len(), 2);
        assert_eq!(m.rank(), 0);
    }
}
