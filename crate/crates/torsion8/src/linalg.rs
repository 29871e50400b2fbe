//! Exact Gaussian elimination over the rationals.
//!
//! [`RowSpace`] maintains a reduced row-echelon basis of a subspace of
//! `Q^width` and supports incremental insertion and membership tests. All
//! arithmetic is exact.

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct RowSpace {
    width: usize,
    /// Rows in reduced echelon form, sorted by pivot column; each row's
    /// pivot entry is 1 and its pivot column is zero in every other row.
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Residual of `v` after elimination against the current basis.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (vi, ri) in v.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *vi -= &factor * ri;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Inserts `v` if it is independent of the basis; returns whether the
    /// rank grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c /= &lead;
            }
        }
        // keep the basis fully reduced
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (wi, ri) in row.iter_mut().zip(&r) {
                if !ri.is_zero() {
                    *wi -= &factor * ri;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}
