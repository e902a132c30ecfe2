//! Exact sparse rational matrices: rank, right kernel and invertibility by
//! Gauss-Jordan elimination with pivots chosen in column order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{HochError, Result};
use crate::lincomb::Rational;

type SparseRow = BTreeMap<usize, Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(HochError::Shape("ragged rows".into()));
            }
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Stores `value` at `(row, col)`; a zero value clears the entry.
    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let mut out = vec![Rational::zero(); self.rows];
        for (&(i, j), c) in &self.entries {
            out[i] += c * &v[j];
        }
        out
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        let mut rows = vec![SparseRow::new(); self.rows];
        for (&(i, j), c) in &self.entries {
            rows[i].insert(j, c.clone());
        }
        rows
    }

    pub fn rank(&self) -> usize {
        reduced_row_echelon(self.sparse_rows(), self.cols).len()
    }

    /// Basis of `{v : m·v = 0}`, itself in reduced row-echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let reduced = reduced_row_echelon(self.sparse_rows(), self.cols);
        let pivots: Vec<usize> = reduced
            .iter()
            .map(|r| *r.keys().next().expect("nonzero row"))
            .collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut raw = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = SparseRow::new();
            v.insert(free, Rational::one());
            for (row, &p) in reduced.iter().zip(&pivots) {
                if let Some(c) = row.get(&free) {
                    v.insert(p, -c.clone());
                }
            }
            raw.push(v);
        }
        reduced_row_echelon(raw, self.cols)
            .into_iter()
            .map(|row| {
                let mut dense = vec![Rational::zero(); self.cols];
                for (j, c) in row {
                    dense[j] = c;
                }
                dense
            })
            .collect()
    }

    pub fn is_invertible(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(HochError::Shape(format!(
                "invertibility needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rank() == self.rows)
    }

    /// True when square with ones on the diagonal and zeros below it.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| self.get(i, i).is_one())
            && self.entries.keys().all(|&(i, j)| i <= j)
    }
}

/// Nonzero rows of the reduced row-echelon form, ordered by pivot column.
fn reduced_row_echelon(mut rows: Vec<SparseRow>, cols: usize) -> Vec<SparseRow> {
    rows.retain(|r| !r.is_empty());
    let mut reduced: Vec<SparseRow> = Vec::new();
    for col in 0..cols {
        let Some(pos) = rows.iter().position(|r| r.contains_key(&col)) else {
            continue;
        };
        let mut pivot = rows.swap_remove(pos);
        let inv = pivot[&col].recip();
        for c in pivot.values_mut() {
            *c *= &inv;
        }
        for other in rows.iter_mut().chain(reduced.iter_mut()) {
            if let Some(factor) = other.get(&col).cloned() {
                eliminate(other, &pivot, &factor);
            }
        }
        rows.retain(|r| !r.is_empty());
        reduced.push(pivot);
    }
    reduced
}

/// `row -= factor · pivot`
fn eliminate(row: &mut SparseRow, pivot: &SparseRow, factor: &Rational) {
    for (&j, c) in pivot {
        let delta = factor * c;
        let entry = row.entry(j).or_insert_with(Rational::zero);
        *entry -= delta;
        if entry.is_zero() {
            row.remove(&j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rational;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rational(x)).collect())
            .collect();
        RatMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(2, 5).rank(), 0);
        assert_eq!(m(&[&[1, 1]]).rank(), 1);
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(4).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zeros(1, 3).kernel_basis().len(), 3);
        assert_eq!(
            m(&[&[1, 1]]).kernel_basis(),
            vec![vec![rational(1), rational(-1)]]
        );
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let kernel = a.kernel_basis();
        assert_eq!(a.rank() + kernel.len(), a.col_count());
        for v in &kernel {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn invertibility() {
        assert!(RatMatrix::identity(3).is_invertible().unwrap());
        assert!(!RatMatrix::zeros(3, 3).is_invertible().unwrap());
        assert!(matches!(
            RatMatrix::zeros(2, 3).is_invertible(),
            Err(HochError::Shape(_))
        ));
        assert!(m(&[&[1, 5], &[0, 1]]).is_upper_unitriangular());
        assert!(!m(&[&[1, 0], &[3, 1]]).is_upper_unitriangular());
    }

    #[test]
    fn row_order_does_not_matter() {
        let a = m(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]]);
        let b = m(&[&[1, 3, 4], &[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(a.rank(), b.rank());
        assert_eq!(a.kernel_basis(), b.kernel_basis());
    }
}
