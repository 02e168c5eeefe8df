//! Exact dense linear algebra: fraction-free integer solving for field
//! inversion, and Gauss-Jordan elimination over tower fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::element::FieldElement;
use super::tower::TowerId;
use crate::error::{Error, Result};

/// Solves the square integer system `a x = rhs` by Bareiss elimination.
///
/// Returns `(y, d)` with `x = y / d`, or `None` if `a` is singular.
pub(crate) fn solve_integer_system(mut a: Vec<Vec<BigInt>>, rhs: Vec<BigInt>) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    for (row, b) in a.iter_mut().zip(rhs) {
        debug_assert_eq!(row.len(), n);
        row.push(b);
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..=n {
                let v = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    // `prev` is now +-det(a); every `det * x_i` is an integer by Cramer's rule.
    let det = prev;
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &a[i][n] * &det;
        for j in i + 1..n {
            acc -= &a[i][j] * &y[j];
        }
        y[i] = acc / &a[i][i];
    }
    Some((y, det))
}

/// A dense row-major matrix over a single tower field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    tower: TowerId,
    entries: Vec<FieldElement>,
}

impl ExactMatrix {
    pub fn new(tower: TowerId, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Malformed(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.tower() != tower) {
            return Err(Error::TowerMismatch(tower, e.tower()));
        }
        Ok(ExactMatrix { rows, cols, tower, entries })
    }

    pub fn from_rows(tower: TowerId, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(tower, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn identity(tower: TowerId, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { FieldElement::one(tower) } else { FieldElement::zero(tower) })
            .collect();
        ExactMatrix { rows: n, cols: n, tower, entries }
    }

    pub fn zeros(tower: TowerId, rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, tower, entries: vec![FieldElement::zero(tower); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tower(&self) -> TowerId {
        self.tower
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn permute_rows(&self, order: &[usize]) -> Self {
        let rows = order.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(self.tower, rows).expect("same shape")
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::Malformed(format!("vector length {} for {} columns", v.len(), self.cols)));
        }
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .try_fold(FieldElement::zero(self.tower), |acc, (a, b)| acc.try_add(&a.try_mul(b)?))
            })
            .collect()
    }

    /// Reduced row echelon form and the list of pivot columns.
    fn rref(&self) -> (Vec<Vec<FieldElement>>, Vec<usize>) {
        let mut m: Vec<Vec<FieldElement>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                m[r][j] = &m[r][j] * &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for j in c..self.cols {
                    row[j] -= &(&f * &pivot_row[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel; empty iff the matrix has full column rank.
    ///
    /// Each basis vector has a 1 in one free column and 0 in the others.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![FieldElement::zero(self.tower); self.cols];
                v[f] = FieldElement::one(self.tower);
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -&m[k][f];
                }
                v
            })
            .collect()
    }

    /// Some solution of `self x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if b.len() != self.rows {
            return Err(Error::Malformed(format!("rhs length {} for {} rows", b.len(), self.rows)));
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let aug = Self::from_rows(self.tower, rows)?;
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![FieldElement::zero(self.tower); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = m[k][self.cols].clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> FieldElement {
        FieldElement::from_int(TowerId::Q, n)
    }

    #[test]
    fn bareiss_small_system() {
        let a = vec![vec![2.into(), 1.into()], vec![1.into(), 3.into()]];
        let (y, d) = solve_integer_system(a, vec![1.into(), 0.into()]).unwrap();
        // x = (3/5, -1/5)
        assert_eq!(&y[0] * 5, &d * 3);
        assert_eq!(&y[1] * 5, -&d);
    }

    #[test]
    fn bareiss_needs_row_swap() {
        let a = vec![vec![0.into(), 1.into()], vec![1.into(), 0.into()]];
        let (y, d) = solve_integer_system(a, vec![4.into(), 7.into()]).unwrap();
        assert_eq!(y[0], &d * 7);
        assert_eq!(y[1], &d * 4);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![1.into(), 2.into()], vec![2.into(), 4.into()]];
        assert!(solve_integer_system(a, vec![1.into(), 0.into()]).is_none());
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(ExactMatrix::identity(TowerId::AlphaBeta, 6).nullspace().is_empty());
    }

    #[test]
    fn zero_row_has_full_kernel() {
        let m = ExactMatrix::zeros(TowerId::Q, 1, 3);
        assert_eq!(m.nullspace().len(), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = ExactMatrix::from_rows(TowerId::Q, vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(7)]]).unwrap();
        let ker = m.nullspace();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).unwrap().iter().all(FieldElement::is_zero));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = ExactMatrix::from_rows(TowerId::Q, vec![vec![q(1), q(1)], vec![q(2), q(2)]]).unwrap();
        assert!(m.solve(&[q(1), q(3)]).unwrap().is_none());
        let x = m.solve(&[q(1), q(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![q(1), q(2)]);
    }

    #[test]
    fn malformed_shapes() {
        assert!(ExactMatrix::new(TowerId::Q, 2, 2, vec![q(1)]).is_err());
        assert!(ExactMatrix::new(TowerId::EpsMu, 1, 1, vec![q(1)]).is_err());
    }
}
