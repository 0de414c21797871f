//! Dense exact linear algebra: reduced row echelon form, rank, nullspace
//! and affine solution spaces.

use std::fmt;

use thiserror::Error;

use super::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("linear system is inconsistent")]
    Infeasible,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction. `pivots[k]` is the pivot column of row `k`.
#[derive(Clone)]
pub struct Rref<S> {
    pub matrix: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: Scalar> fmt::Debug for Rref<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rref {{ pivots: {:?}, {:?} }}", self.pivots, self.matrix)
    }
}

/// `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace<S> {
    pub particular: Vec<S>,
    pub nullspace: Vec<Vec<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Builds from rows of equal length. An empty row list gives a `0 x cols`
    /// matrix with `cols = 0`; use [`Matrix::with_cols`] when the width matters.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::with_cols(cols, rows)
    }

    pub fn with_cols(cols: usize, rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<S>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(S::zero(), |acc, (a, b)| {
                    if a.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * b.clone()
                    }
                })
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan elimination. Among eligible pivot rows the entry of
    /// smallest bit size is preferred to limit coefficient growth.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let best = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| m.get(i, c).bit_size());
            let Some(p) = best else { continue };
            m.swap_rows(r, p);
            let inv = S::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            let pivot_row: Vec<S> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if pivot_row[j].is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() - factor.clone() * pivot_row[j].clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column with that
    /// column set to 1 and the other free columns to 0.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let Rref { matrix, pivots } = self.rref();
        nullspace_from_rref(&matrix, &pivots, self.cols)
    }

    /// Solves `M x = rhs`.
    pub fn solve(&self, rhs: &[S]) -> Result<SolutionSpace<S>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::Dimension(format!(
                "{} rows but rhs of length {}",
                self.rows,
                rhs.len()
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::Infeasible);
        }
        let mut particular = vec![S::zero(); self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            particular[pc] = matrix.get(k, self.cols).clone();
        }
        let nullspace = nullspace_from_rref(&matrix, &pivots, self.cols);
        Ok(SolutionSpace {
            particular,
            nullspace,
        })
    }

    /// Determinant of a square matrix by elimination.
    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = S::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return S::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det = det * pv.clone();
            let inv = S::one() / pv;
            for i in c + 1..m.rows {
                let f = m.get(i, c).clone() * inv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

fn nullspace_from_rref<S: Scalar>(m: &Matrix<S>, pivots: &[usize], cols: usize) -> Vec<Vec<S>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        if p < cols {
            is_pivot[p] = true;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for (k, &pc) in pivots.iter().enumerate() {
            if pc < cols {
                v[pc] = -m.get(k, free).clone();
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let s = a.solve(&[int(3), int(1)]).unwrap();
        assert_eq!(s.particular, vec![int(2), int(1)]);
        assert!(s.nullspace.is_empty());
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&[int(1), int(3)]), Err(LinalgError::Infeasible));
    }

    #[test]
    fn determinant_small() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), int(1));
        let b = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(b.determinant(), int(-2));
        let c = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(c.determinant(), rat(1, 10) - rat(1, 12));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-4i64..5, 12)) {
            let a = Matrix::with_cols(4, entries.chunks(4).map(|r| r.iter().map(|&v| int(v)).collect()).collect());
            let ns = a.nullspace();
            prop_assert_eq!(a.rank() + ns.len(), 4);
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn solutions_satisfy_system(entries in proptest::collection::vec(-4i64..5, 12), x in proptest::collection::vec(-3i64..4, 4)) {
            let a = Matrix::with_cols(4, entries.chunks(4).map(|r| r.iter().map(|&v| int(v)).collect()).collect());
            let x: Vec<Rational> = x.into_iter().map(int).collect();
            let b = a.mul_vec(&x);
            let s = a.solve(&b).unwrap();
            prop_assert_eq!(a.mul_vec(&s.particular), b);
        }
    }
}
