//! Dense matrices over an exact scalar.
//!
//! Generic operations (products, transposes, cofactor determinants) work for
//! any [`Scalar`]; elimination-based routines (RREF, rank, nullspace, affine
//! solving, inverse) need division and are provided for `Mat<Rational>` only.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::dimension("ragged rows"));
        }
        Ok(Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix whose k-th column is `columns[k]`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::dimension("column length differs from row count"));
        }
        Ok(Mat::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        if self.cols != rhs.rows {
            return Err(Error::dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if self.cols != v.len() {
            return Err(Error::dimension(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a.clone() * b;
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Mat<S>, f: impl Fn(&S, &S) -> S) -> Result<Mat<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::dimension(format!(
                "shape {}x{} differs from {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        self.zip_with(rhs, |a, b| a.clone() + b)
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        self.zip_with(rhs, |a, b| a.clone() - b)
    }

    pub fn scale(&self, k: &S) -> Mat<S> {
        self.map(|a| a.clone() * k)
    }

    pub fn neg(&self) -> Mat<S> {
        self.map(|a| -a.clone())
    }

    pub fn trace(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::dimension("trace of a non-square matrix"));
        }
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        Ok(acc)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Mat<S>> {
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::dimension("submatrix index out of range"));
        }
        Ok(Mat::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows[r], cols[c])].clone()
        }))
    }

    /// Determinant by Laplace expansion along rows, memoised over column
    /// subsets. Division-free, so it works over any commutative ring;
    /// O(n·2ⁿ) ring operations.
    pub fn det(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        if n > 20 {
            return Err(Error::dimension("cofactor determinant limited to n <= 20"));
        }
        // minors[mask] = det of rows (n - |mask|).. restricted to columns in mask
        let mut minors: HashMap<u32, S> = HashMap::new();
        minors.insert(0, S::one());
        for size in 1..=n {
            let row = n - size;
            let masks: Vec<u32> = (0u32..(1 << n))
                .filter(|m| m.count_ones() as usize == size)
                .collect();
            for mask in masks {
                let mut acc = S::zero();
                let mut sign_positive = true;
                for col in 0..n {
                    if mask & (1 << col) == 0 {
                        continue;
                    }
                    let entry = &self[(row, col)];
                    if !entry.is_zero() {
                        let minor = &minors[&(mask & !(1 << col))];
                        if !minor.is_zero() {
                            let term = entry.clone() * minor;
                            if sign_positive {
                                acc += term;
                            } else {
                                acc -= term;
                            }
                        }
                    }
                    sign_positive = !sign_positive;
                }
                minors.insert(mask, acc);
            }
            minors.retain(|m, _| m.count_ones() as usize >= size);
        }
        Ok(minors.remove(&((1u32 << n) - 1)).expect("full minor computed"))
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl<S: fmt::Display> fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Outcome of solving `A·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    NoSolution,
    Solutions {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
}

impl AffineSolution {
    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSolution::NoSolution)
    }
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat<Rational>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat<Rational> {
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[(row, c)];
                    m[(r, c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical nullspace basis: one vector per free column in ascending
    /// order, with that free variable set to 1 and the other free variables 0.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&matrix[(r, f)];
                }
                v
            })
            .collect()
    }

    pub fn solve_affine(&self, b: &[Rational]) -> Result<AffineSolution> {
        if b.len() != self.rows {
            return Err(Error::dimension(format!(
                "right-hand side has length {} but the system has {} rows",
                b.len(),
                self.rows
            )));
        }
        let augmented = Mat::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let Rref { matrix, pivots, .. } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(AffineSolution::NoSolution);
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = matrix[(r, self.cols)].clone();
        }
        Ok(AffineSolution::Solutions {
            particular,
            nullspace: self.nullspace(),
        })
    }

    pub fn inverse(&self) -> Result<Mat<Rational>> {
        if !self.is_square() {
            return Err(Error::dimension("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let augmented = Mat::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let reduced = augmented.rref();
        if !(0..n).all(|i| reduced.pivots.get(i) == Some(&i)) {
            return Err(Error::DivisionByZero);
        }
        Ok(Mat::from_fn(n, n, |r, c| reduced.matrix[(r, c + n)].clone()))
    }

    /// Determinant by Gaussian elimination; an independent route to
    /// [`Mat::det`] for rational matrices.
    pub fn det_by_elimination(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::dimension("determinant of a non-square matrix"));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.inv()?;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for c in col..n {
                    let delta = &factor * &m[(col, c)];
                    m[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Exact positive-definiteness: symmetric with every leading principal
    /// minor strictly positive.
    pub fn check_positive_definite(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotPositiveDefinite(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        if *self != self.transpose() {
            return Err(Error::NotPositiveDefinite("not symmetric".into()));
        }
        for k in 1..=self.rows {
            let idx: Vec<usize> = (0..k).collect();
            let minor = self.submatrix(&idx, &idx)?.det_by_elimination()?;
            if !minor.is_positive() {
                return Err(Error::NotPositiveDefinite(format!(
                    "leading principal minor of order {k} is {minor}"
                )));
            }
        }
        Ok(())
    }
}
