use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::Rational;

/// Dense rectangular matrix of [`Rational`] entries, stored row-major.
///
/// Arithmetic asserts dimension compatibility; the fallible operations are
/// [`Matrix::inverse`] (singular input) and the parsers in the `io` module.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Returned by [`Matrix::inverse`] on singular input; carries the exact rank.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix of size {size}x{size} is singular (rank {rank})")]
pub struct SingularMatrixError {
    pub size: usize,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must equal rows * cols"
        );
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let n_rows = rows.len();
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have equal length"
        );
        let entries = rows.into_iter().flatten().collect();
        Matrix::new(n_rows, cols, entries)
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect::<Vec<Vec<Rational>>>();
        let cols = data[0].len();
        assert!(data.iter().all(|r| r.len() == cols));
        let n_rows = data.len();
        Matrix::new(n_rows, cols, data.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        assert!(r < self.rows);
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..=r).all(|c| *self.get(r, c) == -self.get(c, r))
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * k)
    }

    /// Matrix-vector product. Panics unless `v.len() == self.cols`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    /// Reduced row echelon form with deterministic elimination order:
    /// columns are processed left to right and the pivot is the first row (top
    /// to bottom) with a nonzero entry in the current column. Returns the RREF
    /// together with the list of pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                m.swap_rows(src, pivot_row);
            }
            let pivot = m.get(pivot_row, col).clone();
            if !pivot.is_one() {
                let inv = pivot.recip();
                for c in col..m.cols {
                    let v = m.get(pivot_row, c) * &inv;
                    m.set(pivot_row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(pivot_row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact rank, the number of pivots in the RREF.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel, returned as column vectors.
    ///
    /// Each free variable is set to 1 in turn, in increasing column order,
    /// with all other free variables 0; the list is ordered by free-variable
    /// index. Empty iff the kernel is trivial.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let free_cols: Vec<usize> = (0..self.cols)
            .filter(|&c| {
                if pivot_iter.peek() == Some(&c) {
                    pivot_iter.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        for &fc in &free_cols {
            let mut v = vec![Rational::zero(); self.cols];
            v[fc] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref.get(row, fc);
            }
            basis.push(Matrix::new(self.cols, 1, v));
        }
        basis
    }

    /// Exact inverse of a square matrix. Singular input reports the rank.
    pub fn inverse(&self) -> Result<Matrix, SingularMatrixError> {
        assert!(self.is_square(), "inverse requires a square matrix");
        let n = self.rows;
        // Row-reduce [M | I]; M is invertible iff the left block pivots on
        // every column, in which case the right block is the inverse.
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (reduced, pivots) = augmented.rref();
        let rank = pivots.iter().take_while(|&&c| c < n).count();
        if rank < n {
            return Err(SingularMatrixError { size: n, rank });
        }
        Ok(Matrix::from_fn(n, n, |r, c| reduced.get(r, n + c).clone()))
    }

    /// Moore–Penrose pseudo-inverse, computed exactly via the rank
    /// factorization `M = C F` (C the pivot columns of M, F the nonzero rows
    /// of the RREF): `M⁺ = Fᵀ (F Fᵀ)⁻¹ (Cᵀ C)⁻¹ Cᵀ`. The zero matrix maps to
    /// the transposed zero matrix.
    pub fn pseudo_inverse(&self) -> Matrix {
        let (rref, pivots) = self.rref();
        let r = pivots.len();
        if r == 0 {
            return Matrix::zeros(self.cols, self.rows);
        }
        let c = Matrix::from_fn(self.rows, r, |i, j| self.get(i, pivots[j]).clone());
        let f = Matrix::from_fn(r, self.cols, |i, j| rref.get(i, j).clone());
        let f_t = f.transpose();
        let c_t = c.transpose();
        let ff_t_inv = (&f * &f_t)
            .inverse()
            .expect("F F^T of a rank factorization is invertible");
        let c_tc_inv = (&c_t * &c)
            .inverse()
            .expect("C^T C of a rank factorization is invertible");
        &(&(&f_t * &ff_t_inv) * &c_tc_inv) * &c_t
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }
}
