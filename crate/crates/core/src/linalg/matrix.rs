use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use super::{check_len, zero_vector, Rational, Subspace, Vector};
use crate::{Error, Result};

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row-echelon form of a matrix together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds an `n x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vector]) -> Self {
        assert!(columns.iter().all(|c| c.len() == n), "column length");
        Self::from_fn(n, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| super::vector_from_ints(r)).collect())
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// `self * v`. Panics on length mismatch; see [`Matrix::try_apply`].
    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn try_apply(&self, v: &[Rational]) -> Result<Vector> {
        check_len(v, self.cols)?;
        Ok(self.apply(v))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Rational, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    /// `self^k` by repeated squaring. Panics if not square.
    pub fn pow(&self, mut k: usize) -> Matrix {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        (self * other).sub(&(other * self))
    }

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
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    if m[(row, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[(row, j)];
                    m[(r, j)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        let n = self.require_square()?;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let r = aug.rref();
        if r.pivots.iter().take_while(|&&p| p < n).count() < n {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(n, n, |i, j| {
            r.matrix[(i, n + j)].clone()
        })))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Null space of `m` as a canonical subspace of `k^cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let r = m.rref();
    let n = m.cols();
    let mut basis = Vec::with_capacity(n - r.rank);
    let mut pivot_iter = r.pivots.iter().peekable();
    for free in 0..n {
        if pivot_iter.peek() == Some(&&free) {
            pivot_iter.next();
            continue;
        }
        let mut v = zero_vector(n);
        v[free] = Rational::one();
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.matrix[(row, free)].clone();
        }
        basis.push(v);
    }
    Subspace::span(n, basis).expect("kernel vectors have ambient length")
}

/// Column space of `m` as a canonical subspace of `k^rows`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m.rows(), m.columns()).expect("columns have ambient length")
}

/// One solution of `m x = b`, or `None` when `b` is outside the column space.
/// Free variables are set to zero.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    check_len(b, m.rows())?;
    let n = m.cols();
    let aug = Matrix::from_fn(m.rows(), n + 1, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let r = aug.rref();
    if r.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vector(n);
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix[(row, n)].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat, vector_from_ints};

    #[test]
    fn rref_identity() {
        let r = Matrix::identity(2).rref();
        assert_eq!(r.matrix, Matrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_rank_one() {
        let r = Matrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let r = Matrix::zeros(3, 2).rref();
        assert!(r.matrix.is_zero());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(kernel(&Matrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_of_shift() {
        let k = kernel(&Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(k.basis(), &[vector_from_ints(&[1, 0])]);
    }

    #[test]
    fn solve_outside_image() {
        let m = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(solve(&m, &vector_from_ints(&[0, 1])).unwrap(), None);
        let x = solve(&m, &vector_from_ints(&[3, 0])).unwrap().unwrap();
        assert_eq!(m.apply(&x), vector_from_ints(&[3, 0]));
    }

    #[test]
    fn solve_rejects_bad_length() {
        let m = Matrix::identity(2);
        assert!(matches!(
            solve(&m, &vector_from_ints(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pow_and_inverse() {
        let rot = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(rot.pow(2), Matrix::identity(2).scale(&int(-1)));
        assert_eq!(rot.pow(0), Matrix::identity(2));
        let m = Matrix::from_i64(&[&[2, 1], &[0, 4]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(inv[(0, 1)], rat(-1, 8));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]])
            .inverse()
            .unwrap()
            .is_none());
    }
}
