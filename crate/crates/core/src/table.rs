use num_traits::Zero;

use crate::linalg::{axpy, check_len, zero_vector, Matrix, Rational, Vector};
use crate::Result;

/// Structure constants of a bilinear map `k^n x k^n -> k^n`:
/// `e_i * e_j = Σ_k t[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    dim: usize,
    data: Vec<Rational>,
}

impl Table {
    pub fn zero(dim: usize) -> Self {
        Table {
            dim,
            data: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// From a flat `[i][j][k]` array of length `dim^3`.
    pub fn from_flat(dim: usize, data: Vec<Rational>) -> Result<Self> {
        check_len(&data, dim * dim * dim)?;
        Ok(Table { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let mut t = Table::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                check_len(&v, dim)?;
                t.set(i, j, v);
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// `e_i * e_j` as a coordinate slice.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        debug_assert_eq!(v.len(), self.dim);
        let start = (i * self.dim + j) * self.dim;
        for (slot, x) in self.data[start..start + self.dim].iter_mut().zip(v) {
            *slot = x;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `x * y` for arbitrary vectors (lengths assumed checked).
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// `e_i * y`
    pub fn apply_left_basis(&self, i: usize, y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (j, yj) in y.iter().enumerate() {
            axpy(&mut out, yj, self.basis_product(i, j));
        }
        out
    }

    /// `x * e_j`
    pub fn apply_right_basis(&self, x: &[Rational], j: usize) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut out, xi, self.basis_product(i, j));
        }
        out
    }

    /// Matrix of `y ↦ x * y`.
    pub fn left_matrix(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.apply_right_basis(x, j))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y * x`.
    pub fn right_matrix(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.apply_left_basis(j, x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Rewrites the table in a new basis. `to_old` has the new basis vectors
    /// as columns (in old coordinates) and `to_new` is its inverse.
    pub fn change_basis(&self, to_old: &Matrix, to_new: &Matrix) -> Table {
        let n = self.dim;
        let olds: Vec<Vector> = to_old.columns();
        let mut t = Table::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, to_new.apply(&self.apply(&olds[i], &olds[j])));
            }
        }
        t
    }

    /// Nonzero entries as `(i, j, k, value)` sorted by `(i, j, k)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    pub(crate) fn map(&self, f: impl Fn(&Rational) -> Rational) -> Table {
        Table {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }
}
