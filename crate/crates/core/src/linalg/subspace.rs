use num_traits::{One, Zero};

use super::{check_len, kernel, zero_vector, Matrix, Rational, Vector};
use crate::{Error, Result};

/// A linear subspace of `k^n` stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so derived `PartialEq` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| super::unit_vector(ambient_dim, i))
            .collect();
        Subspace {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        for v in &rows {
            check_len(v, ambient_dim)?;
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let r = Matrix::from_rows(rows).rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots: r.pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical RREF basis vectors.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient_dim x dim` matrix with the basis as columns.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`], or `None` if
    /// `v` is not in the subspace.
    ///
    /// With an RREF basis the coordinate on basis vector `t` is simply the
    /// entry of `v` at pivot `t`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            super::axpy(&mut residual, &-c.clone(), b);
        }
        super::is_zero_vector(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    fn require_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.require_same_ambient(other)?;
        Subspace::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Intersection via the kernel of `[A | -B]`: each kernel vector
    /// `(α, β)` gives the common vector `Σ α_i a_i`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.require_same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let n = self.ambient_dim;
        let (da, db) = (self.dim(), other.dim());
        let m = Matrix::from_fn(n, da + db, |i, j| {
            if j < da {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - da][i].clone()
            }
        });
        let common: Vec<Vector> = kernel(&m)
            .basis()
            .iter()
            .map(|coeffs| {
                let mut v = zero_vector(n);
                for (c, b) in coeffs[..da].iter().zip(&self.basis) {
                    super::axpy(&mut v, c, b);
                }
                v
            })
            .collect();
        Subspace::span(n, common)
    }

    /// Canonical complement: standard basis vectors at the non-pivot
    /// coordinates.
    pub fn complement(&self) -> Subspace {
        let n = self.ambient_dim;
        let free = self.non_pivots();
        Subspace {
            ambient_dim: n,
            basis: free.iter().map(|&i| super::unit_vector(n, i)).collect(),
            pivots: free,
        }
    }

    /// Coordinates that are not pivots, in increasing order. These index the
    /// canonical complement and the canonical quotient basis.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|i| self.pivots.binary_search(i).is_err())
            .collect()
    }

    /// Coordinates of `v` modulo this subspace, on the canonical quotient
    /// basis (images of the standard vectors at [`Subspace::non_pivots`]).
    pub fn quotient_coordinates(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim);
        let mut r = v.to_vec();
        for (&p, b) in self.pivots.iter().zip(&self.basis) {
            let c = r[p].clone();
            if !c.is_zero() {
                super::axpy(&mut r, &-c, b);
            }
        }
        self.non_pivots()
            .into_iter()
            .map(|i| r[i].clone())
            .collect()
    }

    /// Matrix of the projection `k^n -> k^n / self` on the canonical
    /// quotient basis.
    pub fn quotient_projection(&self) -> Matrix {
        let n = self.ambient_dim;
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.quotient_coordinates(&super::unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n - self.dim(), &cols)
    }

    /// Section of [`Subspace::quotient_projection`]: quotient basis vector
    /// `t` maps to the standard vector at the `t`-th non-pivot.
    pub fn quotient_section(&self) -> Matrix {
        let n = self.ambient_dim;
        let free = self.non_pivots();
        Matrix::from_fn(n, free.len(), |i, j| {
            if free[j] == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Whether `m` maps this subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }

    /// Matrix of `m` restricted to this (invariant) subspace in the
    /// coordinates of [`Subspace::basis`]. `None` if not invariant.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> = self
            .basis
            .iter()
            .map(|b| self.coordinates(&m.apply(b)))
            .collect();
        Some(Matrix::from_columns(self.dim(), &cols?))
    }
}
