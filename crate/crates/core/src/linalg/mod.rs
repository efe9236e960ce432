//! Exact rational linear algebra.
//!
//! Dense matrices over `BigRational`, canonical (RREF) subspaces, and the
//! Fitting decomposition of a commuting family of operators. Dimensions in
//! this crate are small (a few dozen at most), so everything is dense.

mod fitting;
mod matrix;
mod subspace;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use fitting::{
    fitting_split_family, fitting_split_family_in, fitting_split_single, is_nilpotent_operator,
    FittingSplit,
};
pub use matrix::{image, kernel, solve, Matrix, Rref};
pub use subspace::Subspace;

pub type Rational = num_rational::BigRational;

/// Column vector of rationals.
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// The `i`-th standard basis vector of length `n` (0-based).
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn vector_from_ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(s: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// `Σ coeffs[i] * vectors[i]`, all vectors of length `n`.
pub fn combination(n: usize, coeffs: &[Rational], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

pub(crate) fn check_len(v: &[Rational], expected: usize) -> crate::Result<()> {
    if v.len() != expected {
        return Err(crate::Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}
