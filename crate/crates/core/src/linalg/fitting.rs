use super::{image, kernel, Matrix, Subspace, Vector};
use crate::{Error, Result};

/// Decomposition `V = V_n ⊕ V_0` of a module over a commuting family of
/// operators, where `V_n` is the largest invariant subspace on which every
/// operator is nilpotent and `V_0` is an invariant complement with no
/// common nilpotent part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingSplit {
    pub v_n: Subspace,
    pub v_0: Subspace,
    /// Projection onto `v_n` along `v_0`.
    pub proj_n: Matrix,
}

impl FittingSplit {
    fn new(v_n: Subspace, v_0: Subspace) -> Result<Self> {
        let n = v_n.ambient_dim();
        if v_n.dim() + v_0.dim() != n {
            return Err(Error::Internal(format!(
                "Fitting parts have dimensions {} + {} != {}",
                v_n.dim(),
                v_0.dim(),
                n
            )));
        }
        let columns: Vec<Vector> = v_n.basis().iter().chain(v_0.basis()).cloned().collect();
        let adapted = Matrix::from_columns(n, &columns);
        let inv = adapted
            .inverse()?
            .ok_or_else(|| Error::Internal("Fitting parts are not complementary".into()))?;
        let mut keep = Matrix::zeros(n, n);
        for i in 0..v_n.dim() {
            keep[(i, i)] = num_traits::One::one();
        }
        let proj_n = &(&adapted * &keep) * &inv;
        Ok(FittingSplit { v_n, v_0, proj_n })
    }

    pub fn ambient_dim(&self) -> usize {
        self.v_n.ambient_dim()
    }
}

/// `m^n == 0` for an `n x n` matrix.
pub fn is_nilpotent_operator(m: &Matrix) -> Result<bool> {
    let n = m.require_square()?;
    Ok(m.pow(n).is_zero())
}

/// Fitting split of one operator: `V_n = ker m^n`, `V_0 = im m^n`.
pub fn fitting_split_single(m: &Matrix) -> Result<FittingSplit> {
    let n = m.require_square()?;
    let p = m.pow(n);
    FittingSplit::new(kernel(&p), image(&p))
}

/// Fitting split of a pairwise commuting family.
///
/// Splits by the first operator, then splits the running nilpotent part by
/// the next operator (it is invariant because the family commutes), and so
/// on. The non-nilpotent pieces accumulate into `V_0`.
pub fn fitting_split_family(ms: &[Matrix]) -> Result<FittingSplit> {
    let Some(first) = ms.first() else {
        return Err(Error::InvalidParameter(
            "Fitting split of an empty family needs an ambient dimension".into(),
        ));
    };
    fitting_split_family_in(first.require_square()?, ms)
}

/// [`fitting_split_family`] with an explicit ambient dimension, so that the
/// empty family (everything nilpotent) is allowed.
pub fn fitting_split_family_in(n: usize, ms: &[Matrix]) -> Result<FittingSplit> {
    for m in ms {
        if m.require_square()? != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.rows(),
            });
        }
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if !ms[i].commutator(&ms[j]).is_zero() {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }

    let mut nil = Subspace::full(n);
    let mut v_0 = Subspace::zero(n);
    for m in ms {
        if nil.is_zero() {
            break;
        }
        let local = nil
            .restrict(m)
            .ok_or_else(|| Error::Internal("nilpotent part is not invariant".into()))?;
        let p = local.pow(n);
        let lift = |s: Subspace| -> Vec<Vector> {
            let b = nil.basis_matrix();
            s.basis().iter().map(|c| b.apply(c)).collect()
        };
        let new_nil = Subspace::span(n, lift(kernel(&p)))?;
        let gained = Subspace::span(n, lift(image(&p)))?;
        v_0 = v_0.sum(&gained)?;
        nil = new_nil;
    }
    FittingSplit::new(nil, v_0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector_from_ints;

    fn diag(xs: &[i64]) -> Matrix {
        let n = xs.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                crate::linalg::int(xs[i])
            } else {
                crate::linalg::int(0)
            }
        })
    }

    #[test]
    fn nilpotency() {
        let strict = Matrix::from_i64(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
        assert!(is_nilpotent_operator(&strict).unwrap());
        assert!(!is_nilpotent_operator(&Matrix::identity(3)).unwrap());
        assert!(!is_nilpotent_operator(&Matrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap());
        assert!(is_nilpotent_operator(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn single_extremes() {
        let z = fitting_split_single(&Matrix::zeros(2, 2)).unwrap();
        assert!(z.v_n.is_full() && z.v_0.is_zero());
        assert_eq!(z.proj_n, Matrix::identity(2));
        let id = fitting_split_single(&Matrix::identity(2)).unwrap();
        assert!(id.v_n.is_zero() && id.v_0.is_full());
        assert!(id.proj_n.is_zero());
    }

    #[test]
    fn single_mixed() {
        let s = fitting_split_single(&Matrix::from_i64(&[&[1, 1], &[0, 0]])).unwrap();
        assert_eq!(s.v_n.basis(), &[vector_from_ints(&[1, -1])]);
        assert_eq!(s.v_0.basis(), &[vector_from_ints(&[1, 0])]);
        assert_eq!(&s.proj_n * &s.proj_n, s.proj_n);
    }

    #[test]
    fn family_examples() {
        let zero = Matrix::zeros(2, 2);
        assert!(fitting_split_family(&[zero.clone(), zero])
            .unwrap()
            .v_n
            .is_full());

        let s = fitting_split_family(&[diag(&[0, 1]), diag(&[0, 1])]).unwrap();
        assert_eq!(s.v_n.basis(), &[vector_from_ints(&[1, 0])]);
        assert_eq!(s.v_0.basis(), &[vector_from_ints(&[0, 1])]);

        let s = fitting_split_family(&[diag(&[0, 1]), diag(&[1, 0])]).unwrap();
        assert!(s.v_n.is_zero() && s.v_0.is_full());
    }

    #[test]
    fn family_errors() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(
            fitting_split_family(&[a.clone(), b]),
            Err(Error::NonCommuting(0, 1))
        );
        assert!(matches!(
            fitting_split_family(&[a, Matrix::identity(3)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(fitting_split_family(&[]).is_err());
    }
}
