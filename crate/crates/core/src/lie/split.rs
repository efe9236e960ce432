use super::{bracket_of_subspaces, is_two_step_solvable, series, LieAlgebra};
use crate::linalg::{axpy, combination, solve, zero_vector, Matrix, Rational, Subspace, Vector};
use crate::table::Table;
use crate::{Error, Result};
use num_traits::Zero;

/// `g = g^∞ ⋊ n` for a two-step solvable `g`.
///
/// The complement basis is indexed like the canonical quotient basis of
/// `g / g^∞`: complement vector `a` projects to quotient basis vector `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    /// The algebra that was split.
    pub algebra: LieAlgebra,
    pub g_infinity: Subspace,
    /// RREF basis of `g^∞`.
    pub g_infinity_basis: Vec<Vector>,
    /// Basis of a complement subalgebra `n`.
    pub complement_basis: Vec<Vector>,
    /// `phi[a]` is `ad(complement_basis[a])` restricted to `g^∞`, in the
    /// coordinates of `g_infinity_basis`.
    pub phi: Vec<Matrix>,
    /// Columns: `g_infinity_basis` then `complement_basis`, in original
    /// coordinates.
    pub change_of_basis: Matrix,
    /// Inverse of `change_of_basis`.
    pub to_adapted: Matrix,
    /// Bracket of `n` in the complement basis.
    pub complement_algebra: LieAlgebra,
}

impl SplitDecomposition {
    pub fn dim(&self) -> usize {
        self.change_of_basis.rows()
    }

    pub fn infinity_dim(&self) -> usize {
        self.g_infinity_basis.len()
    }

    pub fn complement_dim(&self) -> usize {
        self.complement_basis.len()
    }

    /// `phi` of a complement element given in complement coordinates.
    pub fn phi_of(&self, coords: &[Rational]) -> Matrix {
        let r = self.infinity_dim();
        let mut m = Matrix::zeros(r, r);
        for (c, p) in coords.iter().zip(&self.phi) {
            m.add_scaled(c, p);
        }
        m
    }
}

/// Finds a complement subalgebra to `g^∞` and the action `phi`.
///
/// Starts from the canonical linear complement `W` and solves the linear
/// system for `τ: W -> g^∞` making `{w + τ(w)}` closed under the bracket:
///
/// `c(w_a, w_b) + [w_a, τ w_b] - [w_b, τ w_a] - τ(π_W [w_a, w_b]) = 0`,
///
/// where `c` is the `g^∞`-component of the bracket. The system is solvable
/// whenever `g` is two-step solvable; failure is reported as
/// [`Error::Internal`].
pub fn split_metabelian(g: &LieAlgebra) -> Result<SplitDecomposition> {
    if !is_two_step_solvable(g)? {
        return Err(Error::NotTwoStepSolvable);
    }
    let report = series(g)?;
    let n = g.dim();
    let g_inf = report.g_infinity;
    let whole = Subspace::full(n);
    if bracket_of_subspaces(g, &whole, &g_inf)? != g_inf
        || !bracket_of_subspaces(g, &g_inf, &g_inf)?.is_zero()
    {
        return Err(Error::Internal(
            "g^inf is not an abelian ideal with [g, g^inf] = g^inf".into(),
        ));
    }

    let inf_basis: Vec<Vector> = g_inf.basis().to_vec();
    let r = inf_basis.len();
    let w: Vec<Vector> = g_inf.complement().basis().to_vec();
    let s = w.len();

    // Split v = (W-part, g^inf-part) along g = W ⊕ g^inf.
    let decompose = |v: &[Rational]| -> (Vector, Vector) {
        let inf_part =
            g_inf
                .pivots()
                .iter()
                .zip(&inf_basis)
                .fold(zero_vector(n), |mut acc, (&p, b)| {
                    axpy(&mut acc, &v[p], b);
                    acc
                });
        (g_inf.quotient_coordinates(v), inf_part)
    };

    let pairs: Vec<(usize, usize)> = (0..s)
        .flat_map(|a| (a + 1..s).map(move |b| (a, b)))
        .collect();
    let unknowns = s * r;
    let mut system = Matrix::zeros(pairs.len() * n, unknowns);
    let mut rhs = zero_vector(pairs.len() * n);
    let act: Vec<Vec<Vector>> = w
        .iter()
        .map(|wa| {
            inf_basis
                .iter()
                .map(|gb| g.bracket_unchecked(wa, gb))
                .collect()
        })
        .collect();
    for (row_block, &(a, b)) in pairs.iter().enumerate() {
        let (u, c) = decompose(&g.bracket_unchecked(&w[a], &w[b]));
        let base = row_block * n;
        for k in 0..n {
            rhs[base + k] = -c[k].clone();
        }
        for t in 0..r {
            for k in 0..n {
                // + [w_a, g_t] τ[b][t]
                system[(base + k, b * r + t)] += &act[a][t][k];
                // - [w_b, g_t] τ[a][t]
                system[(base + k, a * r + t)] -= &act[b][t][k];
                // - Σ_d u_d τ[d][t] g_t
                for (d, ud) in u.iter().enumerate() {
                    if !ud.is_zero() {
                        system[(base + k, d * r + t)] -= ud * &inf_basis[t][k];
                    }
                }
            }
        }
    }
    let tau = if unknowns == 0 {
        Vec::new()
    } else {
        solve(&system, &rhs)?
            .ok_or_else(|| Error::Internal("no complement subalgebra found for g^inf".into()))?
    };

    let complement_basis: Vec<Vector> = (0..s)
        .map(|a| {
            let mut v = w[a].clone();
            for t in 0..r {
                axpy(&mut v, &tau[a * r + t], &inf_basis[t]);
            }
            v
        })
        .collect();

    let phi: Vec<Matrix> = complement_basis
        .iter()
        .map(|wa| {
            let cols: Result<Vec<Vector>> = inf_basis
                .iter()
                .map(|gb| {
                    g_inf
                        .coordinates(&g.bracket_unchecked(wa, gb))
                        .ok_or_else(|| Error::Internal("g^inf is not an ideal".into()))
                })
                .collect();
            Ok(Matrix::from_columns(r, &cols?))
        })
        .collect::<Result<_>>()?;

    let mut bracket = Table::zero(s);
    for a in 0..s {
        for b in 0..s {
            let v = g.bracket_unchecked(&complement_basis[a], &complement_basis[b]);
            let coords = g_inf.quotient_coordinates(&v);
            if combination(n, &coords, &complement_basis) != v {
                return Err(Error::Internal(
                    "complement is not closed under the bracket".into(),
                ));
            }
            bracket.set(a, b, coords);
        }
    }

    let columns: Vec<Vector> = inf_basis.iter().chain(&complement_basis).cloned().collect();
    let change_of_basis = Matrix::from_columns(n, &columns);
    let to_adapted = change_of_basis
        .inverse()?
        .ok_or_else(|| Error::Internal("adapted basis is singular".into()))?;

    Ok(SplitDecomposition {
        algebra: g.clone(),
        g_infinity: g_inf,
        g_infinity_basis: inf_basis,
        complement_basis,
        phi,
        change_of_basis,
        to_adapted,
        complement_algebra: LieAlgebra::new(bracket),
    })
}
