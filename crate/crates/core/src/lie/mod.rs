//! Lie algebras given by structure constants.

mod series;
mod split;

use std::fmt;

use crate::exec::{self, Execution};
use crate::linalg::{add_vectors, check_len, is_zero_vector, Matrix, Rational, Subspace, Vector};
use crate::table::Table;
use crate::{Error, Result};

pub use series::{is_two_step_solvable, series, SeriesReport};
pub use split::{split_metabelian, SplitDecomposition};

/// A Lie algebra `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Construction does not validate the axioms; see [`validate_lie`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    table: Table,
    names: Option<Vec<String>>,
}

impl LieAlgebra {
    pub fn new(table: Table) -> Self {
        LieAlgebra { table, names: None }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(Table::zero(dim))
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v` for each entry
    /// (0-based indices). Later entries overwrite earlier ones.
    pub fn from_brackets<I>(dim: usize, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let mut table = Table::zero(dim);
        for (i, j, v) in brackets {
            check_len(&v, dim)?;
            if i >= dim || j >= dim {
                return Err(Error::InvalidParameter(format!(
                    "bracket index ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            let neg: Vector = v.iter().map(|x| -x.clone()).collect();
            table.set(i, j, v);
            table.set(j, i, neg);
        }
        Ok(LieAlgebra::new(table))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.table.get(i, j, k)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        self.table.basis_product(i, j)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        check_len(x, self.dim())?;
        check_len(y, self.dim())?;
        Ok(self.table.apply(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.table.apply(x, y)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieAxiom {
    Antisymmetry,
    Jacobi,
}

impl fmt::Display for LieAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieAxiom::Antisymmetry => "antisymmetry",
            LieAxiom::Jacobi => "jacobi",
        })
    }
}

/// A failed axiom on basis elements (0-based indices) with its defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieViolation {
    pub axiom: LieAxiom,
    pub indices: Vec<usize>,
    pub defect: Vector,
}

pub fn validate_lie(g: &LieAlgebra) -> Vec<LieViolation> {
    validate_lie_with(g, Execution::default())
}

/// Antisymmetry on all pairs `i <= j`, then the Jacobi identity. With
/// antisymmetry in place only `i < j < k` needs checking; otherwise every
/// ordered triple is checked.
pub fn validate_lie_with(g: &LieAlgebra, exec: Execution) -> Vec<LieViolation> {
    let n = g.dim();
    let mut violations: Vec<LieViolation> = exec::filter_map_range(exec, n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        if i > j {
            return None;
        }
        let defect = add_vectors(g.basis_bracket(i, j), g.basis_bracket(j, i));
        (!is_zero_vector(&defect)).then(|| LieViolation {
            axiom: LieAxiom::Antisymmetry,
            indices: vec![i, j],
            defect,
        })
    });
    let antisymmetric = violations.is_empty();
    violations.extend(exec::filter_map_range(exec, n * n * n, |idx| {
        let (i, j, k) = exec::triple(idx, n);
        if antisymmetric && !(i < j && j < k) {
            return None;
        }
        let defect = jacobi_defect(g, i, j, k);
        (!is_zero_vector(&defect)).then(|| LieViolation {
            axiom: LieAxiom::Jacobi,
            indices: vec![i, j, k],
            defect,
        })
    }));
    violations
}

/// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`
fn jacobi_defect(g: &LieAlgebra, i: usize, j: usize, k: usize) -> Vector {
    let t = g.table();
    let a = t.apply_left_basis(i, g.basis_bracket(j, k));
    let b = t.apply_left_basis(j, g.basis_bracket(k, i));
    let c = t.apply_left_basis(k, g.basis_bracket(i, j));
    add_vectors(&add_vectors(&a, &b), &c)
}

pub(crate) fn require_valid(g: &LieAlgebra) -> Result<()> {
    let v = validate_lie(g);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidLieAlgebra(v.len()))
    }
}

/// Matrix of `ad(x) = [x, ·]`.
pub fn ad(g: &LieAlgebra, x: &[Rational]) -> Result<Matrix> {
    check_len(x, g.dim())?;
    Ok(g.table().left_matrix(x))
}

fn require_ambient(g: &LieAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

/// `[a, b]`: span of brackets of basis vectors.
pub fn bracket_of_subspaces(g: &LieAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    require_ambient(g, a)?;
    require_ambient(g, b)?;
    let mut out = Vec::with_capacity(a.dim() * b.dim());
    for u in a.basis() {
        for v in b.basis() {
            let w = g.bracket_unchecked(u, v);
            if !is_zero_vector(&w) {
                out.push(w);
            }
        }
    }
    Subspace::span(g.dim(), out)
}

pub fn is_ideal(g: &LieAlgebra, s: &Subspace) -> Result<bool> {
    let whole = Subspace::full(g.dim());
    Ok(bracket_of_subspaces(g, &whole, s)?.is_subspace_of(s))
}

pub fn is_subalgebra(g: &LieAlgebra, s: &Subspace) -> Result<bool> {
    Ok(bracket_of_subspaces(g, s, s)?.is_subspace_of(s))
}

/// `g / ideal` on the canonical quotient basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim(g/ideal) x dim(g)`
    pub projection: Matrix,
    /// `dim(g) x dim(g/ideal)`, a linear right inverse of `projection`.
    pub section: Matrix,
}

pub fn quotient(g: &LieAlgebra, ideal: &Subspace) -> Result<Quotient> {
    require_ambient(g, ideal)?;
    if !is_ideal(g, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let projection = ideal.quotient_projection();
    let section = ideal.quotient_section();
    let reps = section.columns();
    let m = reps.len();
    let table = Table::from_fn(m, |a, b| {
        ideal.quotient_coordinates(&g.bracket_unchecked(&reps[a], &reps[b]))
    })?;
    Ok(Quotient {
        algebra: LieAlgebra::new(table),
        projection,
        section,
    })
}

/// Smallest subalgebra containing `vs`, by saturation under brackets.
pub fn subalgebra_generated(g: &LieAlgebra, vs: &[Vector]) -> Result<Subspace> {
    let mut s = Subspace::span(g.dim(), vs.iter().cloned())?;
    loop {
        let next = s.sum(&bracket_of_subspaces(g, &s, &s)?)?;
        if next == s {
            return Ok(s);
        }
        s = next;
    }
}
