//! Brute-force oracles shared by the integration tests. They read structure
//! constants directly and share no code with the checkers under test.
#![allow(dead_code)]

use lralg::linalg::{unit_vector, zero_vector};
use lralg::{LieAlgebra, Matrix, Product, Rational, Vector};
use num_traits::Zero;

/// `e_i · v`
fn left_basis(p: &Product, i: usize, v: &[Rational]) -> Vector {
    let n = p.dim();
    let mut out = zero_vector(n);
    for (m, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, x) in p.basis_product(i, m).iter().enumerate() {
            if !x.is_zero() {
                out[k] += c * x;
            }
        }
    }
    out
}

/// `v · e_j`
fn right_basis(p: &Product, v: &[Rational], j: usize) -> Vector {
    let n = p.dim();
    let mut out = zero_vector(n);
    for (m, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, x) in p.basis_product(m, j).iter().enumerate() {
            if !x.is_zero() {
                out[k] += c * x;
            }
        }
    }
    out
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub left_fails: bool,
    pub right_fails: bool,
    pub compat_fails: bool,
}

impl OracleReport {
    pub fn clean(&self) -> bool {
        !self.left_fails && !self.right_fails && !self.compat_fails
    }
}

/// Every ordered basis triple for the two LR identities, every pair for
/// compatibility.
pub fn lr_oracle(g: &LieAlgebra, p: &Product) -> OracleReport {
    let n = p.dim();
    let mut r = OracleReport::default();
    for i in 0..n {
        for j in 0..n {
            let bracket: Vector = g.basis_bracket(i, j).to_vec();
            let comm: Vector = p
                .basis_product(i, j)
                .iter()
                .zip(p.basis_product(j, i))
                .map(|(a, b)| a - b)
                .collect();
            r.compat_fails |= comm != bracket;
            for k in 0..n {
                let a = left_basis(p, i, p.basis_product(j, k));
                let b = left_basis(p, j, p.basis_product(i, k));
                r.left_fails |= a != b;
                let c = right_basis(p, p.basis_product(i, j), k);
                let d = right_basis(p, p.basis_product(i, k), j);
                r.right_fails |= c != d;
            }
        }
    }
    r
}

/// `R(e_i)`: column `m` is `e_m · e_i`.
pub fn right_matrix(p: &Product, i: usize) -> Matrix {
    let n = p.dim();
    let cols: Vec<Vector> = (0..n).map(|m| p.basis_product(m, i).to_vec()).collect();
    Matrix::from_columns(n, &cols)
}

/// `L(e_i)`: column `m` is `e_i · e_m`.
pub fn left_matrix(p: &Product, i: usize) -> Matrix {
    let n = p.dim();
    let cols: Vec<Vector> = (0..n).map(|m| p.basis_product(i, m).to_vec()).collect();
    Matrix::from_columns(n, &cols)
}

pub fn all_right_nilpotent(p: &Product) -> bool {
    let n = p.dim();
    (0..n).all(|i| right_matrix(p, i).pow(n).is_zero())
}

pub fn all_left_nilpotent(p: &Product) -> bool {
    let n = p.dim();
    (0..n).all(|i| left_matrix(p, i).pow(n).is_zero())
}

/// Rank of the list of all basis products.
fn product_rank(p: &Product, extra: Option<&Product>) -> usize {
    let n = p.dim();
    let mut rows = Vec::new();
    for q in std::iter::once(p).chain(extra) {
        for i in 0..n {
            for j in 0..n {
                rows.push(q.basis_product(i, j).to_vec());
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

/// `span(q·q) ⊆ span(p·p)` by comparing ranks.
pub fn products_contained(q: &Product, p: &Product) -> bool {
    product_rank(p, None) == product_rank(p, Some(q))
}

pub fn e(n: usize, i: usize) -> Vector {
    unit_vector(n, i)
}
