//! Constructions of (complete) LR-structures.
//!
//! - [`complete_nilpotent`]: turns any LR-structure on a nilpotent algebra
//!   into a complete one, `x ∘ y = x_n · y`, where `x = x_n + x_0` along the
//!   Fitting split of the left multiplications.
//! - [`complete_any`]: the general pipeline for two-step solvable algebras:
//!   split `g = g^∞ ⋊ n`, complete the induced product on `n`, lift back.
//! - [`lift_product`]: `(a, x) ⋆ (b, y) = (φ(x) b, x ⋆ y)`.
//! - [`half_bracket`], [`lr_for_g3`], [`two_generator_lr`]: explicit
//!   LR-structures for the algebras those constructions cover.
//!
//! Every result is re-verified with the exact checkers before it is
//! returned; a failed postcondition is an [`Error::Internal`].

use crate::lie::{ad, is_two_step_solvable, series, split_metabelian, subalgebra_generated};
use crate::lie::{LieAlgebra, SplitDecomposition};
use crate::linalg::{
    check_len, fitting_split_family_in, is_zero_vector, rat, zero_vector, FittingSplit, Matrix,
    Rational, Subspace, Vector,
};
use crate::lr::{
    check_complete, check_lr, is_two_sided_ideal, left_basis_ops, quotient_product,
    require_structure, Product,
};
use crate::table::Table;
use crate::{Error, Result};

/// A completed LR-structure together with the data that justifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionCertificate {
    pub original: Product,
    pub completed: Product,
    /// Fitting split of the left multiplications of the (quotient) product
    /// that was completed.
    pub fitting: FittingSplit,
    /// `span(g∘g) ⊆ span(g·g)`
    pub containment_witness: bool,
}

fn certify(
    g: &LieAlgebra,
    original: &Product,
    completed: Product,
    fitting: FittingSplit,
) -> Result<CompletionCertificate> {
    let report = check_lr(g, &completed)?;
    if !report.is_structure() {
        return Err(Error::Internal(format!(
            "completed product fails {:?}",
            report.failing_identities()
        )));
    }
    if !report.is_complete {
        return Err(Error::Internal("completed product is not complete".into()));
    }
    let containment_witness = completed
        .span_of_products()
        .is_subspace_of(&original.span_of_products());
    if !containment_witness {
        return Err(Error::Internal("completed products leave span(g·g)".into()));
    }
    Ok(CompletionCertificate {
        original: original.clone(),
        completed,
        fitting,
        containment_witness,
    })
}

/// Completion of an LR-structure on a nilpotent Lie algebra.
pub fn complete_nilpotent(g: &LieAlgebra, p: &Product) -> Result<CompletionCertificate> {
    if !series(g)?.nilpotent {
        return Err(Error::NotNilpotent);
    }
    require_structure(g, p)?;
    let n = g.dim();
    let fitting = fitting_split_family_in(n, &left_basis_ops(p))?;
    let proj = &fitting.proj_n;
    // e_i ∘ e_j = (proj_n e_i) · e_j
    let table = Table::from_fn(n, |i, j| {
        let mut v = zero_vector(n);
        for k in 0..n {
            crate::linalg::axpy(&mut v, &proj[(k, i)], p.basis_product(k, j));
        }
        v
    })?;
    certify(g, p, Product::new(table), fitting)
}

/// Lifts an LR-structure `q` on the complement `n` (in the complement basis)
/// to `g = g^∞ ⋊ n` via `(a, x) ⋆ (b, y) = (φ(x) b, x ⋆ y)`, returned in the
/// original basis of `g`.
///
/// Requires `φ(u ⋆ v) = 0` for all complement basis vectors.
pub fn lift_product(split: &SplitDecomposition, q: &Product) -> Result<Product> {
    let s = split.complement_dim();
    let r = split.infinity_dim();
    let n = split.dim();
    if q.dim() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            found: q.dim(),
        });
    }
    let q_report = require_structure(&split.complement_algebra, q)?;
    for a in 0..s {
        for b in 0..s {
            if !split.phi_of(q.basis_product(a, b)).is_zero() {
                return Err(Error::PhiNonzero);
            }
        }
    }

    // Adapted coordinates: g^∞ first (0..r), complement after (r..n).
    let mut adapted = Table::zero(n);
    for a in 0..s {
        for b in 0..s {
            let mut v = zero_vector(n);
            for (k, c) in q.basis_product(a, b).iter().enumerate() {
                v[r + k] = c.clone();
            }
            adapted.set(r + a, b + r, v);
        }
        for t in 0..r {
            let mut v = zero_vector(n);
            for (k, c) in split.phi[a].column(t).into_iter().enumerate() {
                v[k] = c;
            }
            adapted.set(r + a, t, v);
        }
    }
    let lifted = Product::new(adapted.change_basis(&split.to_adapted, &split.change_of_basis));

    let report = check_lr(&split.algebra, &lifted)?;
    if !report.is_structure() {
        return Err(Error::Internal(format!(
            "lifted product fails {:?}",
            report.failing_identities()
        )));
    }
    if q_report.is_complete && !report.is_complete {
        return Err(Error::Internal(
            "lift of a complete product is not complete".into(),
        ));
    }
    Ok(lifted)
}

/// Completes any LR-structure on `g`.
///
/// Stages: LR check, two-step solvability, splitting, two-sidedness of
/// `g^∞`, commuting products of products, quotient to `n`, completion on
/// `n`, and lifting. Each stage refuses with its own error.
pub fn complete_any(g: &LieAlgebra, p: &Product) -> Result<CompletionCertificate> {
    require_structure(g, p)?;
    if !is_two_step_solvable(g)? {
        return Err(Error::NotTwoStepSolvable);
    }
    let split = split_metabelian(g)?;
    if !is_two_sided_ideal(p, &split.g_infinity) {
        return Err(Error::IdealNotTwoSided);
    }
    if !products_of_products_commute(p) {
        return Err(Error::ProductsNotCommuting);
    }
    let induced = quotient_product(g, p, &split.g_infinity)?;
    let on_n = complete_nilpotent(&split.complement_algebra, &induced)?;
    let lifted = lift_product(&split, &on_n.completed)?;
    certify(g, p, lifted, on_n.fitting)
}

/// `(x·y)·(u·v) = (u·v)·(x·y)`, checked on a basis of `span(g·g)`.
pub fn products_of_products_commute(p: &Product) -> bool {
    let span = p.span_of_products();
    let b = span.basis();
    (0..b.len()).all(|i| {
        (i + 1..b.len()).all(|j| p.mul_unchecked(&b[i], &b[j]) == p.mul_unchecked(&b[j], &b[i]))
    })
}

/// `x·y = ½[x,y]` on a two-step nilpotent algebra.
pub fn half_bracket(g: &LieAlgebra) -> Result<Product> {
    if !series(g)?.lower_central_term(3).is_zero() {
        return Err(Error::NotTwoStepNilpotent);
    }
    let half = rat(1, 2);
    Ok(Product::new(g.table().map(|c| c * &half)))
}

/// LR-structure on a two-step solvable `g` with `g^∞ = g^3`: the
/// ½-bracket on `n = g/g^3`, lifted to `g`. The result is complete.
pub fn lr_for_g3(g: &LieAlgebra) -> Result<Product> {
    if !is_two_step_solvable(g)? {
        return Err(Error::NotTwoStepSolvable);
    }
    let report = series(g)?;
    if report.g_infinity != *report.lower_central_term(3) {
        return Err(Error::InfinityNotThirdTerm);
    }
    let split = split_metabelian(g)?;
    let q = half_bracket(&split.complement_algebra)?;
    let lifted = lift_product(&split, &q)?;
    if !check_complete(&lifted)? {
        return Err(Error::Internal(
            "lifted ½-bracket product is not complete".into(),
        ));
    }
    Ok(lifted)
}

/// Role of a vector in the basis chosen by [`two_generator_basis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTerm {
    X,
    Y,
    /// `ad(y)^k ad(x)^l y` with `l >= 1`.
    Word {
        k: usize,
        l: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGeneratorBasis {
    pub terms: Vec<BasisTerm>,
    pub vectors: Vec<Vector>,
}

/// Basis of `g` made of `x`, `y` and words `ad(y)^k ad(x)^l y` (`l >= 1`,
/// `k, l <= dim`), scanned in increasing `(k + l, l, k)` order and kept
/// when independent of the vectors chosen so far.
pub fn two_generator_basis(
    g: &LieAlgebra,
    x: &[Rational],
    y: &[Rational],
) -> Result<TwoGeneratorBasis> {
    let n = g.dim();
    check_len(x, n)?;
    check_len(y, n)?;
    if !is_two_step_solvable(g)? {
        return Err(Error::NotTwoStepSolvable);
    }
    if !subalgebra_generated(g, &[x.to_vec(), y.to_vec()])?.is_full() {
        return Err(Error::NotGenerating);
    }
    let ad_x = ad(g, x)?;
    let ad_y = ad(g, y)?;

    let mut terms = Vec::new();
    let mut vectors: Vec<Vector> = Vec::new();
    let mut span = Subspace::zero(n);
    let mut offer = |term: BasisTerm, v: Vector, span: &mut Subspace| -> Result<()> {
        if is_zero_vector(&v) || span.contains(&v) {
            return Ok(());
        }
        *span = span.sum(&Subspace::span(n, [v.clone()])?)?;
        terms.push(term);
        vectors.push(v);
        Ok(())
    };
    offer(BasisTerm::X, x.to_vec(), &mut span)?;
    offer(BasisTerm::Y, y.to_vec(), &mut span)?;

    // ad(x)^l y for l = 0..=n
    let mut x_powers = vec![y.to_vec()];
    for l in 1..=n {
        let next = ad_x.apply(&x_powers[l - 1]);
        x_powers.push(next);
    }
    'scan: for total in 1..=2 * n {
        for (l, xp) in x_powers.iter().enumerate().take(total.min(n) + 1).skip(1) {
            if span.is_full() {
                break 'scan;
            }
            let k = total - l;
            if k > n {
                continue;
            }
            let v = ad_y.pow(k).apply(xp);
            offer(BasisTerm::Word { k, l }, v, &mut span)?;
        }
    }
    if !span.is_full() {
        return Err(Error::CandidatesDoNotSpan);
    }
    Ok(TwoGeneratorBasis { terms, vectors })
}

/// LR-structure on a two-generated, two-step solvable algebra, defined on
/// the basis of [`two_generator_basis`] by
///
/// `L(x) = 0`, `L(y) = ad(y)`, `L(ad(y)^k ad(x)^l y) = ad(y)^k ad(x)^l ad(y)`.
///
/// Completeness is not guaranteed; pass the result to [`complete_any`].
pub fn two_generator_lr(g: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Result<Product> {
    let basis = two_generator_basis(g, x, y)?;
    let n = g.dim();
    let ad_x = ad(g, x)?;
    let ad_y = ad(g, y)?;
    let lefts: Vec<Matrix> = basis
        .terms
        .iter()
        .map(|t| match *t {
            BasisTerm::X => Matrix::zeros(n, n),
            BasisTerm::Y => ad_y.clone(),
            BasisTerm::Word { k, l } => &(&ad_y.pow(k) * &ad_x.pow(l)) * &ad_y,
        })
        .collect();
    let to_basis = Matrix::from_columns(n, &basis.vectors)
        .inverse()?
        .ok_or_else(|| Error::Internal("two-generator basis is singular".into()))?;
    // L(e_j) = Σ_i (B^{-1})[i][j] L(b_i); column m of L(e_j) is e_j · e_m.
    let table = Table::from_fn(n, |j, m| {
        let mut v = zero_vector(n);
        for (i, l) in lefts.iter().enumerate() {
            let c = &to_basis[(i, j)];
            if !num_traits::Zero::is_zero(c) {
                crate::linalg::axpy(&mut v, c, &l.column(m));
            }
        }
        v
    })?;
    let product = Product::new(table);
    let report = check_lr(g, &product)?;
    if !report.is_structure() {
        return Err(Error::Internal(format!(
            "two-generator product fails {:?}",
            report.failing_identities()
        )));
    }
    Ok(product)
}
