//! Bilinear products on a Lie algebra and the LR-axioms.
//!
//! A product `x·y` is an LR-product when
//!
//! - `x·(y·z) = y·(x·z)` (left multiplications commute), and
//! - `(x·y)·z = (x·z)·y` (right multiplications commute).
//!
//! It is an LR-structure on `g` when additionally `x·y − y·x = [x,y]`, and it
//! is complete when every right multiplication `R(x): y ↦ y·x` is nilpotent.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::{self, Execution};
use crate::lie::{series, LieAlgebra};
use crate::linalg::{
    check_len, is_nilpotent_operator, is_zero_vector, rat, sub_vectors, unit_vector, Matrix,
    Rational, Subspace, Vector,
};
use crate::table::Table;
use crate::{Error, Result};

/// Seed for the operator-identity sample triples when none is given.
pub const DEFAULT_SAMPLE_SEED: u64 = 1404;

/// A bilinear product `e_i · e_j = Σ_k p[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    table: Table,
}

impl Product {
    pub fn new(table: Table) -> Self {
        Product { table }
    }

    pub fn zero(dim: usize) -> Self {
        Product::new(Table::zero(dim))
    }

    /// Sets `e_i · e_j = v` for each entry (0-based), no symmetry implied.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let mut table = Table::zero(dim);
        for (i, j, v) in entries {
            check_len(&v, dim)?;
            if i >= dim || j >= dim {
                return Err(Error::InvalidParameter(format!(
                    "product index ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            table.set(i, j, v);
        }
        Ok(Product::new(table))
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        self.table.basis_product(i, j)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        check_len(x, self.dim())?;
        check_len(y, self.dim())?;
        Ok(self.table.apply(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.table.apply(x, y)
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    /// Span of all products `e_i · e_j`.
    pub fn span_of_products(&self) -> Subspace {
        let n = self.dim();
        let vs = (0..n * n)
            .map(|idx| self.basis_product(idx / n, idx % n).to_vec())
            .filter(|v| !is_zero_vector(v));
        Subspace::span(n, vs).expect("product vectors have ambient length")
    }

    /// Same product in a new basis; see [`Table::change_basis`].
    pub fn change_basis(&self, to_old: &Matrix, to_new: &Matrix) -> Product {
        Product::new(self.table.change_basis(to_old, to_new))
    }
}

/// `L(x): y ↦ x·y`
pub fn left_op(p: &Product, x: &[Rational]) -> Result<Matrix> {
    check_len(x, p.dim())?;
    Ok(p.table.left_matrix(x))
}

/// `R(x): y ↦ y·x`
pub fn right_op(p: &Product, x: &[Rational]) -> Result<Matrix> {
    check_len(x, p.dim())?;
    Ok(p.table.right_matrix(x))
}

pub(crate) fn left_basis_ops(p: &Product) -> Vec<Matrix> {
    let n = p.dim();
    (0..n)
        .map(|i| p.table.left_matrix(&unit_vector(n, i)))
        .collect()
}

pub(crate) fn right_basis_ops(p: &Product) -> Vec<Matrix> {
    let n = p.dim();
    (0..n)
        .map(|i| p.table.right_matrix(&unit_vector(n, i)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LrIdentity {
    /// `x·(y·z) = y·(x·z)`
    LeftCommutativity,
    /// `(x·y)·z = (x·z)·y`
    RightCommutativity,
    /// `x·y − y·x = [x,y]`
    Compatibility,
}

impl LrIdentity {
    pub fn name(self) -> &'static str {
        match self {
            LrIdentity::LeftCommutativity => "left-commutativity",
            LrIdentity::RightCommutativity => "right-commutativity",
            LrIdentity::Compatibility => "compatibility",
        }
    }
}

impl fmt::Display for LrIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrViolation {
    pub identity: LrIdentity,
    /// 0-based basis indices: `(i, j, k)` for the LR identities, `(i, j)`
    /// for compatibility.
    pub indices: Vec<usize>,
    pub defect: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrReport {
    pub is_lr: bool,
    pub is_compatible: bool,
    /// Only meaningful when `is_lr`; false otherwise.
    pub is_complete: bool,
    pub violations: Vec<LrViolation>,
}

impl LrReport {
    /// An LR-structure on the given algebra: LR and compatible.
    pub fn is_structure(&self) -> bool {
        self.is_lr && self.is_compatible
    }

    pub fn failing_identities(&self) -> Vec<LrIdentity> {
        let mut ids: Vec<LrIdentity> = self.violations.iter().map(|v| v.identity).collect();
        ids.sort();
        ids.dedup();
        ids
    }
}

fn require_same_dim(g: &LieAlgebra, p: &Product) -> Result<()> {
    if g.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: p.dim(),
        });
    }
    Ok(())
}

/// Violations of the two LR identities on all basis triples.
pub fn lr_identity_violations(p: &Product, exec: Execution) -> Vec<LrViolation> {
    let n = p.dim();
    let t = p.table();
    exec::filter_map_range(exec, n * n * n, |idx| {
        let (i, j, k) = exec::triple(idx, n);
        let mut found = Vec::new();
        if i < j {
            let lhs = t.apply_left_basis(i, t.basis_product(j, k));
            let rhs = t.apply_left_basis(j, t.basis_product(i, k));
            let defect = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&defect) {
                found.push(LrViolation {
                    identity: LrIdentity::LeftCommutativity,
                    indices: vec![i, j, k],
                    defect,
                });
            }
        }
        if j < k {
            let lhs = t.apply_right_basis(t.basis_product(i, j), k);
            let rhs = t.apply_right_basis(t.basis_product(i, k), j);
            let defect = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&defect) {
                found.push(LrViolation {
                    identity: LrIdentity::RightCommutativity,
                    indices: vec![i, j, k],
                    defect,
                });
            }
        }
        (!found.is_empty()).then_some(found)
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn is_lr_product(p: &Product) -> bool {
    lr_identity_violations(p, Execution::default()).is_empty()
}

pub fn check_lr(g: &LieAlgebra, p: &Product) -> Result<LrReport> {
    check_lr_with(g, p, Execution::default())
}

/// Full report: LR identities on all `n^3` basis triples, compatibility on
/// all basis pairs, and completeness when the product is LR.
pub fn check_lr_with(g: &LieAlgebra, p: &Product, exec: Execution) -> Result<LrReport> {
    require_same_dim(g, p)?;
    let n = p.dim();
    let mut violations = lr_identity_violations(p, exec);
    let is_lr = violations.is_empty();
    let compat = exec::filter_map_range(exec, n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        if i >= j {
            return None;
        }
        let comm = sub_vectors(p.basis_product(i, j), p.basis_product(j, i));
        let defect = sub_vectors(&comm, g.basis_bracket(i, j));
        (!is_zero_vector(&defect)).then(|| LrViolation {
            identity: LrIdentity::Compatibility,
            indices: vec![i, j],
            defect,
        })
    });
    let is_compatible = compat.is_empty();
    violations.extend(compat);
    let is_complete = is_lr && check_complete(p)?;
    Ok(LrReport {
        is_lr,
        is_compatible,
        is_complete,
        violations,
    })
}

pub(crate) fn require_structure(g: &LieAlgebra, p: &Product) -> Result<LrReport> {
    let report = check_lr(g, p)?;
    if !report.is_structure() {
        let names: Vec<&str> = report
            .failing_identities()
            .iter()
            .map(|i| i.name())
            .collect();
        return Err(Error::NotLr(names.join(", ")));
    }
    Ok(report)
}

/// Whether every `R(e_i)` is nilpotent. The right multiplications must
/// commute, so that nilpotency on a basis implies it for all `R(x)`.
pub fn check_complete(p: &Product) -> Result<bool> {
    let rs = right_basis_ops(p);
    all_nilpotent_commuting(&rs).ok_or(Error::RightOperatorsNotCommuting)
}

/// `None` if the family does not commute.
fn all_nilpotent_commuting(ms: &[Matrix]) -> Option<bool> {
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if !ms[i].commutator(&ms[j]).is_zero() {
                return None;
            }
        }
    }
    Some(ms.iter().all(|m| is_nilpotent_operator(m).expect("square")))
}

/// `x ∘ y = −y·x`
pub fn opposite(p: &Product) -> Product {
    let n = p.dim();
    let table = Table::from_fn(n, |i, j| p.basis_product(j, i).iter().map(|x| -x).collect())
        .expect("same dimension");
    Product::new(table)
}

/// The six operator identities that hold in every LR-algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorIdentity {
    /// `L(x)R(y) = R(x·y)`
    LeftRight,
    /// `R(x)L(y) = L(y·x)`
    RightLeft,
    /// `L(x)R(y·z) = R(x·(y·z))`
    LeftRightOfProduct,
    /// `R(x)L(y·z) = L((y·z)·x)`
    RightLeftOfProduct,
    /// `L(x)L(y·z) = L(y·(x·z))`
    LeftLeftOfProduct,
    /// `R(x)R(y·z) = R((y·x)·z)`
    RightRightOfProduct,
}

impl OperatorIdentity {
    pub const ALL: [OperatorIdentity; 6] = [
        OperatorIdentity::LeftRight,
        OperatorIdentity::RightLeft,
        OperatorIdentity::LeftRightOfProduct,
        OperatorIdentity::RightLeftOfProduct,
        OperatorIdentity::LeftLeftOfProduct,
        OperatorIdentity::RightRightOfProduct,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            OperatorIdentity::LeftRight => "L(x)R(y) = R(x·y)",
            OperatorIdentity::RightLeft => "R(x)L(y) = L(y·x)",
            OperatorIdentity::LeftRightOfProduct => "L(x)R(y·z) = R(x·(y·z))",
            OperatorIdentity::RightLeftOfProduct => "R(x)L(y·z) = L((y·z)·x)",
            OperatorIdentity::LeftLeftOfProduct => "L(x)L(y·z) = L(y·(x·z))",
            OperatorIdentity::RightRightOfProduct => "R(x)R(y·z) = R((y·x)·z)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorViolation {
    pub identity: OperatorIdentity,
    pub x: Vector,
    pub y: Vector,
    pub z: Vector,
    /// `lhs − rhs`, nonzero.
    pub defect: Matrix,
}

pub type Triple = (Vector, Vector, Vector);

/// Seeded pseudorandom triples with small integer and half-integer
/// coordinates in `[-3, 3]`.
pub fn sample_triples(dim: usize, count: usize, seed: u64) -> Vec<Triple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vector = |rng: &mut ChaCha8Rng| -> Vector {
        (0..dim).map(|_| rat(rng.gen_range(-6..=6), 2)).collect()
    };
    (0..count)
        .map(|_| (vector(&mut rng), vector(&mut rng), vector(&mut rng)))
        .collect()
}

/// All `n^3` basis triples.
pub fn basis_triples(dim: usize) -> Vec<Triple> {
    (0..dim * dim * dim)
        .map(|idx| {
            let (i, j, k) = exec::triple(idx, dim);
            (
                unit_vector(dim, i),
                unit_vector(dim, j),
                unit_vector(dim, k),
            )
        })
        .collect()
}

pub fn check_operator_identities(
    p: &Product,
    samples: &[Triple],
) -> Result<Vec<OperatorViolation>> {
    check_operator_identities_with(p, samples, Execution::default())
}

/// Checks the six operator identities on every basis triple and on each of
/// `samples`. Refuses products that are not LR.
pub fn check_operator_identities_with(
    p: &Product,
    samples: &[Triple],
    exec: Execution,
) -> Result<Vec<OperatorViolation>> {
    let n = p.dim();
    if !lr_identity_violations(p, exec).is_empty() {
        return Err(Error::NotLr(
            "left/right multiplications do not commute".into(),
        ));
    }
    for (x, y, z) in samples {
        check_len(x, n)?;
        check_len(y, n)?;
        check_len(z, n)?;
    }
    let triples: Vec<Triple> = basis_triples(n)
        .into_iter()
        .chain(samples.iter().cloned())
        .collect();
    let found = exec::map_slice(exec, &triples, |(x, y, z)| operator_defects(p, x, y, z));
    Ok(found.into_iter().flatten().collect())
}

fn operator_defects(
    p: &Product,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vec<OperatorViolation> {
    let t = p.table();
    let l = |v: &[Rational]| t.left_matrix(v);
    let r = |v: &[Rational]| t.right_matrix(v);
    let xy = t.apply(x, y);
    let yx = t.apply(y, x);
    let yz = t.apply(y, z);
    let xz = t.apply(x, z);
    let (lx, rx) = (l(x), r(x));
    let sides = |id: OperatorIdentity| -> (Matrix, Matrix) {
        match id {
            OperatorIdentity::LeftRight => (&lx * &r(y), r(&xy)),
            OperatorIdentity::RightLeft => (&rx * &l(y), l(&yx)),
            OperatorIdentity::LeftRightOfProduct => (&lx * &r(&yz), r(&t.apply(x, &yz))),
            OperatorIdentity::RightLeftOfProduct => (&rx * &l(&yz), l(&t.apply(&yz, x))),
            OperatorIdentity::LeftLeftOfProduct => (&lx * &l(&yz), l(&t.apply(y, &xz))),
            OperatorIdentity::RightRightOfProduct => (&rx * &r(&yz), r(&t.apply(&yx, z))),
        }
    };
    OperatorIdentity::ALL
        .into_iter()
        .filter_map(|id| {
            let (lhs, rhs) = sides(id);
            let defect = lhs.sub(&rhs);
            (!defect.is_zero()).then(|| OperatorViolation {
                identity: id,
                x: x.to_vec(),
                y: y.to_vec(),
                z: z.to_vec(),
                defect,
            })
        })
        .collect()
}

/// Flags of the "any two imply the third" statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoOfThree {
    /// All left multiplications nilpotent.
    pub left_nilpotent: bool,
    /// All right multiplications nilpotent.
    pub right_nilpotent: bool,
    /// The Lie algebra is nilpotent.
    pub lie_nilpotent: bool,
    /// Not exactly one of the three is false.
    pub consistent: bool,
}

impl TwoOfThree {
    pub fn flags(&self) -> (bool, bool, bool) {
        (
            self.left_nilpotent,
            self.right_nilpotent,
            self.lie_nilpotent,
        )
    }
}

pub fn two_of_three(g: &LieAlgebra, p: &Product) -> Result<TwoOfThree> {
    require_structure(g, p)?;
    let left = all_nilpotent_commuting(&left_basis_ops(p)).ok_or_else(|| {
        Error::Internal("left multiplications of an LR product do not commute".into())
    })?;
    let right = check_complete(p)?;
    let lie = series(g)?.nilpotent;
    let falses = [left, right, lie].iter().filter(|b| !**b).count();
    Ok(TwoOfThree {
        left_nilpotent: left,
        right_nilpotent: right,
        lie_nilpotent: lie,
        consistent: falses != 1,
    })
}

/// Whether `A·s ⊆ s` and `s·A ⊆ s`.
pub fn is_two_sided_ideal(p: &Product, s: &Subspace) -> bool {
    let n = p.dim();
    if s.ambient_dim() != n {
        return false;
    }
    s.basis().iter().all(|b| {
        (0..n).all(|i| {
            s.contains(&p.table().apply_left_basis(i, b))
                && s.contains(&p.table().apply_right_basis(b, i))
        })
    })
}

/// Product induced on `A / ideal`, on the canonical quotient basis.
pub fn quotient_product(g: &LieAlgebra, p: &Product, ideal: &Subspace) -> Result<Product> {
    require_same_dim(g, p)?;
    if ideal.ambient_dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: ideal.ambient_dim(),
        });
    }
    if !is_two_sided_ideal(p, ideal) {
        return Err(Error::IdealNotTwoSided);
    }
    let reps = ideal.quotient_section().columns();
    let table = Table::from_fn(reps.len(), |a, b| {
        ideal.quotient_coordinates(&p.mul_unchecked(&reps[a], &reps[b]))
    })?;
    Ok(Product::new(table))
}
