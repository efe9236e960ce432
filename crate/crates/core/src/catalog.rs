//! Named Lie algebras and product fixtures.
//!
//! Algebras use 0-based basis indices internally; the comments below use the
//! customary 1-based names `e1, e2, …`.

use crate::construct::half_bracket;
use crate::lie::LieAlgebra;
use crate::linalg::{int, unit_vector, zero_vector, Rational, Vector};
use crate::lr::{LrIdentity, Product};
use crate::table::Table;
use crate::{Error, Result};

fn scaled_unit(n: usize, i: usize, s: Rational) -> Vector {
    let mut v = zero_vector(n);
    v[i] = s;
    v
}

pub fn abelian(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "abelian: dimension must be >= 1".into(),
        ));
    }
    Ok(LieAlgebra::abelian(n))
}

/// `[e1, e2] = e3`
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(3, [(0, 1, unit_vector(3, 2))]).expect("valid indices")
}

/// Standard filiform model: `[e1, e_i] = e_{i+1}` for `2 <= i <= n-1`.
pub fn filiform(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "filiform: dimension must be >= 3".into(),
        ));
    }
    LieAlgebra::from_brackets(n, (1..n - 1).map(|i| (0, i, unit_vector(n, i + 1))))
}

/// Two-dimensional non-abelian algebra, basis `(x, y)`, `[x, y] = y`.
pub fn r2() -> LieAlgebra {
    LieAlgebra::from_brackets(2, [(0, 1, unit_vector(2, 1))]).expect("valid indices")
}

/// Basis `(x, y_1, …, y_m)` with `[x, y_i] = w_i y_i`.
pub fn diag_solvable(weights: &[Rational]) -> Result<LieAlgebra> {
    if weights.is_empty() {
        return Err(Error::InvalidParameter(
            "diag_solvable: need at least one weight".into(),
        ));
    }
    let n = weights.len() + 1;
    LieAlgebra::from_brackets(
        n,
        weights
            .iter()
            .enumerate()
            .map(|(i, w)| (0, i + 1, scaled_unit(n, i + 1, w.clone()))),
    )
}

/// Free two-step nilpotent algebra on `k` generators: basis
/// `x_1, …, x_k` followed by `z_ab` (`a < b`, lexicographic), with
/// `[x_a, x_b] = z_ab`.
pub fn free_two_step(k: usize) -> Result<LieAlgebra> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "free_two_step: need at least one generator".into(),
        ));
    }
    let n = k + k * (k - 1) / 2;
    let mut brackets = Vec::new();
    let mut z = k;
    for a in 0..k {
        for b in a + 1..k {
            brackets.push((a, b, unit_vector(n, z)));
            z += 1;
        }
    }
    LieAlgebra::from_brackets(n, brackets)
}

/// `sl(2)`: `[e1,e2] = e3`, `[e3,e1] = 2e1`, `[e3,e2] = −2e2`. Not solvable.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        [
            (0, 1, unit_vector(3, 2)),
            (2, 0, scaled_unit(3, 0, int(2))),
            (2, 1, scaled_unit(3, 1, int(-2))),
        ],
    )
    .expect("valid indices")
}

/// Names accepted by [`algebra`], with the meaning of the optional parameter.
pub const ALGEBRA_NAMES: &[(&str, &str)] = &[
    ("abelian", "dimension N"),
    ("heisenberg", ""),
    ("filiform", "dimension N >= 3"),
    ("r2", ""),
    ("diag-solvable", "comma-separated weights"),
    ("free-two-step", "number of generators"),
    ("sl2", ""),
];

/// Builds a catalog algebra by name. `param` is required by the
/// parameterized families.
pub fn algebra(name: &str, param: Option<&str>) -> Result<LieAlgebra> {
    let count = || -> Result<usize> {
        let p =
            param.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter")))?;
        p.trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{name}: bad count `{p}`")))
    };
    match name {
        "abelian" => abelian(count()?),
        "heisenberg" => Ok(heisenberg()),
        "filiform" => filiform(count()?),
        "r2" => Ok(r2()),
        "free-two-step" => free_two_step(count()?),
        "sl2" => Ok(sl2()),
        "diag-solvable" => {
            let p = param
                .ok_or_else(|| Error::InvalidParameter("diag-solvable needs weights".into()))?;
            let weights = crate::cli::parse_rational_list(p)
                .map_err(|e| Error::InvalidParameter(format!("diag-solvable: {e}")))?;
            diag_solvable(&weights)
        }
        _ => Err(Error::UnknownCatalogEntry(name.to_string())),
    }
}

/// Documented status of a fixture under `check_lr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedFlags {
    pub is_lr: bool,
    pub is_compatible: bool,
    pub is_complete: bool,
    /// Exactly the identities that fail, sorted.
    pub failing: Vec<LrIdentity>,
}

impl ExpectedFlags {
    fn structure(is_complete: bool) -> Self {
        ExpectedFlags {
            is_lr: true,
            is_compatible: true,
            is_complete,
            failing: Vec::new(),
        }
    }

    pub fn is_structure(&self) -> bool {
        self.is_lr && self.is_compatible
    }
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub product: Product,
    pub expected: ExpectedFlags,
}

pub const FIXTURE_NAMES: &[&str] = &[
    "heisenberg-half",
    "heisenberg-one-sided",
    "abelian1-idempotent",
    "abelian2-idempotent-line",
    "r2-two-generator",
    "r2-complete",
    "diag11-complete",
    "filiform4-two-generator",
    "free-two-step3-half",
    "heisenberg-fullbracket",
    "heisenberg-corrupted",
];

pub fn known_lr(name: &str) -> Result<Fixture> {
    use LrIdentity::*;
    let entries = |n: usize, es: &[(usize, usize, Vector)]| {
        Product::from_entries(n, es.iter().cloned()).expect("valid fixture")
    };
    let (algebra, product, expected) = match name {
        // e1·e2 = ½e3, e2·e1 = −½e3
        "heisenberg-half" => {
            let h = heisenberg();
            let p = half_bracket(&h)?;
            (h, p, ExpectedFlags::structure(true))
        }
        // e1·e2 = e3
        "heisenberg-one-sided" => (
            heisenberg(),
            entries(3, &[(0, 1, unit_vector(3, 2))]),
            ExpectedFlags::structure(true),
        ),
        // e·e = e
        "abelian1-idempotent" => (
            LieAlgebra::abelian(1),
            entries(1, &[(0, 0, unit_vector(1, 0))]),
            ExpectedFlags::structure(false),
        ),
        // e1·e1 = e1
        "abelian2-idempotent-line" => (
            LieAlgebra::abelian(2),
            entries(2, &[(0, 0, unit_vector(2, 0))]),
            ExpectedFlags::structure(false),
        ),
        // y·x = −y
        "r2-two-generator" => (
            r2(),
            entries(2, &[(1, 0, scaled_unit(2, 1, int(-1)))]),
            ExpectedFlags::structure(false),
        ),
        // x·y = y
        "r2-complete" => (
            r2(),
            entries(2, &[(0, 1, unit_vector(2, 1))]),
            ExpectedFlags::structure(true),
        ),
        // x·y_i = y_i
        "diag11-complete" => (
            diag_solvable(&[int(1), int(1)])?,
            entries(3, &[(0, 1, unit_vector(3, 1)), (0, 2, unit_vector(3, 2))]),
            ExpectedFlags::structure(true),
        ),
        // e2·e1 = −e3, e3·e1 = −e4
        "filiform4-two-generator" => (
            filiform(4)?,
            entries(
                4,
                &[
                    (1, 0, scaled_unit(4, 2, int(-1))),
                    (2, 0, scaled_unit(4, 3, int(-1))),
                ],
            ),
            ExpectedFlags::structure(true),
        ),
        "free-two-step3-half" => {
            let g = free_two_step(3)?;
            let p = half_bracket(&g)?;
            (g, p, ExpectedFlags::structure(true))
        }
        // x·y = [x,y]: LR, but the commutator is 2[x,y].
        "heisenberg-fullbracket" => {
            let h = heisenberg();
            let p = Product::new(h.table().clone());
            (
                h,
                p,
                ExpectedFlags {
                    is_lr: true,
                    is_compatible: false,
                    is_complete: true,
                    failing: vec![Compatibility],
                },
            )
        }
        // ½-bracket plus e1·e1 = e1: compatible, but neither left nor right
        // multiplications commute.
        "heisenberg-corrupted" => {
            let h = heisenberg();
            let mut t: Table = half_bracket(&h)?.table().clone();
            t.set(0, 0, unit_vector(3, 0));
            (
                h,
                Product::new(t),
                ExpectedFlags {
                    is_lr: false,
                    is_compatible: true,
                    is_complete: false,
                    failing: vec![LeftCommutativity, RightCommutativity],
                },
            )
        }
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    let name = FIXTURE_NAMES
        .iter()
        .copied()
        .find(|n| *n == name)
        .expect("listed fixture");
    Ok(Fixture {
        name,
        algebra,
        product,
        expected,
    })
}

pub fn all_fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES
        .iter()
        .map(|n| known_lr(n).expect("listed fixture"))
        .collect()
}
