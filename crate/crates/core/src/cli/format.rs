//! The JSON exchange format.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "brackets": [{ "i": 1, "j": 2, "v": { "3": "1" } }],
//!   "product": [{ "i": 1, "j": 2, "v": { "3": "1/2" } }]
//! }
//! ```
//!
//! Indices are 1-based. Brackets are listed for `i < j` only; products list
//! every nonzero pair. Coefficients are exact rational strings. Emitted files
//! are canonical: entries sorted by `(i, j)`, coefficient keys ascending,
//! zero coefficients dropped, fractions reduced.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lie::LieAlgebra;
use crate::linalg::{zero_vector, Rational, Vector};
use crate::lr::Product;
use crate::table::Table;

/// On-disk form of an algebra with an optional product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<Entry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub v: Coefficients,
}

/// Sparse vector keyed by 1-based index, in key order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coefficients(pub Vec<(usize, Rational)>);

/// Problem in a file, located by line or by field path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct FormatError(pub String);

/// Parses `"p/q"`, `"p"` or `"-p/q"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("`{s}` is not a rational number");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Comma-separated rationals, e.g. `1,0,-1/2`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Coefficients {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = Coefficients;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from 1-based index to rational string")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Coefficients, A::Error> {
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                while let Some(key) = access.next_key::<String>()? {
                    let k: usize = key.parse().map_err(|_| {
                        de::Error::custom(format!("coefficient key `{key}` is not an index"))
                    })?;
                    if !seen.insert(k) {
                        return Err(de::Error::custom(format!(
                            "duplicate coefficient key `{key}`"
                        )));
                    }
                    let value: String = access.next_value()?;
                    let r = parse_rational(&value).map_err(de::Error::custom)?;
                    out.push((k, r));
                }
                out.sort_by_key(|(k, _)| *k);
                Ok(Coefficients(out))
            }
        }

        deserializer.deserialize_map(CoeffVisitor)
    }
}

impl AlgebraFile {
    /// Parses JSON text. Syntax and type errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError(e.to_string()))
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Canonical file for `g` and an optional product.
    pub fn from_parts(g: &LieAlgebra, p: Option<&Product>) -> Self {
        let n = g.dim();
        let brackets = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| entry(i, j, g.basis_bracket(i, j)))
            .collect();
        let product = p.map(|p| {
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter_map(|(i, j)| entry(i, j, p.basis_product(i, j)))
                .collect()
        });
        AlgebraFile {
            dim: n,
            basis: g.names().map(<[String]>::to_vec),
            brackets,
            product,
        }
    }

    /// Checks indices and duplicates, applies the antisymmetric closure.
    pub fn to_parts(&self) -> Result<(LieAlgebra, Option<Product>), FormatError> {
        let n = self.dim;
        let mut brackets = Table::zero(n);
        fill(&mut brackets, &self.brackets, n, "brackets", true)?;
        let mut g = LieAlgebra::new(brackets);
        if let Some(names) = &self.basis {
            if names.len() != n {
                return Err(FormatError(format!(
                    "field `basis`: {} names for dimension {n}",
                    names.len()
                )));
            }
            g = g
                .with_names(names.clone())
                .map_err(|e| FormatError(format!("field `basis`: {e}")))?;
        }
        let product = match &self.product {
            None => None,
            Some(entries) => {
                let mut t = Table::zero(n);
                fill(&mut t, entries, n, "product", false)?;
                Some(Product::new(t))
            }
        };
        Ok((g, product))
    }
}

fn entry(i: usize, j: usize, v: &[Rational]) -> Option<Entry> {
    let coeffs: Vec<(usize, Rational)> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k + 1, c.clone()))
        .collect();
    (!coeffs.is_empty()).then(|| Entry {
        i: i + 1,
        j: j + 1,
        v: Coefficients(coeffs),
    })
}

fn fill(
    t: &mut Table,
    entries: &[Entry],
    n: usize,
    field: &str,
    antisymmetric: bool,
) -> Result<(), FormatError> {
    let mut seen = BTreeSet::new();
    for (idx, e) in entries.iter().enumerate() {
        let at = |msg: String| FormatError(format!("field `{field}[{idx}]`: {msg}"));
        for (name, value) in [("i", e.i), ("j", e.j)] {
            if value < 1 || value > n {
                return Err(at(format!("`{name}` = {value} outside 1..={n}")));
            }
        }
        if antisymmetric && e.i >= e.j {
            return Err(at(format!(
                "brackets need i < j, got i = {}, j = {}",
                e.i, e.j
            )));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(at(format!("duplicate entry ({}, {})", e.i, e.j)));
        }
        let mut v: Vector = zero_vector(n);
        for (k, c) in &e.v.0 {
            if *k < 1 || *k > n {
                return Err(at(format!("coefficient key {k} outside 1..={n}")));
            }
            v[k - 1] = c.clone();
        }
        if antisymmetric {
            t.set(e.j - 1, e.i - 1, v.iter().map(|c| -c).collect());
        }
        t.set(e.i - 1, e.j - 1, v);
    }
    Ok(())
}
