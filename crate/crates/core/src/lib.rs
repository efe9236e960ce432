//! Exact computations with LR-structures on finite-dimensional Lie algebras.
//!
//! An LR-structure on a Lie algebra `g` is a bilinear product `x·y` whose left
//! multiplications pairwise commute, whose right multiplications pairwise
//! commute, and whose commutator `x·y − y·x` is the Lie bracket. It is
//! *complete* when every right multiplication is nilpotent.
//!
//! All arithmetic is over the rationals with arbitrary precision, so every
//! check in this crate is decisive: an identity either holds exactly or a
//! nonzero defect vector is reported.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: rational matrices, canonical subspaces, Fitting splits.
//! - [`lie`]: Lie algebras by structure constants, series, quotients and
//!   the semidirect splitting of a two-step solvable algebra.
//! - [`lr`]: bilinear products, LR-axiom checks and operator identities.
//! - [`construct`]: completion, lifting and explicit constructions of
//!   LR-structures.
//! - [`catalog`]: named algebras and product fixtures.
//! - [`cli`]: the JSON exchange format and the command-line front end.

pub mod catalog;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exec;
pub mod lie;
pub mod linalg;
pub mod lr;
mod table;

pub use error::{Error, Result};
pub use exec::Execution;
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Rational, Subspace, Vector};
pub use lr::Product;
pub use table::Table;
