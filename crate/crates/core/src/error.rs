use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the algebraic operations.
///
/// Precondition failures are separate variants so that callers (and the CLI)
/// can tell which stage of a pipeline refused to run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operators {0} and {1} of the family do not commute")]
    NonCommuting(usize, usize),

    #[error("structure constants violate the Lie axioms ({0} violations)")]
    InvalidLieAlgebra(usize),

    #[error("subspace is not an ideal of the Lie algebra")]
    NotAnIdeal,

    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("Lie algebra is not two-step nilpotent (g^3 != 0)")]
    NotTwoStepNilpotent,

    #[error("Lie algebra is not two-step solvable")]
    NotTwoStepSolvable,

    #[error("g^inf differs from g^3")]
    InfinityNotThirdTerm,

    #[error("product is not an LR-structure: {0}")]
    NotLr(String),

    #[error("right multiplications do not commute; completeness is undefined")]
    RightOperatorsNotCommuting,

    #[error("subspace is not a two-sided ideal for the product")]
    IdealNotTwoSided,

    #[error("products of products do not commute: (x·y)·(u·v) != (u·v)·(x·y)")]
    ProductsNotCommuting,

    #[error("phi does not vanish on products of the complement")]
    PhiNonzero,

    #[error("the given vectors do not generate the Lie algebra")]
    NotGenerating,

    #[error("candidate vectors ad(y)^k ad(x)^l y do not span the Lie algebra")]
    CandidatesDoNotSpan,

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A linear system that theory says is solvable was not, or a
    /// postcondition failed. Indicates a bug or an unchecked precondition.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
