//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid algebra specification: {0}")]
    InvalidAlgebra(String),

    #[error("Cartan hint is not abelian: {0}")]
    HintNotAbelian(String),

    #[error("Cartan hint cannot be extended: {0}")]
    HintDegenerate(String),

    #[error("weight clustering ambiguous at tolerance: {0}")]
    AmbiguousClustering(String),

    #[error("not a root of the given root datum")]
    NotARoot,

    #[error("broken root datum: {0}")]
    BrokenRootDatum(String),

    #[error("unreachable weight {labels:?}: {reason}")]
    UnreachableWeight { labels: Vec<i64>, reason: String },

    #[error("no highest weight vector found at the requested weight: {0}")]
    NoHighestWeightVector(String),

    #[error("representation construction failed: {0}")]
    ConstructionFailed(String),

    #[error("rank decision ambiguous at tolerance: {0}")]
    RankAmbiguous(String),

    #[error("Killing gram system is singular; input algebra is broken")]
    SingularGram,

    #[error("span budget exceeded: need {needed} matrix cells, budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
