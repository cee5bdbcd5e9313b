use thiserror::Error;

/// Denominator magnitudes below this raise [`Error::DegenerateDistribution`].
pub const DEGENERACY_EPS: f64 = 1e-12;

/// Errors produced while validating annotation data or computing agreement
/// statistics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The dataset contains no items; per-item averages are undefined.
    #[error("dataset has no items")]
    EmptyDataset,

    /// The dataset declares no categories.
    #[error("dataset has no categories")]
    NoCategories,

    /// Category identifiers must be non-empty.
    #[error("category name must not be empty")]
    EmptyCategoryName,

    /// Category identifiers must be unique.
    #[error("duplicate category name `{0}`")]
    DuplicateCategory(String),

    /// Pair-based agreement needs at least two annotators per item.
    #[error("at least 2 annotators per item are required, found {found}")]
    InsufficientAnnotators { found: u32 },

    /// Every item must be annotated by the same number of annotators.
    #[error("item at index {item} has {found} annotations, expected {expected}")]
    InconsistentAnnotatorCount {
        item: usize,
        expected: u32,
        found: u32,
    },

    /// A label or annotation refers to a category index outside `0..categories`.
    #[error("category index {index} at item {item} is out of range for {categories} categories")]
    CategoryOutOfRange {
        item: usize,
        index: usize,
        categories: usize,
    },

    /// Two paired structures disagree on the number of `what`.
    #[error("dimension mismatch: {left} vs {right} {what}")]
    DimensionMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    /// The chance-agreement denominator vanished: annotation (and label) mass
    /// is concentrated on a single category and the statistic is undefined.
    #[error("degenerate distribution: kappa denominator {denominator:e} is below 1e-12 in magnitude")]
    DegenerateDistribution { denominator: f64 },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
