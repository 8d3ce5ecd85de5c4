use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the geometric kernel and the algorithms built on it.
///
/// Point labels carried in variants are 0-based; `Display` renders them
/// 1-based to match the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptyPointSet,

    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("points {} and {} are equal", .first + 1, .second + 1)]
    DuplicatePoint { first: usize, second: usize },

    #[error("points span an affine space of dimension {found}, expected {expected}")]
    NotFullDimensional { expected: usize, found: usize },

    #[error("subset spans dimension {found} but {expected} is required")]
    DegenerateSet { expected: usize, found: isize },

    #[error("label {} is out of range for {n} points", .label + 1)]
    LabelOutOfRange { label: usize, n: usize },

    #[error("label {} appears more than once in the script", .0 + 1)]
    RepeatedLabel(usize),

    #[error("script does not cover every point")]
    PartialScript,

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("NotSimplicial: cell {cell:?} has {size} points, a simplex needs {expected}")]
    NotSimplicial {
        cell: Vec<usize>,
        size: usize,
        expected: usize,
    },

    #[error("NoConvergence: no separating height scale found below 2^{doublings} times the base")]
    NoConvergence { doublings: u32 },

    #[error("BudgetExceeded: {scripts} scripts exceed the budget of {budget}")]
    BudgetExceeded { scripts: String, budget: u64 },

    #[error("NoCandidate: no point can be pulled or pushed at step {}", .step + 1)]
    NoCandidate { step: usize },

    #[error("VerificationFailed: {0}")]
    VerificationFailed(String),

    #[error("GKZ entry for point {} is negative", .0 + 1)]
    NegativeEntry(usize),
}
