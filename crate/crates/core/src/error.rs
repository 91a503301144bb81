use thiserror::Error;

use crate::subset::Subset;

pub type Result<T> = std::result::Result<T, MatroidError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set has {0} elements; at most 64 are supported")]
    GroundSetTooLarge(usize),

    #[error("subset {subset} has elements outside a ground set of size {ground_size}")]
    MalformedSubset { subset: Subset, ground_size: usize },

    #[error("element {element} is outside a ground set of size {ground_size}")]
    ElementOutOfRange { element: usize, ground_size: usize },

    #[error("flat enumeration budget of {budget} closures exceeded ({reached} computed)")]
    FlatBudgetExceeded { budget: u64, reached: u64 },

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("matroid has rank 0; anti-Ramsey and packing queries need rank at least 1")]
    RankZero,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("family precondition failed: {0}")]
    FamilyPrecondition(String),

    #[error("basis exchange fails: removing {element} from {first} admits no replacement from {second}")]
    BasisExchange {
        first: Subset,
        second: Subset,
        element: usize,
    },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("vector {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("brute force is limited to 10 elements, got {0}")]
    TooLargeForBruteForce(usize),

    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}
