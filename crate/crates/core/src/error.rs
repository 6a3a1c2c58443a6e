use thiserror::Error;

use crate::structures::MerotopicStructure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} is outside 1..={max}", max = crate::covers::MAX_ELEMENTS)]
    InvalidGroundSet(usize),

    #[error("element {element} is out of range for a ground set of {n} elements")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("family of subsets is not a covering of the ground set")]
    NotACover,

    #[error("ground set mismatch: {left} elements vs {right} elements")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("a structure needs at least one generating cover")]
    EmptyGenerators,

    #[error("ground set of {n} elements exceeds the supported bound of {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("{count} maps exceed the enumeration budget of {budget}")]
    MapBudgetExceeded { count: u64, budget: u64 },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error(
        "reflection algorithms disagree: iterative gave {iterative:?}, maximal gave {maximal:?}"
    )]
    AlgorithmDisagreement {
        iterative: Box<MerotopicStructure>,
        maximal: Box<MerotopicStructure>,
    },

    #[error("join of all nearness substructures is not the maximum: {0}")]
    NotMaximal(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
