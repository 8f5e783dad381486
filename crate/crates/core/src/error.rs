use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("coordinate {coord} out of range 1..={len}")]
    CoordinateOutOfRange { coord: usize, len: usize },

    #[error("duplicate coordinate {0}")]
    DuplicateCoordinate(usize),

    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("length {0} is too large for the packed enumeration engines")]
    LengthTooLarge(usize),

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("code is not singly even")]
    NotSinglyEven,

    #[error("code is not doubly even")]
    NotDoublyEven,

    #[error("length {0} is not divisible by 8")]
    LengthNotDivisibleBy8(usize),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("code is not s-extremal: {0}")]
    NotSExtremal(String),

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("linear system has a nullspace of dimension {0}")]
    NonUnique(usize),

    #[error("non-integral coefficient at weight {0}")]
    NonIntegral(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
