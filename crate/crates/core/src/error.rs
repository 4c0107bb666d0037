use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {gcd}; they do not define a numerical semigroup")]
    GcdNotOne { gcd: u32 },
    #[error("semigroup too large: Frobenius bound {bound} exceeds {limit}")]
    TooLarge { bound: u64, limit: u64 },
    #[error("gap set {gaps:?} is not the complement of a numerical semigroup")]
    InvalidGapSet { gaps: Vec<u32> },
    #[error("{value} is not a positive member of the semigroup")]
    NotAMember { value: i64 },
    #[error("the regular ring (semigroup ℕ) has no such invariant")]
    RegularRing,
    #[error("ideals live over different semigroups")]
    BaseMismatch,
    #[error("ideal is not contained in the semigroup")]
    NotContained,
    #[error("set is not closed under addition of the semigroup")]
    NotAnIdeal,
    #[error("independent computations of {what} disagree: {detail}")]
    InternalDisagreement { what: String, detail: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("genus {requested} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { requested: u32, ceiling: u32 },
    #[error("naive oracle limited to genus {limit}, got {genus}")]
    OracleTooLarge { genus: u32, limit: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
