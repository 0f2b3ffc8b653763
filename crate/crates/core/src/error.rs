use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which bound is missing when a poset fails to be a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFailure {
    NoUpperBound,
    NoLeastUpperBound,
    NoLowerBound,
    NoGreatestLowerBound,
}

impl fmt::Display for BoundFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFailure::NoUpperBound => "no-upper-bound",
            BoundFailure::NoLeastUpperBound => "no-least-upper-bound",
            BoundFailure::NoLowerBound => "no-lower-bound",
            BoundFailure::NoGreatestLowerBound => "no-greatest-lower-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("invalid element name {0:?}: names must be nonempty and contain no whitespace")]
    InvalidName(String),
    #[error("cover relation has a cycle: {}", .0.join(" < "))]
    CycleDetected(Vec<String>),
    #[error("the structure is empty")]
    EmptyStructure,
    #[error("not a lattice: pair ({x}, {y}) has {reason}")]
    NotALattice {
        x: String,
        y: String,
        reason: BoundFailure,
    },
    #[error("size limit exceeded: more than {limit} {what}")]
    SizeLimitExceeded { what: &'static str, limit: usize },
    #[error("operation needs a nonempty set of elements")]
    EmptySelection,
    #[error("minimal decomposition is not unique: the lattice is not {0}")]
    DecompositionNotUnique(&'static str),
    #[error("operands live on different lattices")]
    LatticeMismatch,
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("map is not a bijection: {0}")]
    NotABijection(String),
    #[error("not a valid negation, violated at ({})", .0.join(", "))]
    InvalidNegation(Vec<String>),
    #[error("irreducible map has no consistent extension, violated at ({})", .0.join(", "))]
    NoConsistentExtension(Vec<String>),
    #[error("total conflict: all combined mass lies on the bottom element")]
    TotalConflict,
    #[error("a simple support function cannot be focused on the bottom element")]
    FocusIsBottom,
    #[error("Möbius transform vanishes at the top element")]
    TopMassZero,
    #[error("not a belief function (violated at `{0}`)")]
    NotABelief(String),
    #[error("weight of `{0}` is not positive: {1}")]
    NonPositiveWeight(String, f64),
    #[error("not a mass allocation: {0}")]
    InvalidMass(String),
    #[error("the lattice is not distributive")]
    NotDistributive,
    #[error("the lattice is not autodual")]
    NotAutodual,
    #[error("tied distribution values at `{0}` and `{1}`")]
    TiesInDistribution(String, String),
    #[error("largest distribution value is {0}, expected 1")]
    TopValueNotOne(f64),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("no unique join-irreducible could be selected at step {step}")]
    SelectionFailed { step: usize },
    #[error("missing values for: {}", .0.join(", "))]
    MissingValues(Vec<String>),
    #[error("{0}")]
    Format(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
