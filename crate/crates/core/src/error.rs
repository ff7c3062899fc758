use thiserror::Error;

use crate::Rational;

/// Errors raised while building or operating on the finite models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("atom `{0}` has a negative weight")]
    NegativeWeight(String),
    #[error("weights sum to {0}, expected 1")]
    WeightsDoNotSumToOne(Rational),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("sample space has no atoms")]
    EmptySpace,
    #[error("blocks do not partition the atoms: {0}")]
    NotAPartition(String),
    #[error("{what}: expected size {expected}, found {found}")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("time grid is empty")]
    EmptyGrid,
    #[error("time grid is not strictly increasing at index {0}")]
    GridNotIncreasing(usize),
    #[error("time grid label at index {0} is negative")]
    NegativeTime(usize),
    #[error("filtration does not refine at time index {0}")]
    FiltrationNotRefining(usize),
    #[error("grid index {index} is out of range for a grid of {len} points")]
    TickOutOfRange { index: usize, len: usize },
    #[error("at least one time is required")]
    EmptyTimeList,
    #[error("random time is not a stopping time")]
    NotStoppingTime,
    #[error("random time is not a predictable time")]
    NotPredictableTime,
    #[error("interval end time must be finite on every atom")]
    UnboundedInterval,
    #[error("stochastic set is not {0}")]
    NotOfKind(&'static str),
    #[error("epsilon must be nonnegative, got {0}")]
    NegativeEpsilon(Rational),
    #[error("invalid scheme index `{0}`")]
    InvalidSchemeIndex(String),
    #[error("scheme bounds must be positive")]
    ZeroBound,
    #[error("scheme node {0} is not a member of the paving")]
    NodeNotInPaving(String),
    #[error("paving member is not a subset of the ground set")]
    MemberOutsideGround,
    #[error("paving is not closed under finite unions and intersections")]
    PavingNotClosed,
    #[error("schemes do not share a paving")]
    MismatchedPaving,
    #[error("cannot merge an empty list of schemes")]
    EmptyMerge,
    #[error("scheme with depth {depth} and branching {branching} exceeds the node budget")]
    SchemeTooLarge { depth: usize, branching: usize },
    #[error("scheme is not monotone")]
    NotMonotone,
    #[error("scheme ground set does not match the space-time cells")]
    GroundMismatch,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
