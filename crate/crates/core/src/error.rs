use thiserror::Error;

/// Errors for invalid inputs to the core operations.
///
/// Mathematical *hypothesis* failures (a theorem's assumption not holding for
/// a given instance) are never errors; they surface as `Vacuous` check
/// reports. Errors are reserved for inputs that make an operation
/// meaningless: mismatched ground sets, malformed topologies, out-of-range
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set supports at most 64 points, got {0}")]
    GroundTooLarge(usize),
    #[error("point {point} outside ground set of {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("set uses points outside the {n}-point ground set")]
    SetOutOfRange { n: usize },
    #[error("ground mismatch: expected {expected} points, got {got}")]
    GroundMismatch { expected: usize, got: usize },
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("join of an empty list of topologies")]
    EmptyJoin,
    #[error("nu must be at least 1")]
    ZeroNu,
    #[error("level index xi={xi} exceeds nu={nu}")]
    LevelIndexOutOfRange { nu: usize, xi: usize },
    #[error("sigma is not a subtopology of tau")]
    NotSubtopology,
    #[error("invalid filtration at stage {index}: {reason}")]
    FiltrationInvariant { index: usize, reason: String },
    #[error("sequence is not a weak filtration")]
    NotWeakFiltration,
    #[error("stage index {got} out of range for {len} stages")]
    StageOutOfRange { got: usize, len: usize },
    #[error("enumeration supports n <= {max}, got {n}")]
    EnumerationRange { n: usize, max: usize },
    #[error("sweep supports n <= {max}, got {n}")]
    SweepRange { n: usize, max: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
