use thiserror::Error;

/// Errors raised by the library. Violations of twisted quotient data are not
/// errors; see [`crate::extquot::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative rank {0}")]
    NegativeRank(i64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("empty partition")]
    EmptyPartition,
    #[error("invalid group label: {0}")]
    InvalidGroup(String),
    #[error("orbit {orbit} is not an orbit of {group}")]
    InvalidOrbit { group: String, orbit: String },
    #[error("unknown orbit {0}")]
    UnknownOrbit(String),
    #[error("invalid enhancement: {0}")]
    InvalidEnhancement(String),
    #[error("operation requires a {expected} group, got {got}")]
    WrongFamily { expected: &'static str, got: String },
    #[error("invalid subset of simple roots: {0}")]
    InvalidSubset(String),
    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("incompatible parabolic pairs: {0}")]
    IncompatiblePairs(String),
    #[error("group of order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("invalid group: {0}")]
    InvalidGroupTable(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid twisted quotient data: {0}")]
    InvalidQuotientData(String),
    #[error("stabilizer condition violated for block {block} at point {point}")]
    StabilizerCondition { block: usize, point: usize },
    #[error("invalid catalog: {0}")]
    InvalidCatalog(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("duplicate key {0}")]
    DuplicateKey(String),
    #[error("internal arithmetic failure: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
