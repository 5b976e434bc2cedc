use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row}, entry {col} is not a residue below the modulus")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("row {row} is linearly dependent on the preceding rows")]
    DependentRow { row: usize },
    #[error("need 1 <= d <= j + 1, got j = {j}, d = {d}")]
    InvalidDimension { j: usize, d: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("dominance order undefined: partitions of {left} and {right}")]
    UnequalTotals { left: usize, right: usize },
    #[error("tau = {tau} outside 1..=min(d, j + 2 - d) for j = {j}, d = {d}: the stratum is empty")]
    EmptyStratum { j: usize, d: usize, tau: usize },
    #[error("invalid Hilbert tail: {0}")]
    InvalidTail(String),
    #[error("Hilbert function of a degree-{j} space did not stabilize by degree {cap}")]
    StabilizationCap { j: usize, cap: usize },
    #[error("no valid sample after {attempts} attempts: {reason}")]
    SamplingExhausted { attempts: usize, reason: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
