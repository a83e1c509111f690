use thiserror::Error;

use crate::LieType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("label {label} does not fit type {g}")]
    LabelMismatch { g: LieType, label: String },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group algebra elements live in different groups: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("letter set of size {letters} does not fit shape of size {shape}")]
    ShapeMismatch { letters: usize, shape: usize },
    #[error("subgroup check failed: {0}")]
    Subgroup(String),
    #[error("span is not closed under the right action")]
    NotRightModule,
    #[error("operation needs type {expected}, got {got}")]
    WrongType { expected: &'static str, got: LieType },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("rank {rank} too small: {reason}")]
    InsufficientRank { rank: usize, reason: String },
    #[error("negative multiplicity while peeling {weight:?}")]
    NegativeMultiplicity { weight: Vec<i64> },
    #[error("results differ between rank {low} and rank {high}: {detail}")]
    NotStabilized { low: usize, high: usize, detail: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("size budget exceeded: {0}")]
    Budget(String),
    #[error("block component crosses label fibers: {0}")]
    BlockCrossing(String),
    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
