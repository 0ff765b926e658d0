use crate::rootsys::{Family, SystemType};
use thiserror::Error;

/// Errors surfaced by the library. Every operation is total on valid inputs;
/// these cover the documented rejection paths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible system {family:?}{rank}: {reason}")]
    InadmissibleSystem {
        family: Family,
        rank: usize,
        reason: String,
    },

    #[error("node index {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("weight has {got} labels, system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {labels:?} is not dominant")]
    NonDominant { labels: Vec<i64> },

    #[error("the zero weight spans no diagram")]
    ZeroWeight,

    #[error("labeling is over {expected}, got a diagram over {got}")]
    SystemMismatch { expected: SystemType, got: SystemType },

    #[error("invalid orbit partition: {0}")]
    InvalidPartition(String),

    #[error("no canonical quotient for this partition of {system}: {reason}")]
    NotFoldable { system: SystemType, reason: String },

    #[error("rank cap {got} outside supported range {min}..={max}")]
    RankCap { got: usize, min: usize, max: usize },
}
