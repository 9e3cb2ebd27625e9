use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part at index {index} is larger than the part before it")]
    NotDescending { index: usize },
    #[error("part at index {index} is zero")]
    ZeroPart { index: usize },
    #[error("entry at index {index} does not strictly decrease")]
    NotStrictlyDecreasing { index: usize },
    #[error("value {0} occurs three or more times")]
    MultiplicityTooHigh(u32),
    #[error("value {0} is listed both as a pair and as a singleton")]
    Overlap(u32),
    #[error("cannot parse {0:?} as a part")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("two distinct minimal partitions of weight {weight}: {first} and {second}")]
    NotUnique { weight: u64, first: Partition, second: Partition },
    #[error("no valid partition found with weight at most {bound}")]
    NoneWithinBound { bound: u64 },
    #[error("residue class a={a} is outside 1..={k}")]
    BadResidue { k: u32, a: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("residue class a={0} is not one of 1, 2, 3")]
    BadResidue(u32),
    #[error("{0} does not satisfy the k=3 difference conditions for this a")]
    InvalidPartition(Partition),
    #[error("malformed triple: {0}")]
    MalformedTriple(String),
    #[error("{kind} move on {value} is not applicable to {partition}")]
    MoveInapplicable { kind: &'static str, value: u32, partition: Partition },
    #[error("backward pass stuck at {snapshot} after {moves} moves")]
    Stuck { snapshot: Partition, moves: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
