use thiserror::Error;

use crate::heap::HeapError;
use crate::validity::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an instance needs at least one list")]
    NoLists,
    #[error("list {list} is not non-decreasing at position {pos}")]
    Unsorted { list: usize, pos: usize },
    #[error("rank {k} outside 0..={total}")]
    RankOutOfRange { k: usize, total: usize },
    #[error("list index {list} outside 0..{lists}")]
    ListOutOfRange { list: usize, lists: usize },
    #[error("index {index} outside 0..={len} for list {list}")]
    IndexOutOfRange { list: usize, index: usize, len: usize },
    #[error("cut has {got} entries, instance has {lists} lists")]
    CutLength { got: usize, lists: usize },
    #[error("cut is not a valid co-rank: {0}")]
    InvalidCut(Violation),
    #[error("processor count must be at least 1")]
    NoProcessors,
    #[error("capacity must be non-negative")]
    NegativeCapacity,
    #[error("shard {shard}: {reason} at item {item}")]
    BadShard {
        shard: usize,
        item: usize,
        reason: &'static str,
    },
    #[error("generator: {0}")]
    Generator(&'static str),
    #[error(
        "stalled in round {round}: donor {donor} and receiver {receiver} admit no transfer"
    )]
    Stalled {
        round: u64,
        donor: usize,
        receiver: usize,
    },
    #[error(transparent)]
    Heap(#[from] HeapError),
}

impl Error {
    /// True for failures that indicate a broken internal invariant rather
    /// than bad input.
    pub fn is_defect(&self) -> bool {
        matches!(self, Error::Stalled { .. } | Error::Heap(_))
    }
}
