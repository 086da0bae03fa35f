//! Applications built on co-ranking.

pub mod knapsack;
pub mod merge;

pub use knapsack::{
    knapsack_split, prefix_weight_total, shards_from, Amount, FractionalItem, Item, KnapsackShard,
    KnapsackSolution, KnapsackStats,
};
pub use merge::{full_merge, parallel_merge, parallel_merge_with, partition_for_merge, Execution, MergePlan};
