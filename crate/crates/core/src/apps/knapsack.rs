//! Fractional knapsack over shards that are each sorted by density.
//!
//! Densities are negated so every shard becomes a non-decreasing list and
//! the canonical co-rank at `K` is exactly the `K` densest items across
//! all shards (ties by shard, then item). Cumulative weight of that
//! prefix is monotone in `K`, so a binary search over `K` with one
//! co-rank per probe finds the largest prefix that fits. The item after
//! the prefix is the smallest right boundary of the canonical cut.

use std::ops::Neg;

use num_traits::Num;

use crate::algorithm::corank_canonical;
use crate::error::{Error, Result};
use crate::instance::{Bound, CutVector, Instance};
use crate::validity::right_of;

/// Ordered numeric type usable for densities, weights and capacities.
pub trait Amount: Clone + Ord + Num + Neg<Output = Self> {}

impl<A: Clone + Ord + Num + Neg<Output = A>> Amount for A {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item<A> {
    /// Value per unit weight.
    pub density: A,
    pub weight: A,
}

impl<A> Item<A> {
    pub fn new(density: A, weight: A) -> Self {
        Item { density, weight }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackShard<A> {
    items: Vec<Item<A>>,
    // prefix sums with a leading zero, len = items.len() + 1
    prefix_weight: Vec<A>,
    prefix_value: Vec<A>,
}

impl<A: Amount> KnapsackShard<A> {
    /// Requires densities `>= 0` and non-increasing, weights `> 0`.
    pub fn new(items: Vec<Item<A>>) -> Result<Self> {
        let bad = |item, reason| Error::BadShard {
            shard: 0,
            item,
            reason,
        };
        let mut prefix_weight = Vec::with_capacity(items.len() + 1);
        let mut prefix_value = Vec::with_capacity(items.len() + 1);
        prefix_weight.push(A::zero());
        prefix_value.push(A::zero());
        for (j, item) in items.iter().enumerate() {
            if item.density < A::zero() {
                return Err(bad(j, "negative density"));
            }
            if item.weight <= A::zero() {
                return Err(bad(j, "non-positive weight"));
            }
            if j > 0 && items[j - 1].density < item.density {
                return Err(bad(j, "density increases"));
            }
            let w = prefix_weight[j].clone() + item.weight.clone();
            let v = prefix_value[j].clone() + item.density.clone() * item.weight.clone();
            prefix_weight.push(w);
            prefix_value.push(v);
        }
        Ok(KnapsackShard {
            items,
            prefix_weight,
            prefix_value,
        })
    }
}

impl<A> KnapsackShard<A> {
    pub fn items(&self) -> &[Item<A>] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// `prefix_weight()[j]` is the weight of the first `j` items.
    pub fn prefix_weight(&self) -> &[A] {
        &self.prefix_weight
    }
}

/// Builds shards, reporting the offending shard index on failure.
pub fn shards_from<A: Amount>(shards: Vec<Vec<Item<A>>>) -> Result<Vec<KnapsackShard<A>>> {
    shards
        .into_iter()
        .enumerate()
        .map(|(s, items)| {
            KnapsackShard::new(items).map_err(|e| match e {
                Error::BadShard { item, reason, .. } => Error::BadShard {
                    shard: s,
                    item,
                    reason,
                },
                other => other,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalItem<A> {
    pub shard: usize,
    pub item: usize,
    /// Taken share of the item's weight, strictly between 0 and 1.
    pub fraction: A,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackSolution<A> {
    /// Whole items taken from the front of each shard.
    pub counts: Vec<usize>,
    pub fractional: Option<FractionalItem<A>>,
    pub total_value: A,
    pub total_weight: A,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KnapsackStats {
    pub corank_calls: u32,
}

/// Sum of the prefix weights selected by `cut`. `O(m)`.
pub fn prefix_weight_total<A: Amount>(shards: &[KnapsackShard<A>], cut: &[usize]) -> Result<A> {
    if cut.len() != shards.len() {
        return Err(Error::CutLength {
            got: cut.len(),
            lists: shards.len(),
        });
    }
    let mut total = A::zero();
    for (s, (shard, &i)) in shards.iter().zip(cut).enumerate() {
        let w = shard.prefix_weight.get(i).ok_or(Error::IndexOutOfRange {
            list: s,
            index: i,
            len: shard.len(),
        })?;
        total = total + w.clone();
    }
    Ok(total)
}

fn prefix_value_total<A: Amount>(shards: &[KnapsackShard<A>], cut: &[usize]) -> A {
    shards
        .iter()
        .zip(cut)
        .fold(A::zero(), |acc, (shard, &i)| acc + shard.prefix_value[i].clone())
}

pub fn knapsack_split<A: Amount>(
    shards: &[KnapsackShard<A>],
    capacity: &A,
) -> Result<(KnapsackSolution<A>, KnapsackStats)> {
    if *capacity < A::zero() {
        return Err(Error::NegativeCapacity);
    }
    let mut stats = KnapsackStats::default();
    if shards.is_empty() {
        let empty = KnapsackSolution {
            counts: Vec::new(),
            fractional: None,
            total_value: A::zero(),
            total_weight: A::zero(),
        };
        return Ok((empty, stats));
    }

    let lists = shards
        .iter()
        .map(|s| s.items.iter().map(|it| -it.density.clone()).collect())
        .collect();
    let inst = Instance::new(lists)?;
    let n = inst.total_len();

    // Largest k in [0, n] whose canonical prefix fits; weight(0) = 0 always fits.
    let (mut lo, mut hi) = (0usize, n);
    let mut best = CutVector::zeros(shards.len());
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        let cut = corank_canonical(&inst, mid)?;
        stats.corank_calls += 1;
        if prefix_weight_total(shards, &cut)? <= *capacity {
            lo = mid;
            best = cut;
        } else {
            hi = mid - 1;
        }
    }
    debug_assert_eq!(best.rank(), lo);

    let whole_weight = prefix_weight_total(shards, &best)?;
    let whole_value = prefix_value_total(shards, &best);
    let room = capacity.clone() - whole_weight.clone();

    let mut solution = KnapsackSolution {
        counts: best.indices().to_vec(),
        fractional: None,
        total_value: whole_value,
        total_weight: whole_weight,
    };
    if lo < n && room > A::zero() {
        let (shard, item) = next_in_order(&inst, &best);
        let it = &shards[shard].items[item];
        solution.total_value = solution.total_value + it.density.clone() * room.clone();
        solution.total_weight = capacity.clone();
        solution.fractional = Some(FractionalItem {
            shard,
            item,
            fraction: room / it.weight.clone(),
        });
    }
    Ok((solution, stats))
}

/// The smallest right boundary under (value, list) order.
fn next_in_order<A: Ord>(inst: &Instance<A>, cut: &CutVector) -> (usize, usize) {
    let mut best: Option<(Bound<&A>, usize)> = None;
    for (t, list) in inst.lists().enumerate() {
        let r = right_of(list, cut[t]);
        if best.as_ref().is_none_or(|b| r < b.0) {
            best = Some((r, t));
        }
    }
    let (bound, t) = best.expect("at least one shard");
    debug_assert!(matches!(bound, Bound::Finite(_)));
    (t, cut[t])
}
