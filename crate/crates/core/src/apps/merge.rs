//! Parallel m-way merge: co-rank the slice boundaries, then merge each
//! slice independently.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::Range;

use rayon::prelude::*;

use crate::algorithm::corank_canonical;
use crate::error::{Error, Result};
use crate::instance::{CutVector, Instance, SortedSeq};

/// Slice boundaries for `P` processors: `cuts[k]` is the canonical cut at
/// rank `floor(k * N / P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergePlan {
    pub cuts: Vec<CutVector>,
}

impl MergePlan {
    pub fn processors(&self) -> usize {
        self.cuts.len() - 1
    }

    /// Index range of list `t` owned by slice `k`.
    pub fn segment(&self, k: usize, t: usize) -> Range<usize> {
        self.cuts[k][t]..self.cuts[k + 1][t]
    }

    pub fn slice_len(&self, k: usize) -> usize {
        self.cuts[k + 1].rank() - self.cuts[k].rank()
    }

    /// Every list's boundaries are non-decreasing across slices.
    pub fn is_nested(&self) -> bool {
        self.cuts
            .windows(2)
            .all(|w| w[0].iter().zip(w[1].iter()).all(|(a, b)| a <= b))
    }
}

pub(crate) fn slice_rank(k: usize, total: usize, p: usize) -> usize {
    (k as u128 * total as u128 / p as u128) as usize
}

pub fn partition_for_merge<T: Ord>(inst: &Instance<T>, p: usize) -> Result<MergePlan> {
    if p == 0 {
        return Err(Error::NoProcessors);
    }
    let n = inst.total_len();
    let cuts = (0..=p)
        .map(|k| corank_canonical(inst, slice_rank(k, n, p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MergePlan { cuts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

pub fn parallel_merge<T>(inst: &Instance<T>, p: usize) -> Result<SortedSeq<T>>
where
    T: Ord + Clone + Send + Sync,
{
    parallel_merge_with(inst, p, Execution::Parallel)
}

/// Merges the instance in `p` slices. Output does not depend on `exec`.
pub fn parallel_merge_with<T>(inst: &Instance<T>, p: usize, exec: Execution) -> Result<SortedSeq<T>>
where
    T: Ord + Clone + Send + Sync,
{
    let plan = partition_for_merge(inst, p)?;
    let merge_slice = |k: usize| {
        let mut out = Vec::with_capacity(plan.slice_len(k));
        merge_ranges(inst, &plan.cuts[k], &plan.cuts[k + 1], &mut out);
        out
    };
    let slices: Vec<Vec<T>> = match exec {
        Execution::Sequential => (0..p).map(merge_slice).collect(),
        Execution::Parallel => (0..p).into_par_iter().map(merge_slice).collect(),
    };
    let mut merged = Vec::with_capacity(inst.total_len());
    for s in slices {
        merged.extend(s);
    }
    Ok(SortedSeq::from_sorted(merged))
}

/// Stable heap-based merge of the whole instance, one slice.
pub fn full_merge<T: Ord + Clone>(inst: &Instance<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(inst.total_len());
    let lo = vec![0; inst.num_lists()];
    merge_ranges(inst, &lo, &inst.lens(), &mut out);
    out
}

/// Merges `list[t][lo[t]..hi[t]]` for all `t` in (value, list, pos) order.
fn merge_ranges<T: Ord + Clone>(inst: &Instance<T>, lo: &[usize], hi: &[usize], out: &mut Vec<T>) {
    let mut heap: BinaryHeap<Reverse<(&T, usize, usize)>> = inst
        .lists()
        .enumerate()
        .filter(|&(t, _)| lo[t] < hi[t])
        .map(|(t, list)| Reverse((&list[lo[t]], t, lo[t])))
        .collect();
    while let Some(Reverse((value, t, pos))) = heap.pop() {
        out.push(value.clone());
        let next = pos + 1;
        if next < hi[t] {
            heap.push(Reverse((&inst.list(t)[next], t, next)));
        }
    }
}
