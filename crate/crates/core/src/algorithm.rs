//! Multi-way co-ranking by donor/receiver halving in index space.
//!
//! Every list keeps explicit bounds `lower[t] <= cut[t] <= upper[t]`. Each
//! round takes the list with the largest left boundary as donor and the
//! list with the smallest right boundary as receiver, moves
//! `min(ceil(slack/2), ceil(headroom/2))` units of index mass between them
//! and pins the donor's upper and the receiver's lower bound at their
//! pre-move indices. Two indexed heaps keep the extremal boundaries
//! available in `O(1)` with `O(log m)` refresh, so a query costs
//! `O(log N * log m)` regardless of `K`.

use crate::error::{Error, Result};
use crate::heap::{HeapOrder, IndexedHeap};
use crate::instance::{Bound, BoundaryKey, CutVector, Instance};
use crate::validity::{canonicalize_cut, left_of, right_of};

/// Per-list index bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsState {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl BoundsState {
    pub fn new(lens: Vec<usize>) -> Self {
        BoundsState {
            lower: vec![0; lens.len()],
            upper: lens,
        }
    }

    /// `sum(upper - lower)`: the width of the remaining search space.
    pub fn width(&self) -> usize {
        self.upper.iter().zip(&self.lower).map(|(u, l)| u - l).sum()
    }

    pub fn donor_slack(&self, cut: &[usize], p: usize) -> usize {
        cut[p] - self.lower[p]
    }

    pub fn receiver_headroom(&self, cut: &[usize], q: usize) -> usize {
        self.upper[q] - cut[q]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub round: u64,
    pub donor: usize,
    pub receiver: usize,
    pub delta: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundStats {
    /// Loop iterations that moved mass (the final stop check is not counted).
    pub rounds: u64,
    /// `update_key` calls across both heaps.
    pub heap_updates: u64,
    pub transfers: Vec<Transfer>,
}

/// State handed to an observer after initialization (`round == 0`) and
/// after every committed transfer.
#[derive(Debug)]
pub struct RoundView<'a, T> {
    pub round: u64,
    pub cut: &'a [usize],
    pub bounds: &'a BoundsState,
    /// Extremal left and right boundaries that selected this round's
    /// donor and receiver. `None` at `round == 0`.
    pub frontier: Option<(BoundaryKey<&'a T>, BoundaryKey<&'a T>)>,
}

/// Fills lists to capacity in ascending list order until `k` units are placed.
pub fn water_fill_init<T>(inst: &Instance<T>, k: usize) -> Result<CutVector> {
    inst.check_rank(k)?;
    let mut need = k;
    let indices = inst
        .lists()
        .map(|list| {
            let take = list.len().min(need);
            need -= take;
            take
        })
        .collect();
    Ok(CutVector::new(indices, k))
}

pub fn corank<T: Ord>(inst: &Instance<T>, k: usize) -> Result<(CutVector, RoundStats)> {
    corank_observed(inst, k, |_| {})
}

/// Canonical co-rank: `canonicalize_cut(corank(inst, k))`.
pub fn corank_canonical<T: Ord>(inst: &Instance<T>, k: usize) -> Result<CutVector> {
    let (cut, _) = corank(inst, k)?;
    canonicalize_cut(inst, &cut)
}

/// [`corank`] with a callback that sees the cut and bounds after every round.
pub fn corank_observed<T: Ord>(
    inst: &Instance<T>,
    k: usize,
    mut observe: impl FnMut(&RoundView<'_, T>),
) -> Result<(CutVector, RoundStats)> {
    let m = inst.num_lists();
    let mut cut = water_fill_init(inst, k)?.into_indices();
    let mut bounds = BoundsState::new(inst.lens());
    let mut stats = RoundStats::default();

    // HL: max left boundary, later list wins ties. HR: min right boundary,
    // earlier list wins ties.
    let mut left = IndexedHeap::new(m, HeapOrder::MAX_LARGER_ID_FIRST);
    let mut right = IndexedHeap::new(m, HeapOrder::MIN_SMALLER_ID_FIRST);
    for (t, list) in inst.lists().enumerate() {
        left.insert(t, left_of(list, cut[t]))?;
        right.insert(t, right_of(list, cut[t]))?;
    }
    observe(&RoundView {
        round: 0,
        cut: &cut,
        bounds: &bounds,
        frontier: None,
    });

    loop {
        let (&x, p) = left.peek()?;
        let (&y, q) = right.peek()?;
        if x < y || (x == y && p <= q) {
            break;
        }

        let round = stats.rounds + 1;
        let give = bounds.donor_slack(&cut, p).div_ceil(2);
        let take = bounds.receiver_headroom(&cut, q).div_ceil(2);
        let delta = give.min(take);
        if delta == 0 {
            return Err(Error::Stalled {
                round,
                donor: p,
                receiver: q,
            });
        }

        bounds.upper[p] = cut[p];
        bounds.lower[q] = cut[q];
        cut[p] -= delta;
        cut[q] += delta;

        let (lp, lq) = (inst.list(p), inst.list(q));
        left.update_key(p, left_of(lp, cut[p]))?;
        right.update_key(p, right_of(lp, cut[p]))?;
        left.update_key(q, left_of(lq, cut[q]))?;
        right.update_key(q, right_of(lq, cut[q]))?;

        stats.rounds = round;
        stats.heap_updates += 4;
        stats.transfers.push(Transfer {
            round,
            donor: p,
            receiver: q,
            delta,
        });
        observe(&RoundView {
            round,
            cut: &cut,
            bounds: &bounds,
            frontier: Some((
                BoundaryKey { bound: x, list: p },
                BoundaryKey { bound: y, list: q },
            )),
        });
    }

    let cut = CutVector::new(cut, k);
    debug_assert!(
        crate::validity::is_valid_corank(inst, &cut),
        "corank returned an invalid cut {:?} for K = {k}",
        cut.indices()
    );
    Ok((cut, stats))
}

/// Largest left boundary minus smallest right boundary, when both are finite.
pub fn frontier_gap(max_left: Bound<&i64>, min_right: Bound<&i64>) -> Option<i128> {
    match (max_left, min_right) {
        (Bound::Finite(&l), Bound::Finite(&r)) => Some(l as i128 - r as i128),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validity::is_valid_corank;

    fn inst(lists: &[&[i64]]) -> Instance<i64> {
        Instance::new(lists.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn water_fill_examples() {
        let three = inst(&[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]);
        assert_eq!(water_fill_init(&three, 5).unwrap(), [3, 2, 0]);
        assert_eq!(water_fill_init(&three, 0).unwrap(), [0, 0, 0]);
        let two = inst(&[&[1, 2], &[1, 2]]);
        assert_eq!(water_fill_init(&two, 4).unwrap(), [2, 2]);
        assert_eq!(
            water_fill_init(&two, 5),
            Err(Error::RankOutOfRange { k: 5, total: 4 })
        );
    }

    #[test]
    fn corank_interleaved_lists() {
        let i = inst(&[&[1, 3, 5], &[2, 4, 6]]);
        let (cut, stats) = corank(&i, 3).unwrap();
        assert_eq!(cut, [2, 1]);
        assert!(is_valid_corank(&i, &cut));
        assert_eq!(stats.heap_updates, 4 * stats.rounds);
    }

    #[test]
    fn corank_extreme_ranks() {
        let i = inst(&[&[1, 3, 5], &[], &[2, 4, 6, 8]]);
        assert_eq!(corank(&i, 0).unwrap().0, [0, 0, 0]);
        assert_eq!(corank(&i, 7).unwrap().0, [3, 0, 4]);
    }

    #[test]
    fn corank_single_list() {
        let i = inst(&[&[4, 4, 7, 9, 9, 9]]);
        for k in 0..=6 {
            let (cut, stats) = corank(&i, k).unwrap();
            assert_eq!(cut, [k]);
            assert_eq!(stats.rounds, 0);
        }
    }

    #[test]
    fn corank_all_ties() {
        let i = inst(&[&[2, 2], &[2, 2]]);
        let (cut, _) = corank(&i, 2).unwrap();
        assert!(is_valid_corank(&i, &cut));
        assert_eq!(canonicalize_cut(&i, &cut).unwrap(), [2, 0]);
        assert_eq!(corank_canonical(&i, 2).unwrap(), [2, 0]);
    }

    #[test]
    fn corank_canonical_examples() {
        let i = inst(&[&[1, 3, 5], &[2, 4, 6]]);
        assert_eq!(corank_canonical(&i, 3).unwrap(), [2, 1]);
        assert_eq!(corank_canonical(&i, 6).unwrap(), [3, 3]);
    }

    #[test]
    fn corank_rejects_rank_above_total() {
        let i = inst(&[&[1], &[2]]);
        assert_eq!(corank(&i, 3), Err(Error::RankOutOfRange { k: 3, total: 2 }));
    }

    #[test]
    fn corank_moves_mass_out_of_water_filled_prefix() {
        // Water-fill puts everything into list 0, whose values are all larger.
        let i = inst(&[&[10, 11, 12, 13], &[1, 2, 3, 4]]);
        let (cut, stats) = corank(&i, 4).unwrap();
        assert_eq!(cut, [0, 4]);
        assert!(stats.rounds > 0);
        assert!(stats.transfers.iter().all(|t| t.delta >= 1));
    }

    #[test]
    fn observer_sees_conserved_mass_and_monotone_bounds() {
        let i = inst(&[&[5, 6, 7, 8, 9], &[0, 0, 1, 1, 2, 9], &[3, 3, 3], &[]]);
        for k in 0..=i.total_len() {
            let mut prev: Option<BoundsState> = None;
            corank_observed(&i, k, |view| {
                assert_eq!(view.cut.iter().sum::<usize>(), k);
                for t in 0..view.cut.len() {
                    assert!(view.bounds.lower[t] <= view.cut[t]);
                    assert!(view.cut[t] <= view.bounds.upper[t]);
                }
                if let Some(prev) = &prev {
                    for t in 0..view.cut.len() {
                        assert!(prev.lower[t] <= view.bounds.lower[t]);
                        assert!(prev.upper[t] >= view.bounds.upper[t]);
                    }
                    assert!(view.bounds.width() <= prev.width());
                }
                prev = Some(view.bounds.clone());
            })
            .unwrap();
        }
    }

    #[test]
    fn frontier_gap_is_finite_only_between_values() {
        assert_eq!(frontier_gap(Bound::Finite(&5), Bound::Finite(&2)), Some(3));
        assert_eq!(frontier_gap(Bound::NegInf, Bound::Finite(&2)), None);
    }
}
