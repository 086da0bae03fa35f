//! Addressable binary heap over a fixed id universe `0..capacity`.
//!
//! Each id owns at most one entry. A position map from id to array slot
//! makes `update_key` a sift from a known slot instead of a search, so
//! both `insert` and `update_key` are `O(log m)` and `peek` is `O(1)`.
//!
//! The comparison is a [`HeapOrder`]: keys are compared in the heap's
//! direction and equal keys fall back to the id under the tie rule, which
//! makes the order on `(key, id)` pairs strict and total.

use std::cmp::Ordering;

use thiserror::Error;

const ABSENT: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieRule {
    SmallerIdFirst,
    LargerIdFirst,
}

/// Strict total order on `(key, id)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeapOrder {
    pub direction: Direction,
    pub tie_rule: TieRule,
}

impl HeapOrder {
    /// Max-heap that surfaces the larger id among equal keys.
    pub const MAX_LARGER_ID_FIRST: HeapOrder = HeapOrder {
        direction: Direction::Max,
        tie_rule: TieRule::LargerIdFirst,
    };

    /// Min-heap that surfaces the smaller id among equal keys.
    pub const MIN_SMALLER_ID_FIRST: HeapOrder = HeapOrder {
        direction: Direction::Min,
        tie_rule: TieRule::SmallerIdFirst,
    };

    pub const fn new(direction: Direction, tie_rule: TieRule) -> Self {
        HeapOrder { direction, tie_rule }
    }

    /// `Ordering::Less` means `a` surfaces before `b`.
    pub fn compare<K: Ord>(&self, a: (&K, usize), b: (&K, usize)) -> Ordering {
        let by_key = match self.direction {
            Direction::Min => a.0.cmp(b.0),
            Direction::Max => b.0.cmp(a.0),
        };
        by_key.then_with(|| match self.tie_rule {
            TieRule::SmallerIdFirst => a.1.cmp(&b.1),
            TieRule::LargerIdFirst => b.1.cmp(&a.1),
        })
    }

    fn precedes<K: Ord>(&self, a: (&K, usize), b: (&K, usize)) -> bool {
        self.compare(a, b) == Ordering::Less
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeapError {
    #[error("id {id} outside the heap's id universe 0..{capacity}")]
    IdOutOfRange { id: usize, capacity: usize },
    #[error("id {0} is already present")]
    DuplicateId(usize),
    #[error("id {0} is not present")]
    AbsentId(usize),
    #[error("peek on an empty heap")]
    Empty,
}

#[derive(Debug, Clone)]
struct Slot<K> {
    key: K,
    id: usize,
}

#[derive(Debug, Clone)]
pub struct IndexedHeap<K> {
    order: HeapOrder,
    slots: Vec<Slot<K>>,
    // id -> slot index, ABSENT when the id has no entry.
    pos: Vec<usize>,
    swaps: u64,
}

impl<K: Ord> IndexedHeap<K> {
    pub fn new(capacity: usize, order: HeapOrder) -> Self {
        IndexedHeap {
            order,
            slots: Vec::with_capacity(capacity),
            pos: vec![ABSENT; capacity],
            swaps: 0,
        }
    }

    pub fn order(&self) -> HeapOrder {
        self.order
    }

    pub fn capacity(&self) -> usize {
        self.pos.len()
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.pos.get(id).is_some_and(|&p| p != ABSENT)
    }

    pub fn key(&self, id: usize) -> Option<&K> {
        match self.pos.get(id) {
            Some(&p) if p != ABSENT => Some(&self.slots[p].key),
            _ => None,
        }
    }

    /// Total slot swaps performed since construction.
    pub fn swap_count(&self) -> u64 {
        self.swaps
    }

    pub fn insert(&mut self, id: usize, key: K) -> Result<(), HeapError> {
        self.check_id(id)?;
        if self.pos[id] != ABSENT {
            return Err(HeapError::DuplicateId(id));
        }
        let at = self.slots.len();
        self.slots.push(Slot { key, id });
        self.pos[id] = at;
        self.sift_up(at);
        Ok(())
    }

    pub fn update_key(&mut self, id: usize, key: K) -> Result<(), HeapError> {
        self.check_id(id)?;
        let at = self.pos[id];
        if at == ABSENT {
            return Err(HeapError::AbsentId(id));
        }
        self.slots[at].key = key;
        let at = self.sift_up(at);
        self.sift_down(at);
        Ok(())
    }

    pub fn peek(&self) -> Result<(&K, usize), HeapError> {
        self.slots
            .first()
            .map(|s| (&s.key, s.id))
            .ok_or(HeapError::Empty)
    }

    /// Live entries in slot order.
    pub fn entries(&self) -> impl Iterator<Item = (&K, usize)> + '_ {
        self.slots.iter().map(|s| (&s.key, s.id))
    }

    /// Checks the heap property at every parent/child pair and the
    /// agreement between the position map and the slot array.
    pub fn is_well_formed(&self) -> bool {
        let heap_ordered = (1..self.slots.len()).all(|c| {
            let p = (c - 1) / 2;
            !self.precedes_slot(c, p)
        });
        let live = self.pos.iter().filter(|&&p| p != ABSENT).count();
        let mapped = self
            .slots
            .iter()
            .enumerate()
            .all(|(at, s)| self.pos.get(s.id) == Some(&at));
        heap_ordered && mapped && live == self.slots.len()
    }

    fn check_id(&self, id: usize) -> Result<(), HeapError> {
        if id < self.pos.len() {
            Ok(())
        } else {
            Err(HeapError::IdOutOfRange {
                id,
                capacity: self.pos.len(),
            })
        }
    }

    fn precedes_slot(&self, a: usize, b: usize) -> bool {
        let (sa, sb) = (&self.slots[a], &self.slots[b]);
        self.order.precedes((&sa.key, sa.id), (&sb.key, sb.id))
    }

    fn swap_slots(&mut self, a: usize, b: usize) {
        self.slots.swap(a, b);
        self.pos[self.slots[a].id] = a;
        self.pos[self.slots[b].id] = b;
        self.swaps += 1;
    }

    fn sift_up(&mut self, mut at: usize) -> usize {
        while at > 0 {
            let parent = (at - 1) / 2;
            if !self.precedes_slot(at, parent) {
                break;
            }
            self.swap_slots(at, parent);
            at = parent;
        }
        at
    }

    fn sift_down(&mut self, mut at: usize) -> usize {
        let len = self.slots.len();
        loop {
            let left = 2 * at + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let child = if right < len && self.precedes_slot(right, left) {
                right
            } else {
                left
            };
            if !self.precedes_slot(child, at) {
                break;
            }
            self.swap_slots(at, child);
            at = child;
        }
        at
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Bound;

    fn fin(v: i64) -> Bound<i64> {
        Bound::Finite(v)
    }

    #[test]
    fn insert_into_empty_heap() {
        let mut h = IndexedHeap::new(4, HeapOrder::MIN_SMALLER_ID_FIRST);
        h.insert(0, fin(5)).unwrap();
        assert_eq!(h.peek().unwrap(), (&fin(5), 0));
    }

    #[test]
    fn insert_smaller_key_surfaces() {
        let mut h = IndexedHeap::new(2, HeapOrder::MIN_SMALLER_ID_FIRST);
        h.insert(0, fin(3)).unwrap();
        h.insert(1, fin(2)).unwrap();
        assert_eq!(h.peek().unwrap(), (&fin(2), 1));
    }

    #[test]
    fn insert_tie_prefers_smaller_id() {
        let mut h = IndexedHeap::new(2, HeapOrder::MIN_SMALLER_ID_FIRST);
        h.insert(1, fin(4)).unwrap();
        h.insert(0, fin(4)).unwrap();
        assert_eq!(h.peek().unwrap(), (&fin(4), 0));
    }

    #[test]
    fn update_key_sifts_down() {
        let mut h = IndexedHeap::new(2, HeapOrder::MIN_SMALLER_ID_FIRST);
        h.insert(0, fin(1)).unwrap();
        h.insert(1, fin(5)).unwrap();
        h.update_key(0, fin(9)).unwrap();
        assert_eq!(h.peek().unwrap(), (&fin(5), 1));
        assert!(h.is_well_formed());
    }

    #[test]
    fn update_key_to_sentinel_dominates_max_heap() {
        let mut h = IndexedHeap::new(2, HeapOrder::new(Direction::Max, TieRule::LargerIdFirst));
        h.insert(0, fin(1)).unwrap();
        h.insert(1, fin(5)).unwrap();
        h.update_key(0, Bound::PosInf).unwrap();
        assert_eq!(h.peek().unwrap(), (&Bound::PosInf, 0));
    }

    #[test]
    fn update_key_identity_keeps_peek() {
        let mut h = IndexedHeap::new(3, HeapOrder::MIN_SMALLER_ID_FIRST);
        for (id, k) in [(0, 4), (1, 2), (2, 7)] {
            h.insert(id, fin(k)).unwrap();
        }
        let before = (*h.peek().unwrap().0, h.peek().unwrap().1);
        h.update_key(1, fin(2)).unwrap();
        assert_eq!((*h.peek().unwrap().0, h.peek().unwrap().1), before);
    }

    #[test]
    fn peek_max_tie_prefers_larger_id() {
        let mut h = IndexedHeap::new(3, HeapOrder::MAX_LARGER_ID_FIRST);
        h.insert(0, fin(7)).unwrap();
        h.insert(2, fin(7)).unwrap();
        assert_eq!(h.peek().unwrap(), (&fin(7), 2));
    }

    #[test]
    fn peek_min_of_three_and_is_pure() {
        let mut h = IndexedHeap::new(3, HeapOrder::MIN_SMALLER_ID_FIRST);
        for (id, k) in [(0, 3), (1, 1), (2, 2)] {
            h.insert(id, fin(k)).unwrap();
        }
        let first = h.peek().unwrap();
        assert_eq!(first, (&fin(1), 1));
        assert_eq!(h.peek().unwrap(), first);
    }

    #[test]
    fn usage_errors() {
        let mut h: IndexedHeap<Bound<i64>> = IndexedHeap::new(2, HeapOrder::MIN_SMALLER_ID_FIRST);
        assert_eq!(h.peek(), Err(HeapError::Empty));
        assert_eq!(
            h.insert(2, fin(0)),
            Err(HeapError::IdOutOfRange { id: 2, capacity: 2 })
        );
        h.insert(0, fin(0)).unwrap();
        assert_eq!(h.insert(0, fin(1)), Err(HeapError::DuplicateId(0)));
        assert_eq!(h.update_key(1, fin(1)), Err(HeapError::AbsentId(1)));
        assert_eq!(
            h.update_key(5, fin(1)),
            Err(HeapError::IdOutOfRange { id: 5, capacity: 2 })
        );
    }

    #[test]
    fn sentinels_order_around_finite_keys() {
        let mut h = IndexedHeap::new(3, HeapOrder::MIN_SMALLER_ID_FIRST);
        h.insert(0, Bound::PosInf).unwrap();
        h.insert(1, fin(i64::MIN)).unwrap();
        h.insert(2, Bound::NegInf).unwrap();
        assert_eq!(h.peek().unwrap(), (&Bound::NegInf, 2));
        h.update_key(2, Bound::PosInf).unwrap();
        assert_eq!(h.peek().unwrap(), (&fin(i64::MIN), 1));
    }
}
