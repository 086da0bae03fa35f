//! Sorted input sequences, cut vectors and sentinel-bearing boundary keys.

use std::cmp::Ordering;
use std::ops::{Deref, Index};

use crate::error::{Error, Result};
use crate::heap::TieRule;

/// A key extended with explicit sentinels: `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound<V> {
    NegInf,
    Finite(V),
    PosInf,
}

impl<V> Bound<V> {
    pub fn finite(&self) -> Option<&V> {
        match self {
            Bound::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn map<W>(self, f: impl FnOnce(V) -> W) -> Bound<W> {
        match self {
            Bound::NegInf => Bound::NegInf,
            Bound::Finite(v) => Bound::Finite(f(v)),
            Bound::PosInf => Bound::PosInf,
        }
    }
}

/// The value just left or right of a cut in one list, tagged with that list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryKey<V> {
    pub bound: Bound<V>,
    pub list: usize,
}

impl<V: Ord> BoundaryKey<V> {
    /// Compares by bound, then by list index under `tie`. Under
    /// `SmallerIdFirst` the smaller list index is the smaller key.
    pub fn cmp_with(&self, other: &Self, tie: TieRule) -> Ordering {
        self.bound.cmp(&other.bound).then_with(|| match tie {
            TieRule::SmallerIdFirst => self.list.cmp(&other.list),
            TieRule::LargerIdFirst => other.list.cmp(&self.list),
        })
    }
}

/// A non-decreasing sequence of keys. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SortedSeq<T>(Vec<T>);

impl<T: Ord> SortedSeq<T> {
    /// Fails with the first position `j` where `keys[j] > keys[j + 1]`.
    pub fn new(keys: Vec<T>) -> std::result::Result<Self, usize> {
        match keys.windows(2).position(|w| w[0] > w[1]) {
            Some(pos) => Err(pos),
            None => Ok(SortedSeq(keys)),
        }
    }
}

impl<T> SortedSeq<T> {
    pub(crate) fn from_sorted(keys: Vec<T>) -> Self {
        SortedSeq(keys)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }
}

impl<T> Deref for SortedSeq<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

/// `m >= 1` sorted lists of total length `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<T> {
    lists: Vec<SortedSeq<T>>,
    total: usize,
}

impl<T: Ord> Instance<T> {
    pub fn new(lists: Vec<Vec<T>>) -> Result<Self> {
        let seqs = lists
            .into_iter()
            .enumerate()
            .map(|(list, keys)| SortedSeq::new(keys).map_err(|pos| Error::Unsorted { list, pos }))
            .collect::<Result<Vec<_>>>()?;
        Self::from_seqs(seqs)
    }
}

impl<T> Instance<T> {
    pub fn from_seqs(lists: Vec<SortedSeq<T>>) -> Result<Self> {
        if lists.is_empty() {
            return Err(Error::NoLists);
        }
        let total = lists.iter().map(|l| l.len()).sum();
        Ok(Instance { lists, total })
    }

    /// Number of lists `m`.
    pub fn num_lists(&self) -> usize {
        self.lists.len()
    }

    /// Total length `N`.
    pub fn total_len(&self) -> usize {
        self.total
    }

    pub fn list(&self, t: usize) -> &[T] {
        &self.lists[t]
    }

    pub fn lists(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.lists.iter().map(|l| l.as_slice())
    }

    pub fn lens(&self) -> Vec<usize> {
        self.lists.iter().map(|l| l.len()).collect()
    }

    pub fn into_lists(self) -> Vec<Vec<T>> {
        self.lists.into_iter().map(SortedSeq::into_vec).collect()
    }

    pub(crate) fn check_rank(&self, k: usize) -> Result<()> {
        if k > self.total {
            Err(Error::RankOutOfRange { k, total: self.total })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_cut(&self, cut: &CutVector) -> Result<()> {
        if cut.len() != self.num_lists() {
            return Err(Error::CutLength {
                got: cut.len(),
                lists: self.num_lists(),
            });
        }
        for (list, (&index, seq)) in cut.iter().zip(&self.lists).enumerate() {
            if index > seq.len() {
                return Err(Error::IndexOutOfRange {
                    list,
                    index,
                    len: seq.len(),
                });
            }
        }
        Ok(())
    }
}

/// Per-list prefix lengths together with the rank they claim to realize.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutVector {
    indices: Vec<usize>,
    k: usize,
}

impl CutVector {
    /// A cut that claims rank `k`. The claim is checked by validation, not here.
    pub fn new(indices: Vec<usize>, k: usize) -> Self {
        CutVector { indices, k }
    }

    /// A cut whose rank is the sum of its indices.
    pub fn from_indices(indices: Vec<usize>) -> Self {
        let k = indices.iter().sum();
        CutVector { indices, k }
    }

    pub fn zeros(m: usize) -> Self {
        CutVector {
            indices: vec![0; m],
            k: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn mass(&self) -> usize {
        self.indices.iter().sum()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn into_indices(self) -> Vec<usize> {
        self.indices
    }
}

impl Deref for CutVector {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.indices
    }
}

impl Index<usize> for CutVector {
    type Output = usize;

    fn index(&self, t: usize) -> &usize {
        &self.indices[t]
    }
}

impl PartialEq<[usize]> for CutVector {
    fn eq(&self, other: &[usize]) -> bool {
        self.indices == other
    }
}

impl<const M: usize> PartialEq<[usize; M]> for CutVector {
    fn eq(&self, other: &[usize; M]) -> bool {
        self.indices == other
    }
}
