//! Boundary access, the frontier predicate and tie canonicalization.

use std::fmt;

use crate::error::{Error, Result};
use crate::instance::{Bound, BoundaryKey, CutVector, Instance};

/// Last included element of list `t` under a cut at `i_t`, or `NegInf`.
pub fn boundary_left<T>(inst: &Instance<T>, t: usize, i_t: usize) -> Result<BoundaryKey<&T>> {
    let list = checked_list(inst, t, i_t)?;
    Ok(BoundaryKey {
        bound: left_of(list, i_t),
        list: t,
    })
}

/// First excluded element of list `t` under a cut at `i_t`, or `PosInf`.
pub fn boundary_right<T>(inst: &Instance<T>, t: usize, i_t: usize) -> Result<BoundaryKey<&T>> {
    let list = checked_list(inst, t, i_t)?;
    Ok(BoundaryKey {
        bound: right_of(list, i_t),
        list: t,
    })
}

fn checked_list<T>(inst: &Instance<T>, t: usize, i_t: usize) -> Result<&[T]> {
    if t >= inst.num_lists() {
        return Err(Error::ListOutOfRange {
            list: t,
            lists: inst.num_lists(),
        });
    }
    let list = inst.list(t);
    if i_t > list.len() {
        return Err(Error::IndexOutOfRange {
            list: t,
            index: i_t,
            len: list.len(),
        });
    }
    Ok(list)
}

#[inline]
pub(crate) fn left_of<T>(list: &[T], i: usize) -> Bound<&T> {
    match i {
        0 => Bound::NegInf,
        _ => Bound::Finite(&list[i - 1]),
    }
}

#[inline]
pub(crate) fn right_of<T>(list: &[T], i: usize) -> Bound<&T> {
    match list.get(i) {
        Some(v) => Bound::Finite(v),
        None => Bound::PosInf,
    }
}

/// Why a cut fails to be a co-rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Length { got: usize, lists: usize },
    IndexOutOfRange { list: usize, index: usize, len: usize },
    Mass { mass: usize, k: usize },
    /// The left boundary of `left_list` exceeds the right boundary of `right_list`.
    Frontier { left_list: usize, right_list: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Length { got, lists } => {
                write!(f, "cut has {got} entries for {lists} lists")
            }
            Violation::IndexOutOfRange { list, index, len } => {
                write!(f, "index {index} exceeds length {len} of list {list}")
            }
            Violation::Mass { mass, k } => write!(f, "mass {mass} != K {k}"),
            Violation::Frontier {
                left_list,
                right_list,
            } => write!(
                f,
                "left boundary of list {left_list} exceeds right boundary of list {right_list}"
            ),
        }
    }
}

/// Checks `sum(cut) == K` and `max left <= min right` in `O(m)`.
pub fn check_corank<T: Ord>(inst: &Instance<T>, cut: &CutVector) -> Result<(), Violation> {
    if cut.len() != inst.num_lists() {
        return Err(Violation::Length {
            got: cut.len(),
            lists: inst.num_lists(),
        });
    }
    let mut mass = 0usize;
    let mut max_left = (Bound::NegInf, 0);
    let mut min_right = (Bound::PosInf, 0);
    for (t, (list, &i)) in inst.lists().zip(cut.iter()).enumerate() {
        if i > list.len() {
            return Err(Violation::IndexOutOfRange {
                list: t,
                index: i,
                len: list.len(),
            });
        }
        mass += i;
        let l = left_of(list, i);
        if l > max_left.0 {
            max_left = (l, t);
        }
        let r = right_of(list, i);
        if r < min_right.0 {
            min_right = (r, t);
        }
    }
    if mass != cut.rank() {
        return Err(Violation::Mass { mass, k: cut.rank() });
    }
    if max_left.0 > min_right.0 {
        return Err(Violation::Frontier {
            left_list: max_left.1,
            right_list: min_right.1,
        });
    }
    Ok(())
}

pub fn is_valid_corank<T: Ord>(inst: &Instance<T>, cut: &CutVector) -> bool {
    check_corank(inst, cut).is_ok()
}

/// Maps a valid co-rank to the unique cut that takes the first `K` elements
/// under the strict order (value, list index, position).
///
/// A valid cut already contains every element below `v = max left` and no
/// element above it, so only the runs equal to `v` can differ. Those runs
/// are pooled and refilled in ascending list order.
pub fn canonicalize_cut<T: Ord>(inst: &Instance<T>, cut: &CutVector) -> Result<CutVector> {
    inst.check_cut(cut)?;
    check_corank(inst, cut).map_err(Error::InvalidCut)?;

    let pivot = inst
        .lists()
        .zip(cut.iter())
        .filter_map(|(list, &i)| match left_of(list, i) {
            Bound::Finite(x) => Some(x),
            _ => None,
        })
        .max();
    let Some(v) = pivot else {
        return Ok(CutVector::zeros(inst.num_lists()));
    };

    let mut out = cut.indices().to_vec();
    // (list, run length) for lists whose boundary touches v
    let mut runs = Vec::new();
    let mut pooled = 0usize;
    for (t, (list, &i)) in inst.lists().zip(cut.iter()).enumerate() {
        let touches = left_of(list, i) == Bound::Finite(v) || right_of(list, i) == Bound::Finite(v);
        if !touches {
            continue;
        }
        let below = list.partition_point(|x| x < v);
        let through = below + list[below..].partition_point(|x| x <= v);
        pooled += i - below;
        out[t] = below;
        runs.push((t, through - below));
    }
    for (t, run) in runs {
        let take = run.min(pooled);
        out[t] += take;
        pooled -= take;
        if pooled == 0 {
            break;
        }
    }
    debug_assert_eq!(pooled, 0);
    Ok(CutVector::new(out, cut.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(lists: &[&[i64]]) -> Instance<i64> {
        Instance::new(lists.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn boundary_left_examples() {
        let i = inst(&[&[2, 4]]);
        assert_eq!(boundary_left(&i, 0, 0).unwrap().bound, Bound::NegInf);
        assert_eq!(boundary_left(&i, 0, 2).unwrap().bound, Bound::Finite(&4));
        assert_eq!(boundary_left(&i, 0, 1).unwrap().bound, Bound::Finite(&2));
        assert_eq!(boundary_left(&i, 0, 1).unwrap().list, 0);
    }

    #[test]
    fn boundary_right_examples() {
        let i = inst(&[&[2, 4], &[]]);
        assert_eq!(boundary_right(&i, 0, 2).unwrap().bound, Bound::PosInf);
        assert_eq!(boundary_right(&i, 0, 0).unwrap().bound, Bound::Finite(&2));
        assert_eq!(boundary_right(&i, 1, 0).unwrap().bound, Bound::PosInf);
        assert_eq!(boundary_left(&i, 1, 0).unwrap().bound, Bound::NegInf);
    }

    #[test]
    fn boundary_access_rejects_out_of_range() {
        let i = inst(&[&[2, 4]]);
        assert_eq!(
            boundary_left(&i, 0, 3),
            Err(Error::IndexOutOfRange { list: 0, index: 3, len: 2 })
        );
        assert_eq!(
            boundary_right(&i, 1, 0),
            Err(Error::ListOutOfRange { list: 1, lists: 1 })
        );
    }

    #[test]
    fn validity_examples() {
        let i = inst(&[&[1, 3, 5], &[2, 4, 6]]);
        assert!(is_valid_corank(&i, &CutVector::new(vec![2, 1], 3)));
        assert_eq!(
            check_corank(&i, &CutVector::new(vec![3, 0], 3)),
            Err(Violation::Frontier { left_list: 0, right_list: 1 })
        );
        assert!(is_valid_corank(&i, &CutVector::zeros(2)));
        assert_eq!(
            check_corank(&i, &CutVector::new(vec![1, 1], 3)),
            Err(Violation::Mass { mass: 2, k: 3 })
        );
        assert_eq!(
            check_corank(&i, &CutVector::new(vec![4, 0], 4)),
            Err(Violation::IndexOutOfRange { list: 0, index: 4, len: 3 })
        );
        assert_eq!(
            check_corank(&i, &CutVector::new(vec![1], 1)),
            Err(Violation::Length { got: 1, lists: 2 })
        );
    }

    #[test]
    fn canonicalize_examples() {
        let ties = inst(&[&[2, 2], &[2, 2]]);
        assert_eq!(canonicalize_cut(&ties, &CutVector::new(vec![0, 2], 2)).unwrap(), [2, 0]);

        let plain = inst(&[&[1, 3, 5], &[2, 4, 6]]);
        assert_eq!(canonicalize_cut(&plain, &CutVector::new(vec![2, 1], 3)).unwrap(), [2, 1]);

        let three = inst(&[&[2], &[2], &[2]]);
        assert_eq!(
            canonicalize_cut(&three, &CutVector::new(vec![0, 1, 1], 2)).unwrap(),
            [1, 1, 0]
        );
    }

    #[test]
    fn canonicalize_rejects_invalid_cut() {
        let plain = inst(&[&[1, 3, 5], &[2, 4, 6]]);
        assert!(matches!(
            canonicalize_cut(&plain, &CutVector::new(vec![3, 0], 3)),
            Err(Error::InvalidCut(Violation::Frontier { .. }))
        ));
    }

    #[test]
    fn canonicalize_keeps_lower_values_in_later_lists() {
        // v = 5; list 1 holds a smaller value that must stay included.
        let i = inst(&[&[5, 5, 9], &[1, 5, 5]]);
        let c = canonicalize_cut(&i, &CutVector::new(vec![1, 3], 4)).unwrap();
        assert_eq!(c, [2, 2]);
    }
}
