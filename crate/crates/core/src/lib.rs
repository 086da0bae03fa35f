//! Merge-free multi-way co-ranking.
//!
//! Given `m` non-decreasing lists and a rank `K`, [`corank`] returns cut
//! indices `i_1..i_m` with `sum(i_t) = K` such that every element left of
//! a cut is `<=` every element right of any cut. It works purely on
//! indices: `O(log N)` rounds of `O(log m)` heap work each, with no merge
//! and no search over key values.
//!
//! ```
//! use corank::{corank, corank_canonical, is_valid_corank, Instance};
//!
//! let inst = Instance::new(vec![vec![1, 3, 5], vec![2, 4, 6]]).unwrap();
//! let (cut, stats) = corank(&inst, 3).unwrap();
//! assert!(is_valid_corank(&inst, &cut));
//! assert_eq!(cut.indices(), &[2, 1]);
//! assert_eq!(stats.heap_updates, 4 * stats.rounds);
//! assert_eq!(corank_canonical(&inst, 3).unwrap().indices(), &[2, 1]);
//! ```

pub mod algorithm;
pub mod apps;
pub mod bench;
pub mod error;
pub mod heap;
pub mod instance;
pub mod oracle;
pub mod validity;

pub use crate::algorithm::{
    corank, corank_canonical, corank_observed, water_fill_init, BoundsState, RoundStats, RoundView,
    Transfer,
};
pub use crate::error::{Error, Result};
pub use crate::heap::{Direction, HeapError, HeapOrder, IndexedHeap, TieRule};
pub use crate::instance::{Bound, BoundaryKey, CutVector, Instance, SortedSeq};
pub use crate::validity::{
    boundary_left, boundary_right, canonicalize_cut, check_corank, is_valid_corank, Violation,
};
