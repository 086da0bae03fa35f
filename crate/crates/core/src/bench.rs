//! Grid benchmark: rounds, heap work and wall time of co-ranking against
//! the value-space baseline and a full heap merge.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::apps::merge::full_merge;
use crate::algorithm::corank;
use crate::error::{Error, Result};
use crate::oracle::{gen_instance, value_space_baseline, DupProfile, GenSpec};

/// Frozen regression constant: observed rounds stay at or below
/// `ROUND_BOUND_C * log2(N + 2)` on the standard grid (seed 1).
///
/// Calibrated from `examples/round_ratio.rs`. The maximum ratio was 93.92,
/// at m = 256 and N = 10^6. Rounds grow with m: the ratio stays below 1
/// for m = 2 and below 9 for m = 16.
pub const ROUND_BOUND_C: f64 = 94.0;

pub fn round_bound(n: usize) -> f64 {
    ROUND_BOUND_C * ((n + 2) as f64).log2()
}

/// `{0, N/4, N/2, 3N/4, N}`.
pub fn k_samples(n: usize) -> [usize; 5] {
    [0, n / 4, n / 2, 3 * n / 4, n]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridPreset {
    Smoke,
    Standard,
    Full,
}

impl FromStr for GridPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smoke" => Ok(GridPreset::Smoke),
            "standard" => Ok(GridPreset::Standard),
            "full" => Ok(GridPreset::Full),
            _ => Err(Error::Generator("unknown grid preset")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub sizes: Vec<usize>,
    pub lists: Vec<usize>,
    pub profiles: Vec<DupProfile>,
}

impl Grid {
    pub fn preset(p: GridPreset) -> Self {
        let (sizes, lists) = match p {
            GridPreset::Smoke => (vec![1_000, 10_000], vec![2, 16]),
            GridPreset::Standard => (vec![1_000, 10_000, 100_000, 1_000_000], vec![2, 16, 256]),
            GridPreset::Full => (
                vec![1_000, 10_000, 100_000, 1_000_000, 10_000_000],
                vec![2, 4, 16, 64, 256],
            ),
        };
        Grid {
            sizes,
            lists,
            profiles: DupProfile::ALL.to_vec(),
        }
    }
}

/// One configuration's measurements. Times are the minimum over repetitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub profile: DupProfile,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub rounds: u64,
    pub heap_updates: u64,
    pub corank_time: Duration,
    pub baseline_time: Duration,
    pub merge_time: Option<Duration>,
}

impl BenchRecord {
    pub const HEADER: &'static str =
        "profile\tm\tN\tK\trounds\theap_updates\tcorank_ns\tbaseline_ns\tmerge_ns";
}

impl fmt::Display for BenchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t",
            self.profile.name(),
            self.m,
            self.n,
            self.k,
            self.rounds,
            self.heap_updates,
            self.corank_time.as_nanos(),
            self.baseline_time.as_nanos(),
        )?;
        match self.merge_time {
            Some(t) => write!(f, "{}", t.as_nanos()),
            None => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub seed: u64,
    pub reps: usize,
    pub time_merge: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            seed: 1,
            reps: 3,
            time_merge: true,
        }
    }
}

/// Seed for one grid cell, so cells are reproducible independently.
pub fn cell_seed(seed: u64, profile: DupProfile, m: usize, n: usize) -> u64 {
    let p = profile as u64;
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (p << 56)
        ^ ((m as u64) << 32)
        ^ n as u64
}

fn min_time<R>(reps: usize, mut f: impl FnMut() -> R) -> (Duration, R) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let r = f();
        best = best.min(start.elapsed());
        out = Some(r);
    }
    (best, out.expect("at least one repetition"))
}

/// Runs every (profile, N, m) cell at every sampled K and hands each record
/// to `sink` as soon as it is measured.
pub fn run_grid(grid: &Grid, opts: BenchOptions, mut sink: impl FnMut(&BenchRecord)) -> Result<()> {
    for &profile in &grid.profiles {
        for &n in &grid.sizes {
            for &m in &grid.lists {
                let inst = gen_instance(&GenSpec::new(m, n, profile, cell_seed(opts.seed, profile, m, n)))?;
                let merge_time = opts
                    .time_merge
                    .then(|| min_time(opts.reps, || full_merge(&inst).len()).0);
                for k in k_samples(n) {
                    let (corank_time, res) = min_time(opts.reps, || corank(&inst, k));
                    let (_, stats) = res?;
                    let (baseline_time, base) = min_time(opts.reps, || value_space_baseline(&inst, k));
                    base?;
                    sink(&BenchRecord {
                        profile,
                        m,
                        n,
                        k,
                        rounds: stats.rounds,
                        heap_updates: stats.heap_updates,
                        corank_time,
                        baseline_time,
                        merge_time,
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_samples_cover_ends() {
        assert_eq!(k_samples(1000), [0, 250, 500, 750, 1000]);
        assert_eq!(k_samples(0), [0; 5]);
    }

    #[test]
    fn record_line_has_header_arity() {
        let r = BenchRecord {
            profile: DupProfile::Heavy,
            m: 2,
            n: 10,
            k: 5,
            rounds: 3,
            heap_updates: 12,
            corank_time: Duration::from_nanos(7),
            baseline_time: Duration::from_nanos(9),
            merge_time: None,
        };
        let line = r.to_string();
        assert_eq!(line.split('\t').count(), BenchRecord::HEADER.split('\t').count());
        assert!(line.starts_with("heavy\t2\t10\t5\t3\t12\t7\t9\t-"));
    }

    #[test]
    fn rounds_are_deterministic_and_zero_at_ends() {
        let grid = Grid {
            sizes: vec![500],
            lists: vec![3, 8],
            profiles: DupProfile::ALL.to_vec(),
        };
        let opts = BenchOptions {
            seed: 9,
            reps: 1,
            time_merge: false,
        };
        let collect = || {
            let mut v = Vec::new();
            run_grid(&grid, opts, |r| v.push((r.profile, r.m, r.k, r.rounds, r.heap_updates)))
                .unwrap();
            v
        };
        let a = collect();
        assert_eq!(a, collect());
        assert_eq!(a.len(), 3 * 2 * 5);
        for (_, _, k, rounds, _) in a {
            if k == 0 || k == 500 {
                assert_eq!(rounds, 0);
            }
        }
    }
}
