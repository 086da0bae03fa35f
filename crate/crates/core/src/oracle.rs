//! Reference implementations and seeded instance generation.
//!
//! Nothing here is on the fast path. [`oracle_corank`] materializes the
//! canonical order by sorting every element, [`value_space_baseline`]
//! searches key thresholds with per-list counting, and
//! [`greedy_knapsack`] runs the textbook fractional greedy on fully
//! merged items. Tests and the bench harness compare the index-space
//! algorithm against these.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apps::knapsack::{Amount, KnapsackShard};
use crate::error::{Error, Result};
use crate::instance::{CutVector, Instance};

/// One element identified by its canonical sort key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple<'a, T> {
    pub value: &'a T,
    pub list: usize,
    pub pos: usize,
}

/// Every element of an instance sorted by (value, list, pos).
#[derive(Debug, Clone)]
pub struct CanonicalOrder<'a, T> {
    triples: Vec<Triple<'a, T>>,
    lists: usize,
}

impl<'a, T: Ord> CanonicalOrder<'a, T> {
    pub fn new(inst: &'a Instance<T>) -> Self {
        let mut triples = Vec::with_capacity(inst.total_len());
        for (list, keys) in inst.lists().enumerate() {
            triples.extend(keys.iter().enumerate().map(|(pos, value)| Triple { value, list, pos }));
        }
        // Built in (list, pos) order, so a stable sort on value alone yields
        // the strict order, and each list is already a sorted run.
        triples.sort_by(|a, b| a.value.cmp(b.value));
        CanonicalOrder {
            triples,
            lists: inst.num_lists(),
        }
    }

    pub fn triples(&self) -> &[Triple<'a, T>] {
        &self.triples
    }

    /// Per-list counts of the first `k` triples.
    pub fn cut_at(&self, k: usize) -> Result<CutVector> {
        if k > self.triples.len() {
            return Err(Error::RankOutOfRange {
                k,
                total: self.triples.len(),
            });
        }
        let mut counts = vec![0; self.lists];
        for t in &self.triples[..k] {
            counts[t.list] += 1;
        }
        Ok(CutVector::new(counts, k))
    }
}

/// Canonical cut at rank `k` by exhaustive sort. `O(N log N)`.
pub fn oracle_corank<T: Ord>(inst: &Instance<T>, k: usize) -> Result<CutVector> {
    inst.check_rank(k)?;
    CanonicalOrder::new(inst).cut_at(k)
}

/// The `k`-th smallest key (1-based) of the union.
pub fn oracle_kth_value<T: Ord>(inst: &Instance<T>, k: usize) -> Result<&T> {
    if k == 0 || k > inst.total_len() {
        return Err(Error::RankOutOfRange {
            k,
            total: inst.total_len(),
        });
    }
    Ok(CanonicalOrder::new(inst).triples[k - 1].value)
}

/// Canonical cut at rank `k` found by searching key thresholds.
///
/// Keeps a candidate window per list, picks the weighted median of the
/// window midpoints as threshold, counts elements below and through it
/// in every list and discards the windows' wrong side. Each round drops
/// at least a quarter of the remaining candidates, so there are
/// `O(log N)` rounds of `O(m log n)` work.
pub fn value_space_baseline<T: Ord>(inst: &Instance<T>, k: usize) -> Result<CutVector> {
    inst.check_rank(k)?;
    let m = inst.num_lists();
    if k == 0 {
        return Ok(CutVector::zeros(m));
    }
    let mut lo = vec![0usize; m];
    let mut hi = inst.lens();
    let mut candidates: Vec<(&T, usize)> = Vec::with_capacity(m);

    let threshold = loop {
        candidates.clear();
        let mut weight = 0usize;
        for (t, list) in inst.lists().enumerate() {
            let width = hi[t] - lo[t];
            if width > 0 {
                candidates.push((&list[lo[t] + width / 2], width));
                weight += width;
            }
        }
        // The k-th value always stays inside some window.
        assert!(weight > 0, "value-space search lost the k-th element");
        candidates.sort_unstable_by(|a, b| a.0.cmp(b.0));
        let mut acc = 0;
        let pivot = candidates
            .iter()
            .find(|c| {
                acc += c.1;
                2 * acc >= weight
            })
            .map(|c| c.0)
            .expect("weights are positive");

        let (below, through): (usize, usize) = inst
            .lists()
            .map(|l| (l.partition_point(|x| x < pivot), l.partition_point(|x| x <= pivot)))
            .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        if below < k && k <= through {
            break pivot;
        }
        for (t, list) in inst.lists().enumerate() {
            if k <= below {
                hi[t] = hi[t].min(list.partition_point(|x| x < pivot)).max(lo[t]);
            } else {
                lo[t] = lo[t].max(list.partition_point(|x| x <= pivot)).min(hi[t]);
            }
        }
    };

    let mut counts: Vec<usize> = inst
        .lists()
        .map(|l| l.partition_point(|x| x < threshold))
        .collect();
    let mut rest = k - counts.iter().sum::<usize>();
    for (t, list) in inst.lists().enumerate() {
        if rest == 0 {
            break;
        }
        let run = list[counts[t]..].partition_point(|x| x <= threshold);
        let take = run.min(rest);
        counts[t] += take;
        rest -= take;
    }
    Ok(CutVector::new(counts, k))
}

/// Result of the single-list fractional knapsack greedy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome<A> {
    pub value: A,
    pub weight: A,
    /// (shard, item) of every whole item taken, in take order.
    pub whole: Vec<(usize, usize)>,
    pub fractional: Option<(usize, usize, A)>,
}

/// Textbook greedy over all items merged by density (descending), ties by
/// shard then item index.
pub fn greedy_knapsack<A: Amount>(shards: &[KnapsackShard<A>], capacity: &A) -> GreedyOutcome<A> {
    let mut items: Vec<(usize, usize)> = shards
        .iter()
        .enumerate()
        .flat_map(|(s, shard)| (0..shard.len()).map(move |j| (s, j)))
        .collect();
    items.sort_by(|&(sa, ja), &(sb, jb)| {
        let (a, b) = (&shards[sa].items()[ja], &shards[sb].items()[jb]);
        b.density.cmp(&a.density).then(sa.cmp(&sb)).then(ja.cmp(&jb))
    });

    let mut out = GreedyOutcome {
        value: A::zero(),
        weight: A::zero(),
        whole: Vec::new(),
        fractional: None,
    };
    for (s, j) in items {
        let item = &shards[s].items()[j];
        let room = capacity.clone() - out.weight.clone();
        if room <= A::zero() {
            break;
        }
        if item.weight <= room {
            out.value = out.value + item.density.clone() * item.weight.clone();
            out.weight = out.weight + item.weight.clone();
            out.whole.push((s, j));
        } else {
            let fraction = room.clone() / item.weight.clone();
            out.value = out.value + item.density.clone() * room.clone();
            out.weight = out.weight + room;
            out.fractional = Some((s, j, fraction));
            break;
        }
    }
    out
}

/// How many duplicate keys the generator produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DupProfile {
    /// Keys drawn uniformly from a wide universe.
    None,
    /// Keys drawn from `{0, 1, 2}`.
    Heavy,
    /// Long constant runs over a narrow, shared value range.
    Runs,
}

impl DupProfile {
    pub const ALL: [DupProfile; 3] = [DupProfile::None, DupProfile::Heavy, DupProfile::Runs];

    pub fn name(self) -> &'static str {
        match self {
            DupProfile::None => "none",
            DupProfile::Heavy => "heavy",
            DupProfile::Runs => "runs",
        }
    }
}

impl std::str::FromStr for DupProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" | "uniform" => Ok(DupProfile::None),
            "heavy" | "tiny" => Ok(DupProfile::Heavy),
            "runs" => Ok(DupProfile::Runs),
            _ => Err(Error::Generator("unknown duplicate profile")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lengths {
    /// Each list length drawn independently from the range.
    PerList(RangeInclusive<usize>),
    /// Exactly this many elements split at random across the lists.
    Total(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub lists: RangeInclusive<usize>,
    pub lengths: Lengths,
    pub profile: DupProfile,
    /// Width of the key range for [`DupProfile::None`].
    pub universe: u64,
    pub seed: u64,
}

pub const DEFAULT_UNIVERSE: u64 = 1 << 40;

impl GenSpec {
    pub fn new(m: usize, total: usize, profile: DupProfile, seed: u64) -> Self {
        GenSpec {
            lists: m..=m,
            lengths: Lengths::Total(total),
            profile,
            universe: DEFAULT_UNIVERSE,
            seed,
        }
    }
}

/// Deterministic pseudo-random instance; the seed fixes every key.
pub fn gen_instance(spec: &GenSpec) -> Result<Instance<i64>> {
    if spec.lists.is_empty() || *spec.lists.start() == 0 {
        return Err(Error::Generator("list-count range must be non-empty and start at 1 or more"));
    }
    if let Lengths::PerList(r) = &spec.lengths {
        if r.is_empty() {
            return Err(Error::Generator("length range is empty"));
        }
    }
    if spec.profile == DupProfile::None && spec.universe == 0 {
        return Err(Error::Generator("key universe must be non-empty"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = rng.gen_range(spec.lists.clone());
    let lens = match &spec.lengths {
        Lengths::PerList(r) => (0..m).map(|_| rng.gen_range(r.clone())).collect(),
        Lengths::Total(n) => split_total(&mut rng, *n, m),
    };
    let lists = lens
        .into_iter()
        .map(|n| gen_list(&mut rng, n, spec.profile, spec.universe))
        .collect();
    Instance::new(lists)
}

fn split_total(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..m).map(|_| rng.gen_range(0..=n)).collect();
    cuts.push(0);
    cuts.push(n);
    cuts.sort_unstable();
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

fn gen_list(rng: &mut ChaCha8Rng, n: usize, profile: DupProfile, universe: u64) -> Vec<i64> {
    match profile {
        DupProfile::None => {
            let half = (universe / 2) as i64;
            let mut keys: Vec<i64> = (0..n)
                .map(|_| rng.gen_range(0..universe) as i64 - half)
                .collect();
            keys.sort_unstable();
            keys
        }
        DupProfile::Heavy => {
            let mut keys: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            keys.sort_unstable();
            keys
        }
        DupProfile::Runs => {
            let longest = (n / 3).max(1);
            let mut keys = Vec::with_capacity(n);
            let mut value: i64 = rng.gen_range(0..8);
            while keys.len() < n {
                let run = rng.gen_range(1..=longest).min(n - keys.len());
                keys.extend(std::iter::repeat_n(value, run));
                value += rng.gen_range(1..=2);
            }
            keys
        }
    }
}
