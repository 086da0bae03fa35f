#![allow(dead_code)]

use corank::apps::{shards_from, Item, KnapsackShard};
use corank::oracle::{gen_instance, DupProfile, GenSpec, Lengths};
use corank::Instance;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Per-list length cap for suite instance `i`: mostly short lists, with a
/// tail that reaches 10^4.
pub fn length_cap(i: u64) -> usize {
    match i % 100 {
        0 => 10_000,
        1..=2 => 2_000,
        3..=14 => 256,
        15..=44 => 32,
        _ => 6,
    }
}

pub fn suite_instance(i: u64) -> Instance<i64> {
    let profile = DupProfile::ALL[(i % 3) as usize];
    let spec = GenSpec {
        lists: 1..=64,
        lengths: Lengths::PerList(0..=length_cap(i / 3)),
        profile,
        universe: if i.is_multiple_of(7) { 20 } else { 1 << 40 },
        seed: 0xC0FFEE ^ i.wrapping_mul(0x2545_F491_4F6C_DD1D),
    };
    gen_instance(&spec).expect("valid generator spec")
}

/// 0, N, two uniform ranks and the ranks on both sides of a random value's
/// run of equal keys.
pub fn sample_ranks(inst: &Instance<i64>, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = inst.total_len();
    let mut ks = vec![0, n, rng.gen_range(0..=n), rng.gen_range(0..=n)];
    let nonempty: Vec<&[i64]> = inst.lists().filter(|l| !l.is_empty()).collect();
    if !nonempty.is_empty() {
        let l = nonempty[rng.gen_range(0..nonempty.len())];
        let v = l[rng.gen_range(0..l.len())];
        let below: usize = inst.lists().map(|l| l.partition_point(|x| *x < v)).sum();
        let through: usize = inst.lists().map(|l| l.partition_point(|x| *x <= v)).sum();
        ks.extend([below, through, (below + through) / 2, below + 1, through.saturating_sub(1)]);
    }
    ks.retain(|&k| k <= n);
    ks.sort_unstable();
    ks.dedup();
    ks
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random shards with rational densities and weights, sorted by density.
pub fn random_shards(rng: &mut ChaCha8Rng) -> Vec<KnapsackShard<Q>> {
    let m = rng.gen_range(1..=8);
    let tiny = rng.gen_bool(0.3);
    let raw = (0..m)
        .map(|_| {
            let len = rng.gen_range(0..=12);
            let mut items: Vec<Item<Q>> = (0..len)
                .map(|_| {
                    let density = if tiny {
                        q(rng.gen_range(0..3), 1)
                    } else {
                        q(rng.gen_range(0..60), rng.gen_range(1..=6))
                    };
                    Item::new(density, q(rng.gen_range(1..=40), rng.gen_range(1..=4)))
                })
                .collect();
            items.sort_by(|a, b| b.density.cmp(&a.density));
            items
        })
        .collect();
    shards_from(raw).expect("sorted shards")
}

pub fn total_weight(shards: &[KnapsackShard<Q>]) -> Q {
    shards
        .iter()
        .flat_map(|s| s.items())
        .fold(q(0, 1), |acc, it| acc + it.weight.clone())
}

pub fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}
