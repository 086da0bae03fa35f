//! Prints the largest observed `rounds / log2(N + 2)` per grid cell.
//!
//! Usage: cargo run --release -p corank --example round_ratio [seed...]

use corank::bench::{cell_seed, k_samples, Grid, GridPreset};
use corank::corank;
use corank::oracle::{gen_instance, GenSpec};

fn main() {
    let seeds: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .collect();
    let seeds = if seeds.is_empty() { vec![1] } else { seeds };
    let grid = Grid::preset(GridPreset::Standard);
    let mut worst = 0.0f64;
    for seed in seeds {
        for &profile in &grid.profiles {
            for &n in &grid.sizes {
                for &m in &grid.lists {
                    let spec = GenSpec::new(m, n, profile, cell_seed(seed, profile, m, n));
                    let inst = gen_instance(&spec).unwrap();
                    let max_rounds = k_samples(n)
                        .into_iter()
                        .map(|k| corank(&inst, k).unwrap().1.rounds)
                        .max()
                        .unwrap();
                    let ratio = max_rounds as f64 / ((n + 2) as f64).log2();
                    worst = worst.max(ratio);
                    println!("{seed}\t{}\t{m}\t{n}\t{max_rounds}\t{ratio:.3}", profile.name());
                }
            }
        }
    }
    println!("max ratio {worst:.3}");
}
