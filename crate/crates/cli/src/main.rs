//! `corank`: co-rank sorted lists from files, validate cuts, merge, solve
//! multi-shard fractional knapsack, generate instances and benchmark.
//!
//! Exit codes: 0 success or VALID, 1 INVALID verdict, 2 usage or parse
//! error, 3 internal invariant failure.

mod commands;
mod files;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] corank::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_defect() => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "corank", version, about = "Merge-free multi-way co-ranking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Dups {
    None,
    Heavy,
    Runs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Preset {
    Smoke,
    Standard,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the cut vector for rank K.
    Corank {
        file: PathBuf,
        #[arg(long = "k")]
        k: usize,
        /// Print the canonical cut (ties resolved by list index).
        #[arg(long)]
        canonical: bool,
        /// Also print round statistics and every transfer.
        #[arg(long)]
        trace: bool,
    },
    /// Check a cut: VALID exits 0, INVALID exits 1.
    Validate {
        file: PathBuf,
        #[arg(long = "k")]
        k: usize,
        /// Comma-separated cut indices, one per list.
        #[arg(long, allow_hyphen_values = true)]
        cut: String,
    },
    /// Merge all lists using P independently merged slices.
    Merge {
        file: PathBuf,
        #[arg(long = "p")]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fractional knapsack over density-sorted shards.
    Knapsack {
        file: PathBuf,
        /// Capacity as an integer, decimal or fraction such as 15/2.
        #[arg(long, allow_hyphen_values = true)]
        capacity: String,
    },
    /// Tab-separated benchmark records over a size grid.
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Preset::Standard)]
        grid: Preset,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Write a seeded random instance file.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        m: usize,
        /// Total number of keys across all lists.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Dups::None)]
        dups: Dups,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, CliError> {
    use corank::bench::GridPreset;
    use corank::oracle::DupProfile;

    match cli.command {
        Command::Corank {
            file,
            k,
            canonical,
            trace,
        } => commands::corank(&file, k, canonical, trace, out),
        Command::Validate { file, k, cut } => commands::validate(&file, k, &cut, out),
        Command::Merge { file, p, out: dest } => commands::merge(&file, p, dest.as_deref(), out),
        Command::Knapsack { file, capacity } => commands::knapsack(&file, &capacity, out),
        Command::Bench { seed, grid, reps } => {
            let preset = match grid {
                Preset::Smoke => GridPreset::Smoke,
                Preset::Standard => GridPreset::Standard,
                Preset::Full => GridPreset::Full,
            };
            commands::bench(preset, seed, reps, out)
        }
        Command::Gen {
            seed,
            m,
            n,
            dups,
            out: dest,
        } => {
            let profile = match dups {
                Dups::None => DupProfile::None,
                Dups::Heavy => DupProfile::Heavy,
                Dups::Runs => DupProfile::Runs,
            };
            commands::gen(seed, m, n, profile, &dest, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if out.flush().is_err() && code == 0 {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
