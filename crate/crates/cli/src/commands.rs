use std::fs;
use std::io::Write;
use std::path::Path;

use corank::algorithm::frontier_gap;
use corank::apps::{knapsack_split, parallel_merge};
use corank::bench::{run_grid, BenchOptions, BenchRecord, Grid, GridPreset};
use corank::oracle::{gen_instance, DupProfile, GenSpec};
use corank::{
    canonicalize_cut, check_corank, corank_observed, CutVector, Error, Instance, Violation,
};

use crate::files::{
    format_array, format_lists, parse_cut, parse_rational, read_instance, read_lists, read_shards,
};
use crate::CliError;

pub fn corank(
    file: &Path,
    k: usize,
    canonical: bool,
    trace: bool,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    let inst = read_instance(file)?;
    let mut rows = Vec::new();
    let (cut, stats) = corank_observed(&inst, k, |view| {
        if trace {
            let gap = view
                .frontier
                .and_then(|(l, r)| frontier_gap(l.bound, r.bound))
                .map_or_else(|| "-".to_string(), |g| g.to_string());
            rows.push((view.round, view.bounds.width(), gap));
        }
    })?;
    let cut = if canonical {
        canonicalize_cut(&inst, &cut)?
    } else {
        cut
    };
    writeln!(out, "{}", format_array(cut.indices()))?;
    if trace {
        writeln!(out, "rounds {}", stats.rounds)?;
        writeln!(out, "heap_updates {}", stats.heap_updates)?;
        writeln!(out, "round\tdonor\treceiver\tdelta\tgap_before\tbound_width_after")?;
        for (t, (_, width, gap)) in stats.transfers.iter().zip(rows.iter().skip(1)) {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                t.round, t.donor, t.receiver, t.delta, gap, width
            )?;
        }
    }
    Ok(0)
}

fn describe(inst: &Instance<i64>, cut: &[usize], v: &Violation) -> String {
    match *v {
        Violation::Frontier {
            left_list,
            right_list,
        } => {
            let left = inst.list(left_list)[cut[left_list] - 1];
            let right = inst.list(right_list)[cut[right_list]];
            format!(
                "left boundary {left} (list {left_list}) exceeds right boundary {right} (list {right_list})"
            )
        }
        other => other.to_string(),
    }
}

pub fn validate(file: &Path, k: usize, cut: &str, out: &mut impl Write) -> Result<u8, CliError> {
    let inst = read_instance(file)?;
    let indices = parse_cut(cut)?;
    let cut = CutVector::new(indices, k);
    match check_corank(&inst, &cut) {
        Ok(()) => {
            writeln!(out, "VALID")?;
            Ok(0)
        }
        Err(v @ (Violation::Length { .. } | Violation::IndexOutOfRange { .. })) => {
            Err(CliError::Usage(v.to_string()))
        }
        Err(v) => {
            writeln!(out, "INVALID: {}", describe(&inst, &cut, &v))?;
            Ok(1)
        }
    }
}

pub fn merge(file: &Path, p: usize, dest: Option<&Path>, out: &mut impl Write) -> Result<u8, CliError> {
    let lists = read_lists(file)?;
    let merged = if lists.is_empty() {
        if p == 0 {
            return Err(Error::NoProcessors.into());
        }
        Vec::new()
    } else {
        parallel_merge(&Instance::new(lists)?, p)?.into_vec()
    };
    let text = format_array(&merged);
    match dest {
        Some(path) => fs::write(path, text + "\n")?,
        None => writeln!(out, "{text}")?,
    }
    Ok(0)
}

pub fn knapsack(file: &Path, capacity: &str, out: &mut impl Write) -> Result<u8, CliError> {
    let shards = read_shards(file)?;
    let capacity = parse_rational(capacity)?;
    let (sol, stats) = knapsack_split(&shards, &capacity)?;
    writeln!(out, "counts {}", format_array(&sol.counts))?;
    match &sol.fractional {
        Some(f) => writeln!(
            out,
            "fractional shard={} item={} fraction={}",
            f.shard, f.item, f.fraction
        )?,
        None => writeln!(out, "fractional none")?,
    }
    writeln!(out, "total_value {}", sol.total_value)?;
    writeln!(out, "total_weight {}", sol.total_weight)?;
    writeln!(out, "corank_calls {}", stats.corank_calls)?;
    Ok(0)
}

pub fn bench(preset: GridPreset, seed: u64, reps: usize, out: &mut impl Write) -> Result<u8, CliError> {
    let opts = BenchOptions {
        seed,
        reps,
        time_merge: true,
    };
    writeln!(out, "{}", BenchRecord::HEADER)?;
    let mut io_err = None;
    run_grid(&Grid::preset(preset), opts, |r| {
        if io_err.is_none() {
            io_err = writeln!(out, "{r}").and_then(|_| out.flush()).err();
        }
    })?;
    match io_err {
        Some(e) => Err(e.into()),
        None => Ok(0),
    }
}

pub fn gen(
    seed: u64,
    m: usize,
    n: usize,
    profile: DupProfile,
    dest: &Path,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    let inst = gen_instance(&GenSpec::new(m, n, profile, seed))?;
    let total = inst.total_len();
    fs::write(dest, format_lists(&inst.into_lists()))
        .map_err(|e| CliError::Usage(format!("{}: {e}", dest.display())))?;
    writeln!(out, "wrote {m} lists, {total} keys to {}", dest.display())?;
    Ok(0)
}
