//! Instance and shard file formats.
//!
//! An instance file is one JSON document: an array of arrays of integers,
//! one inner array per sorted list. A shard file is an array of shards,
//! each an array of `[density, weight]` pairs in non-increasing density
//! order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use corank::apps::{shards_from, Item, KnapsackShard};
use corank::Instance;
use ordered_float::NotNan;

use crate::CliError;

pub type Amount = NotNan<f64>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Raw lists; zero lists is allowed here and rejected by `Instance::new`.
pub fn read_lists(path: &Path) -> Result<Vec<Vec<i64>>, CliError> {
    parse_lists(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn parse_lists(text: &str) -> Result<Vec<Vec<i64>>, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn read_instance(path: &Path) -> Result<Instance<i64>, CliError> {
    Ok(Instance::new(read_lists(path)?)?)
}

/// One inner array per line.
pub fn format_lists(lists: &[Vec<i64>]) -> String {
    let mut out = String::from("[\n");
    for (t, list) in lists.iter().enumerate() {
        out.push_str(&format_array(list));
        out.push_str(if t + 1 < lists.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

pub fn format_array<T: std::fmt::Display>(xs: &[T]) -> String {
    let mut out = String::with_capacity(xs.len() * 4 + 2);
    out.push('[');
    for (j, x) in xs.iter().enumerate() {
        if j > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
    out
}

pub fn read_shards(path: &Path) -> Result<Vec<KnapsackShard<Amount>>, CliError> {
    let raw: Vec<Vec<(f64, f64)>> = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let shards = raw
        .into_iter()
        .map(|items| {
            items
                .into_iter()
                .map(|(d, w)| Ok(Item::new(finite(d)?, finite(w)?)))
                .collect::<Result<Vec<_>, CliError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(shards_from(shards)?)
}

fn finite(x: f64) -> Result<Amount, CliError> {
    NotNan::new(x)
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::Usage(format!("{x} is not a finite number")))
}

/// Accepts `8`, `7.5` or `15/2`.
pub fn parse_rational(s: &str) -> Result<Amount, CliError> {
    let bad = || CliError::Usage(format!("cannot parse {s:?} as a number"));
    let value = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| bad())?;
            let d: f64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            n / d
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    finite(value)
}

pub fn parse_cut(s: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad cut entry {x:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_round_trip() {
        let lists = vec![vec![1, 3, 5], vec![], vec![-2, 7]];
        assert_eq!(parse_lists(&format_lists(&lists)).unwrap(), lists);
        assert_eq!(format_lists(&[]), "[\n]\n");
        assert_eq!(parse_lists(&format_lists(&[])).unwrap(), Vec::<Vec<i64>>::new());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("8").unwrap().into_inner(), 8.0);
        assert_eq!(parse_rational("7.5").unwrap().into_inner(), 7.5);
        assert_eq!(parse_rational("15/2").unwrap().into_inner(), 7.5);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("NaN").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn cuts() {
        assert_eq!(parse_cut("2,1").unwrap(), vec![2, 1]);
        assert_eq!(parse_cut("[2, 1]").unwrap(), vec![2, 1]);
        assert!(parse_cut("2,-1").is_err());
    }
}
