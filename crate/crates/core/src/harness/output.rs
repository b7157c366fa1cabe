//! CSV emitters for aggregate results and run trajectories.

use std::io::{BufRead, Write};

use super::experiment::AggregateResult;
use crate::error::{Error, Result};
use crate::solvers::RunRecord;

pub const RESULTS_HEADER: &str = "algorithm,k,mean_f,std_f,mean_evals,repeats";
pub const TRAJECTORY_HEADER: &str = "evals_in_units,best_f";

/// Ten significant digits in scientific notation; `inf`/`-inf`/`NaN` as Rust
/// prints them, which `f64::from_str` reads back.
pub fn fmt_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.9e}")
    } else {
        format!("{x}")
    }
}

/// One parsed row of a results file.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub algorithm: String,
    pub k: usize,
    pub mean_f: f64,
    pub std_f: f64,
    pub mean_evals: f64,
    pub repeats: usize,
}

pub fn write_results<W: Write>(res: &AggregateResult, mut out: W) -> Result<()> {
    writeln!(out, "{RESULTS_HEADER}")?;
    for c in &res.cells {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            c.algorithm,
            c.k,
            fmt_real(c.mean_f),
            fmt_real(c.std_f),
            fmt_real(c.mean_g_evals),
            c.repeats
        )?;
    }
    Ok(())
}

pub fn read_results<R: BufRead>(input: R) -> Result<Vec<ResultRow>> {
    let mut lines = input.lines();
    match lines.next().transpose()? {
        Some(h) if h.trim() == RESULTS_HEADER => {}
        other => return Err(Error::usage(format!("unexpected results header {other:?}"))),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let bad = || Error::usage(format!("results line {}: malformed row {line:?}", i + 2));
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 6 {
            return Err(bad());
        }
        rows.push(ResultRow {
            algorithm: parts[0].to_string(),
            k: parts[1].parse().map_err(|_| bad())?,
            mean_f: parts[2].parse().map_err(|_| bad())?,
            std_f: parts[3].parse().map_err(|_| bad())?,
            mean_evals: parts[4].parse().map_err(|_| bad())?,
            repeats: parts[5].parse().map_err(|_| bad())?,
        });
    }
    Ok(rows)
}

/// Writes `(evaluations / unit, best f)` rows. The usual unit is `k·n`, the
/// cost of one distorted-greedy run.
pub fn write_trajectory<W: Write>(run: &RunRecord, unit: u64, mut out: W) -> Result<()> {
    let traj = run
        .trajectory
        .as_ref()
        .ok_or_else(|| Error::usage(format!("run of {} recorded no trajectory", run.algorithm)))?;
    if unit == 0 {
        return Err(Error::usage("trajectory unit must be positive"));
    }
    if traj.windows(2).any(|w| w[1].best_f < w[0].best_f || w[1].evals < w[0].evals) {
        return Err(Error::usage(format!("trajectory of {} is not monotone", run.algorithm)));
    }
    writeln!(out, "{TRAJECTORY_HEADER}")?;
    for p in traj {
        writeln!(out, "{:?},{}", p.evals as f64 / unit as f64, fmt_real(p.best_f))?;
    }
    Ok(())
}

pub fn read_trajectory<R: BufRead>(input: R) -> Result<Vec<(f64, f64)>> {
    let mut lines = input.lines();
    match lines.next().transpose()? {
        Some(h) if h.trim() == TRAJECTORY_HEADER => {}
        other => return Err(Error::usage(format!("unexpected trajectory header {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let line = line?;
            let bad = || Error::usage(format!("trajectory line {}: malformed row {line:?}", i + 2));
            let (a, b) = line.split_once(',').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        })
        .collect()
}

/// File-name-safe form of an algorithm name: `sdg(0.1)` becomes `sdg_0.1`.
pub fn file_stem(algorithm: &str) -> String {
    algorithm
        .chars()
        .filter_map(|c| match c {
            '(' => Some('_'),
            ')' => None,
            c if c.is_ascii_alphanumeric() || c == '.' || c == '_' || c == '-' => Some(c),
            _ => Some('_'),
        })
        .collect()
}
