//! The `gsemo-submod` command line: `solve`, `bench`, `verify` and `gamma`.
//!
//! Exit codes are 0 on success, 1 for invalid input and 2 for runtime or
//! capacity failures. Reports go to stdout; CSV only to files under
//! `--out-dir`. Seeds default to [`DEFAULT_SEED`]; `--seed random` draws one
//! from the OS and echoes it.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::harness::{self, file_stem, AlgorithmSpec, write_results, write_trajectory, ExperimentConfig};
use crate::objectives::{
    bed::load_feature_table, bed::standardize, brute_force_gamma, load_edge_list, synthetic_problem, BedProblem,
    EdgeFormat, SyntheticKind, GAMMA_MAX_N,
};
use crate::problem::{GOracle, ModularCost, ProblemInstance};
use crate::solvers::{
    brute_force_opt, default_iterations, distorted_greedy, gsemo_with, plain_greedy, stochastic_distorted_greedy,
    verify::run_verification, GsemoConfig, Init, RunRecord,
};

pub const DEFAULT_SEED: u64 = 20_200_817;

#[derive(Debug, Parser)]
#[command(name = "gsemo-submod", version, about = "Maximize g - c under a size constraint")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm on one instance and report the chosen subset.
    Solve(SolveArgs),
    /// Run an experiment config and write CSV results.
    Bench(BenchArgs),
    /// Check the approximation guarantees on random small instances.
    Verify(VerifyArgs),
    /// Report the submodularity ratio of an instance.
    Gamma(GammaArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum App {
    Bed,
    Dvc,
    Synthetic,
}

#[derive(Debug, Clone, Args)]
pub struct InstanceArgs {
    #[arg(long, value_enum)]
    pub app: App,
    /// Feature CSV (bed).
    #[arg(long)]
    pub features: Option<PathBuf>,
    /// Edge list (dvc).
    #[arg(long)]
    pub edges: Option<PathBuf>,
    #[arg(long, default_value = "edge_list")]
    pub edge_format: String,
    /// Constant per-vertex cost replacing `1 + max(d(v) - 6, 0)` (dvc).
    #[arg(long)]
    pub vertex_cost: Option<f64>,
    /// Noise level as a multiple of the feature dimension (bed).
    #[arg(long, default_value_t = 7.0)]
    pub sigma_multiplier: f64,
    /// Seed for the prior covariance (bed).
    #[arg(long, default_value_t = 0)]
    pub sigma_seed: u64,
    /// Generator family (synthetic).
    #[arg(long)]
    pub kind: Option<String>,
    /// Ground-set size (synthetic).
    #[arg(long)]
    pub n: Option<usize>,
    /// Generator seed (synthetic).
    #[arg(long, default_value_t = 0)]
    pub instance_seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Gsemo,
    Dg,
    Sdg,
    Greedy,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitArg {
    Random,
    Empty,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "gsemo")]
    pub algorithm: Algorithm,
    /// Sampling parameter for sdg.
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    /// GSEMO iterations; defaults to ⌈e k² n⌉.
    #[arg(long)]
    pub iterations: Option<u64>,
    #[arg(long, value_enum, default_value = "random")]
    pub init: InitArg,
    /// An integer, or `random`.
    #[arg(long)]
    pub seed: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Worker cap; overrides `jobs` in the config.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long)]
    pub seed: Option<String>,
    /// Restrict to one generator family.
    #[arg(long)]
    pub kind: Option<String>,
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Enumerate the exact ratio only when `n` is at most this.
    #[arg(long, default_value_t = GAMMA_MAX_N)]
    pub n_cap: usize,
}

fn parse_seed(raw: Option<&str>, out: &mut dyn Write) -> Result<u64> {
    match raw {
        None => Ok(DEFAULT_SEED),
        Some("random") => {
            let s = rand::random();
            writeln!(out, "seed: {s}")?;
            Ok(s)
        }
        Some(s) => s
            .parse()
            .map_err(|_| Error::usage(format!("--seed must be an integer or `random`, got {s:?}"))),
    }
}

fn parse_kind(raw: Option<&str>) -> Result<Option<SyntheticKind>> {
    raw.map(str::parse).transpose()
}

/// An instance plus, for BED, the analytic ratio bound.
struct Built {
    inst: ProblemInstance,
    gamma_bound: Option<f64>,
}

fn build(args: &InstanceArgs, k: usize) -> Result<Built> {
    match args.app {
        App::Bed => {
            let path = args
                .features
                .as_ref()
                .ok_or_else(|| Error::usage("--app bed needs --features <csv>"))?;
            let table = load_feature_table(path)?;
            let p = BedProblem::from_features(standardize(&table, path)?, args.sigma_multiplier, args.sigma_seed)?;
            Ok(Built {
                gamma_bound: Some(p.gamma),
                inst: p.instance(k)?,
            })
        }
        App::Dvc => {
            let path = args
                .edges
                .as_ref()
                .ok_or_else(|| Error::usage("--app dvc needs --edges <file>"))?;
            let format: EdgeFormat = args.edge_format.parse()?;
            let graph = load_edge_list(path, format)?;
            let inst = match args.vertex_cost {
                None => graph.instance(k)?,
                Some(c) => {
                    let cost = ModularCost::new(vec![c; graph.n()])?;
                    ProblemInstance::new(GOracle::new(graph), cost, k, 1.0)?
                }
            };
            Ok(Built { inst, gamma_bound: None })
        }
        App::Synthetic => {
            let kind = parse_kind(args.kind.as_deref())?
                .ok_or_else(|| Error::usage("--app synthetic needs --kind"))?;
            let n = args.n.ok_or_else(|| Error::usage("--app synthetic needs --n"))?;
            let p = synthetic_problem(kind, n, args.instance_seed)?;
            Ok(Built {
                gamma_bound: p.gamma_bound,
                inst: p.instance(k)?,
            })
        }
    }
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> Result<()> {
    let seed = parse_seed(args.seed.as_deref(), out)?;
    let inst = build(&args.instance, args.k)?.inst;
    let before = inst.g_evals();
    let record: RunRecord = match args.algorithm {
        Algorithm::Gsemo => {
            let cfg = GsemoConfig {
                iterations: args.iterations.unwrap_or_else(|| default_iterations(inst.n(), inst.k())),
                init: match args.init {
                    InitArg::Random => Init::UniformRandom,
                    InitArg::Empty => Init::Empty,
                },
                trajectory_stride: None,
            };
            gsemo_with(&inst, &cfg, seed)
        }
        Algorithm::Dg => distorted_greedy(&inst),
        Algorithm::Sdg => stochastic_distorted_greedy(&inst, args.epsilon, seed)?,
        Algorithm::Greedy => plain_greedy(&inst),
        Algorithm::Brute => {
            let (x, f) = brute_force_opt(&inst)?;
            RunRecord {
                best_feasible: Some(x),
                best_f: f,
                g_evals: inst.g_evals() - before,
                ..RunRecord::new("brute")
            }
        }
    };
    writeln!(out, "algorithm: {}", record.algorithm)?;
    writeln!(out, "n: {}  k: {}", inst.n(), inst.k())?;
    match &record.best_feasible {
        Some(x) => {
            // uncounted: the report should not perturb g_evals
            let g = inst.oracle().function().value(x);
            let c = inst.cost().of(x);
            writeln!(out, "subset: {:?}", x.to_indices())?;
            writeln!(out, "f: {}", g - c)?;
            writeln!(out, "g: {g}")?;
            writeln!(out, "c: {c}")?;
        }
        None => writeln!(out, "subset: none (no feasible solution found)")?,
    }
    writeln!(out, "gamma: {}", inst.gamma())?;
    writeln!(out, "g_evals: {}", record.g_evals)?;
    Ok(())
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    let mut cfg = ExperimentConfig::from_file(&args.config)?;
    if args.jobs.is_some() {
        cfg.jobs = args.jobs;
    }
    let res = harness::run_experiment(&cfg)?;
    let traj_dir = args.out_dir.join("trajectories");
    fs::create_dir_all(&traj_dir)?;
    let results_path = args.out_dir.join("results.csv");
    let mut w = BufWriter::new(File::create(&results_path)?);
    write_results(&res, &mut w)?;
    w.flush()?;
    let mut files = 0;
    for cell in &res.cells {
        let unit = (cell.k * res.n) as u64;
        let runs = if cell.algorithm.parse::<AlgorithmSpec>()?.is_deterministic() { &cell.runs[..1] } else { &cell.runs[..] };
        for (r, run) in runs.iter().enumerate() {
            let path = traj_dir.join(format!("{}_k{}_r{}.csv", file_stem(&cell.algorithm), cell.k, r));
            let mut w = BufWriter::new(File::create(&path)?);
            write_trajectory(run, unit, &mut w)?;
            w.flush()?;
            files += 1;
        }
    }
    writeln!(out, "instance: n = {}", res.n)?;
    writeln!(out, "{:<10} {:>4} {:>14} {:>12} {:>14}", "algorithm", "k", "mean_f", "std_f", "mean_evals")?;
    for c in &res.cells {
        writeln!(
            out,
            "{:<10} {:>4} {:>14.6} {:>12.6} {:>14.1}",
            c.algorithm, c.k, c.mean_f, c.std_f, c.mean_g_evals
        )?;
    }
    writeln!(out, "wrote {} and {files} trajectory files", results_path.display())?;
    Ok(())
}

/// Returns whether the guarantees held.
fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let seed = parse_seed(args.seed.as_deref(), out)?;
    let s = run_verification(args.n, args.trials, seed, parse_kind(args.kind.as_deref())?)?;
    writeln!(out, "trials: {}", s.trials)?;
    writeln!(out, "distorted greedy: {}/{} passed (required: all)", s.dg_pass, s.trials)?;
    writeln!(out, "gsemo: {}/{} passed (required: 95%)", s.gsemo_pass, s.trials)?;
    let ok = s.passed();
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
    Ok(ok)
}

fn cmd_gamma(args: &GammaArgs, out: &mut dyn Write) -> Result<()> {
    let built = build(&args.instance, 1)?;
    let n = built.inst.n();
    let cap = args.n_cap.min(GAMMA_MAX_N);
    writeln!(out, "n: {n}")?;
    if let Some(b) = built.gamma_bound {
        writeln!(out, "analytic lower bound: {b}")?;
    }
    if n <= cap {
        let exact = brute_force_gamma(&built.inst.oracle().fork())?;
        writeln!(out, "exact gamma: {exact}")?;
        if let Some(b) = built.gamma_bound {
            if b > exact + 1e-9 {
                return Err(Error::invalid(format!("bound {b} exceeds exact ratio {exact}")));
            }
            writeln!(out, "bound <= exact: ok")?;
        }
    } else if built.gamma_bound.is_none() {
        return Err(Error::Capacity {
            what: "exact submodularity ratio (no analytic bound for this application)",
            max: cap,
            n,
        });
    } else {
        writeln!(out, "exact gamma: skipped (n = {n} exceeds cap {cap})")?;
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the subcommand, writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a, out).map(|_| true),
        Command::Bench(a) => cmd_bench(a, out).map(|_| true),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Gamma(a) => cmd_gamma(a, out).map(|_| true),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_validation() {
                1
            } else {
                2
            }
        }
    }
}
