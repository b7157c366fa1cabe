//! Repeated runs over a grid of algorithms and budgets.

use rayon::prelude::*;

use super::config::{AlgorithmSpec, Application, ExperimentConfig};
use crate::error::{Error, Result};
use crate::objectives::{load_bed_problem, load_edge_list, synthetic_problem};
use crate::problem::{GOracle, ModularCost, ProblemInstance};
use crate::solvers::{distorted_greedy, gsemo_with, plain_greedy, stochastic_distorted_greedy, GsemoConfig, RunRecord};

/// Mean and spread of one `(algorithm, k)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub algorithm: String,
    pub k: usize,
    pub mean_f: f64,
    /// Sample standard deviation (`n - 1` denominator); 0 for one repeat.
    /// `mean_f` is `-inf` and this is `inf` when a run found nothing feasible.
    pub std_f: f64,
    pub mean_g_evals: f64,
    pub repeats: usize,
    /// One record per repeat. Deterministic algorithms run once and the
    /// record is replicated.
    pub runs: Vec<RunRecord>,
}

impl CellSummary {
    fn from_runs(algorithm: String, k: usize, runs: Vec<RunRecord>) -> Self {
        let m = runs.len() as f64;
        let mean_f = runs.iter().map(|r| r.best_f).sum::<f64>() / m;
        let std_f = if !mean_f.is_finite() {
            f64::INFINITY
        } else if runs.len() > 1 {
            (runs.iter().map(|r| (r.best_f - mean_f).powi(2)).sum::<f64>() / (m - 1.0)).sqrt()
        } else {
            0.0
        };
        let mean_g_evals = runs.iter().map(|r| r.g_evals as f64).sum::<f64>() / m;
        CellSummary {
            algorithm,
            k,
            mean_f,
            std_f,
            mean_g_evals,
            repeats: runs.len(),
            runs,
        }
    }

    /// Standard error of the mean.
    pub fn std_err(&self) -> f64 {
        self.std_f / (self.repeats as f64).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateResult {
    /// Sorted by algorithm name, then `k`.
    pub cells: Vec<CellSummary>,
    pub n: usize,
}

impl AggregateResult {
    pub fn cell(&self, algorithm: &str, k: usize) -> Option<&CellSummary> {
        self.cells.iter().find(|c| c.algorithm == algorithm && c.k == k)
    }
}

/// Builds the configured instance with `k = 1`; callers rebudget it.
pub fn build_base_instance(app: &Application) -> Result<ProblemInstance> {
    match app {
        Application::Bed {
            dataset,
            sigma_multiplier,
            sigma_seed,
        } => load_bed_problem(dataset, *sigma_multiplier, *sigma_seed)?.instance(1),
        Application::Dvc {
            dataset,
            format,
            vertex_cost,
        } => {
            let graph = load_edge_list(dataset, *format)?;
            match vertex_cost {
                None => graph.instance(1),
                Some(c) => {
                    let cost = ModularCost::new(vec![*c; graph.n()])?;
                    ProblemInstance::new(GOracle::new(graph), cost, 1, 1.0)
                }
            }
        }
        Application::Synthetic { kind, n, seed } => synthetic_problem(*kind, *n, *seed)?.instance(1),
    }
}

/// FNV-1a, fixed across platforms and releases.
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Seed for repeat `r` of `alg` at budget `k`.
pub fn run_seed(base_seed: u64, alg: &AlgorithmSpec, k: usize, r: usize) -> u64 {
    base_seed ^ fnv1a(format!("{alg}|{k}|{r}").as_bytes())
}

/// One run of `alg` on a fresh fork of `inst`.
pub fn run_once(cfg: &ExperimentConfig, alg: &AlgorithmSpec, inst: &ProblemInstance, seed: u64) -> Result<RunRecord> {
    let inst = inst.fork();
    Ok(match alg {
        AlgorithmSpec::Gsemo => {
            let gcfg = GsemoConfig {
                iterations: cfg.gsemo_iterations.iterations(inst.n(), inst.k()),
                init: cfg.gsemo_init,
                trajectory_stride: cfg.trajectory_stride,
            };
            gsemo_with(&inst, &gcfg, seed)
        }
        AlgorithmSpec::Dg => distorted_greedy(&inst),
        AlgorithmSpec::Sdg(eps) => stochastic_distorted_greedy(&inst, *eps, seed)?,
        AlgorithmSpec::PlainGreedy => plain_greedy(&inst),
    })
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<AggregateResult> {
    let base = build_base_instance(&cfg.application)?;
    run_experiment_on(cfg, &base)
}

/// Runs the grid on an already built instance. Output is independent of
/// the worker count.
pub fn run_experiment_on(cfg: &ExperimentConfig, base: &ProblemInstance) -> Result<AggregateResult> {
    cfg.validate_for(base.n())?;
    let mut tasks = Vec::new();
    for alg in &cfg.algorithms {
        for &k in &cfg.budgets {
            let reps = if alg.is_deterministic() { 1 } else { cfg.repeats };
            for r in 0..reps {
                tasks.push((*alg, k, r));
            }
        }
    }
    let instances = cfg
        .budgets
        .iter()
        .map(|&k| base.with_budget(k).map(|i| (k, i)))
        .collect::<Result<Vec<_>>>()?;
    let inst_for = |k: usize| &instances.iter().find(|(kk, _)| *kk == k).expect("budget built").1;

    let work = || -> Result<Vec<RunRecord>> {
        tasks
            .par_iter()
            .map(|(alg, k, r)| run_once(cfg, alg, inst_for(*k), run_seed(cfg.base_seed, alg, *k, *r)))
            .collect()
    };
    let records = match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Config(format!("cannot start {j} workers: {e}")))?
            .install(work)?,
        None => work()?,
    };

    let mut cells: Vec<CellSummary> = Vec::new();
    let mut records = records.into_iter();
    for alg in &cfg.algorithms {
        for &k in &cfg.budgets {
            let runs: Vec<RunRecord> = if alg.is_deterministic() {
                vec![records.next().expect("one record per task"); cfg.repeats]
            } else {
                records.by_ref().take(cfg.repeats).collect()
            };
            cells.push(CellSummary::from_runs(alg.name(), k, runs));
        }
    }
    cells.sort_by(|a, b| a.algorithm.cmp(&b.algorithm).then(a.k.cmp(&b.k)));
    Ok(AggregateResult { cells, n: base.n() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    fn cfg(extra: &str) -> ExperimentConfig {
        let text = format!(
            "application = synthetic\nkind = random_coverage\nn = 10\nalgorithms = gsemo, dg, sdg(0.2)\nbudgets = 2, 3\nrepeats = 3\nbase_seed = 9\n{extra}"
        );
        ExperimentConfig::parse(&text, Path::new(".")).unwrap()
    }

    #[test]
    fn seeds_are_stable_and_distinct() {
        let a = run_seed(1, &AlgorithmSpec::Gsemo, 5, 0);
        assert_eq!(a, run_seed(1, &AlgorithmSpec::Gsemo, 5, 0));
        assert_ne!(a, run_seed(1, &AlgorithmSpec::Gsemo, 5, 1));
        assert_ne!(a, run_seed(1, &AlgorithmSpec::Sdg(0.1), 5, 0));
        assert_eq!(fnv1a(b"a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn cells_sorted_and_replicated() {
        let res = run_experiment(&cfg("")).unwrap();
        let keys: Vec<_> = res.cells.iter().map(|c| (c.algorithm.as_str(), c.k)).collect();
        assert_eq!(
            keys,
            vec![("dg", 2), ("dg", 3), ("gsemo", 2), ("gsemo", 3), ("sdg(0.2)", 2), ("sdg(0.2)", 3)]
        );
        let dg = res.cell("dg", 3).unwrap();
        assert_eq!(dg.runs.len(), 3);
        assert_eq!(dg.std_f, 0.0);
        assert!(res.cells.iter().all(|c| c.repeats == 3));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let a = run_experiment(&cfg("jobs = 1\n")).unwrap();
        let b = run_experiment(&cfg("jobs = 3\n")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sample_std_uses_n_minus_one() {
        let mk = |f: f64| RunRecord {
            best_f: f,
            ..RunRecord::new("x")
        };
        let c = CellSummary::from_runs("x".into(), 1, vec![mk(1.0), mk(2.0), mk(3.0)]);
        assert_eq!(c.mean_f, 2.0);
        assert!((c.std_f - 1.0).abs() < 1e-15);
    }

    #[test]
    fn oversized_budget_rejected() {
        let text = "application = synthetic\nkind = random_modular\nn = 4\nalgorithms = dg\nbudgets = 5\n";
        let c = ExperimentConfig::parse(text, Path::new(".")).unwrap();
        assert!(matches!(run_experiment(&c), Err(Error::Config(_))));
    }
}
