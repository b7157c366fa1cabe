//! Flat `key = value` experiment configuration.
//!
//! ```text
//! # housing replication
//! application = bed            # bed | dvc | synthetic
//! dataset = ../data/housing.csv
//! sigma_multiplier = 7         # bed: σ = sigma_multiplier · d
//! sigma_seed = 0               # bed: seed for Σ = A D Aᵀ
//! algorithms = gsemo, dg, sdg(0.1), sdg(0.2)
//! budgets = 5, 10, 15, 20
//! repeats = 20
//! base_seed = 1
//! gsemo_iterations = auto      # auto = ⌈e k² n⌉; auto*10; or a fixed count
//! gsemo_init = random          # random | empty
//! trajectory_stride = 10000    # optional extra trajectory samples
//! jobs = 4                     # optional worker cap
//! ```
//!
//! DVC uses `edge_format = edge_list | undirected_edge_list` and optional
//! `vertex_cost`; synthetic uses `kind`, `n` and `instance_seed`. Relative
//! dataset paths resolve against the config file's directory. Unknown keys
//! are errors.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::objectives::{EdgeFormat, SyntheticKind};
use crate::solvers::{default_iterations, Init};

#[derive(Debug, Clone, PartialEq)]
pub enum Application {
    Bed {
        dataset: PathBuf,
        sigma_multiplier: f64,
        sigma_seed: u64,
    },
    Dvc {
        dataset: PathBuf,
        format: EdgeFormat,
        /// Replaces the degree-based cost rule with a constant.
        vertex_cost: Option<f64>,
    },
    Synthetic {
        kind: SyntheticKind,
        n: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlgorithmSpec {
    Gsemo,
    Dg,
    Sdg(f64),
    PlainGreedy,
}

impl AlgorithmSpec {
    pub fn is_deterministic(&self) -> bool {
        matches!(self, AlgorithmSpec::Dg | AlgorithmSpec::PlainGreedy)
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmSpec::Gsemo => write!(f, "gsemo"),
            AlgorithmSpec::Dg => write!(f, "dg"),
            AlgorithmSpec::Sdg(eps) => write!(f, "sdg({eps})"),
            AlgorithmSpec::PlainGreedy => write!(f, "greedy"),
        }
    }
}

impl FromStr for AlgorithmSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "gsemo" => return Ok(AlgorithmSpec::Gsemo),
            "dg" => return Ok(AlgorithmSpec::Dg),
            "greedy" | "plain_greedy" => return Ok(AlgorithmSpec::PlainGreedy),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix("sdg(").and_then(|r| r.strip_suffix(')')) {
            let eps: f64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad epsilon in {s:?}")))?;
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::Config(format!("epsilon in {s:?} must lie in (0, 1)")));
            }
            return Ok(AlgorithmSpec::Sdg(eps));
        }
        Err(Error::Config(format!(
            "unknown algorithm {s:?} (expected gsemo, dg, sdg(<eps>) or greedy)"
        )))
    }
}

/// GSEMO iteration budget per `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IterationRule {
    /// `multiplier · ⌈e k² n⌉`.
    Auto { multiplier: u64 },
    Fixed(u64),
}

impl Default for IterationRule {
    fn default() -> Self {
        IterationRule::Auto { multiplier: 1 }
    }
}

impl IterationRule {
    pub fn iterations(&self, n: usize, k: usize) -> u64 {
        match *self {
            IterationRule::Auto { multiplier } => multiplier * default_iterations(n, k),
            IterationRule::Fixed(t) => t,
        }
    }
}

impl FromStr for IterationRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "auto" {
            return Ok(IterationRule::default());
        }
        if let Some(m) = s.strip_prefix("auto*") {
            let multiplier = m
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad multiplier in gsemo_iterations = {s:?}")))?;
            return Ok(IterationRule::Auto { multiplier });
        }
        s.parse()
            .map(IterationRule::Fixed)
            .map_err(|_| Error::Config(format!("gsemo_iterations must be auto, auto*<m> or an integer, got {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub application: Application,
    pub algorithms: Vec<AlgorithmSpec>,
    pub budgets: Vec<usize>,
    pub repeats: usize,
    pub base_seed: u64,
    pub gsemo_iterations: IterationRule,
    pub gsemo_init: Init,
    pub trajectory_stride: Option<u64>,
    pub jobs: Option<usize>,
}

const KNOWN_KEYS: &[&str] = &[
    "application",
    "dataset",
    "sigma_multiplier",
    "sigma_seed",
    "edge_format",
    "vertex_cost",
    "kind",
    "n",
    "instance_seed",
    "algorithms",
    "budgets",
    "repeats",
    "base_seed",
    "gsemo_iterations",
    "gsemo_init",
    "trajectory_stride",
    "jobs",
];

fn parse_value<T: FromStr>(key: &str, raw: &str) -> Result<T> {
    raw.trim()
        .parse()
        .map_err(|_| Error::Config(format!("invalid value {raw:?} for key `{key}`")))
}

/// Splits on commas that are not inside parentheses.
fn split_list(raw: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in raw.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(raw[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(raw[start..].trim());
    out.into_iter().filter(|s| !s.is_empty()).collect()
}

impl ExperimentConfig {
    /// Parses config text; relative dataset paths resolve against `base_dir`.
    pub fn parse(text: &str, base_dir: &Path) -> Result<Self> {
        let mut kv: BTreeMap<String, String> = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(Error::Config(format!("line {}: unknown key `{key}`", lineno + 1)));
            }
            if kv.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(Error::Config(format!("line {}: duplicate key `{key}`", lineno + 1)));
            }
        }
        let get = |key: &str| kv.get(key).map(String::as_str);
        let require = |key: &str| get(key).ok_or_else(|| Error::Config(format!("missing required key `{key}`")));
        let dataset = || -> Result<PathBuf> {
            let p = PathBuf::from(require("dataset")?);
            Ok(if p.is_relative() { base_dir.join(p) } else { p })
        };

        let application = match require("application")? {
            "bed" => Application::Bed {
                dataset: dataset()?,
                sigma_multiplier: get("sigma_multiplier").map_or(Ok(7.0), |v| parse_value("sigma_multiplier", v))?,
                sigma_seed: get("sigma_seed").map_or(Ok(0), |v| parse_value("sigma_seed", v))?,
            },
            "dvc" => Application::Dvc {
                dataset: dataset()?,
                format: get("edge_format").map_or(Ok(EdgeFormat::EdgeList), |v| {
                    v.parse().map_err(|_| Error::Config(format!("invalid value {v:?} for key `edge_format`")))
                })?,
                vertex_cost: get("vertex_cost").map(|v| parse_value("vertex_cost", v)).transpose()?,
            },
            "synthetic" => Application::Synthetic {
                kind: require("kind")?
                    .parse()
                    .map_err(|e: Error| Error::Config(e.to_string()))?,
                n: parse_value("n", require("n")?)?,
                seed: get("instance_seed").map_or(Ok(0), |v| parse_value("instance_seed", v))?,
            },
            other => {
                return Err(Error::Config(format!(
                    "invalid value {other:?} for key `application` (expected bed, dvc or synthetic)"
                )))
            }
        };

        let algorithms = split_list(require("algorithms")?)
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<AlgorithmSpec>>>()?;
        let budgets = split_list(require("budgets")?)
            .into_iter()
            .map(|b| parse_value::<usize>("budgets", b))
            .collect::<Result<Vec<_>>>()?;
        let repeats = get("repeats").map_or(Ok(20), |v| parse_value("repeats", v))?;
        let gsemo_init = match get("gsemo_init").unwrap_or("random") {
            "random" => Init::UniformRandom,
            "empty" | "zeros" => Init::Empty,
            other => return Err(Error::Config(format!("invalid value {other:?} for key `gsemo_init`"))),
        };

        let cfg = ExperimentConfig {
            application,
            algorithms,
            budgets,
            repeats,
            base_seed: get("base_seed").map_or(Ok(0), |v| parse_value("base_seed", v))?,
            gsemo_iterations: get("gsemo_iterations").map_or(Ok(IterationRule::default()), str::parse)?,
            gsemo_init,
            trajectory_stride: get("trajectory_stride").map(|v| parse_value("trajectory_stride", v)).transpose()?,
            jobs: get("jobs").map(|v| parse_value("jobs", v)).transpose()?,
        };
        cfg.validate_shape()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    fn validate_shape(&self) -> Result<()> {
        if self.repeats < 1 {
            return Err(Error::Config("`repeats` must be at least 1".into()));
        }
        if self.budgets.is_empty() {
            return Err(Error::Config("`budgets` must list at least one k".into()));
        }
        if self.budgets.contains(&0) {
            return Err(Error::Config("every budget must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("`algorithms` must list at least one algorithm".into()));
        }
        Ok(())
    }

    /// Checks budgets against the ground-set size once the instance is known.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        if let Some(k) = self.budgets.iter().find(|k| **k > n) {
            return Err(Error::Config(format!("budget k = {k} exceeds ground-set size n = {n}")));
        }
        Ok(())
    }
}
