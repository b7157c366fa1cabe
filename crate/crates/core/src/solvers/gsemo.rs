//! GSEMO on `max (f1(x), -|x|)`.
//!
//! Each iteration picks a parent uniformly from the archive, flips every bit
//! independently with probability `1/n`, and inserts the offspring unless some
//! member strictly dominates it; members the offspring weakly dominates are
//! dropped. The archive therefore stays pairwise incomparable and holds at
//! most one member per cardinality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use super::record::{RunRecord, TrajectoryPoint};
use crate::problem::{compare, BiValue, Dominance, Evaluation, ProblemInstance, Subset};

/// `⌈e · k² · n⌉`, the benchmark iteration budget.
pub fn default_iterations(n: usize, k: usize) -> u64 {
    (std::f64::consts::E * (k * k) as f64 * n as f64).ceil() as u64
}

#[derive(Debug, Clone)]
pub struct Individual {
    pub x: Subset,
    pub value: BiValue,
    pub eval: Evaluation,
}

impl Individual {
    pub fn f(&self) -> f64 {
        self.eval.f()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOutcome {
    /// Some member strictly dominates the offspring.
    Rejected,
    /// Offspring archived after removing `removed` weakly dominated members.
    Inserted { removed: usize },
}

/// Archive of mutually incomparable individuals.
#[derive(Debug, Clone, Default)]
pub struct Population {
    members: Vec<Individual>,
}

impl Population {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn insert(&mut self, ind: Individual) -> InsertOutcome {
        if self.members.iter().any(|z| z.value.strictly_dominates(&ind.value)) {
            return InsertOutcome::Rejected;
        }
        let before = self.members.len();
        self.members.retain(|z| !ind.value.weakly_dominates(&z.value));
        let removed = before - self.members.len();
        self.members.push(ind);
        InsertOutcome::Inserted { removed }
    }

    /// Member with the largest `f` among those with `|x| <= k` (first on ties).
    pub fn best_feasible(&self, k: usize) -> Option<&Individual> {
        self.members
            .iter()
            .filter(|m| m.x.cardinality() <= k)
            .fold(None, |best: Option<&Individual>, m| match best {
                Some(b) if b.f() >= m.f() => Some(b),
                _ => Some(m),
            })
    }

    pub fn by_size(&self, size: usize) -> Option<&Individual> {
        self.members.iter().find(|m| m.x.cardinality() == size)
    }

    /// Checks pairwise incomparability, one member per size, and `|P| <= n+1`.
    pub fn check_invariants(&self, n: usize) -> Result<(), String> {
        if self.members.len() > n + 1 {
            return Err(format!("population size {} exceeds n + 1 = {}", self.members.len(), n + 1));
        }
        let mut seen = vec![false; n + 1];
        for (i, a) in self.members.iter().enumerate() {
            let s = a.x.cardinality();
            if seen[s] {
                return Err(format!("two members with cardinality {s}"));
            }
            seen[s] = true;
            for b in &self.members[i + 1..] {
                if compare(&a.value, &b.value) != Dominance::Incomparable {
                    return Err(format!("members {:?} and {:?} are comparable", a.value, b.value));
                }
            }
        }
        Ok(())
    }
}

/// Where the first solution comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Init {
    /// A uniformly random bit vector.
    #[default]
    UniformRandom,
    /// The all-zeros vector.
    Empty,
}

#[derive(Debug, Clone)]
pub struct GsemoConfig {
    pub iterations: u64,
    pub init: Init,
    /// Also sample the trajectory every this many evaluations.
    pub trajectory_stride: Option<u64>,
}

impl GsemoConfig {
    pub fn new(iterations: u64) -> Self {
        GsemoConfig {
            iterations,
            init: Init::UniformRandom,
            trajectory_stride: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepOutcome {
    pub outcome: InsertOutcome,
    pub offspring_size: usize,
    pub improved_best: bool,
}

/// A GSEMO run that can be advanced one iteration at a time.
pub struct GsemoRun<'a> {
    inst: &'a ProblemInstance,
    rng: ChaCha8Rng,
    flip: Geometric,
    population: Population,
    best: Option<(Subset, f64)>,
    iterations: u64,
    start_evals: u64,
    trajectory: Vec<TrajectoryPoint>,
    stride: Option<u64>,
    seed: u64,
}

impl<'a> GsemoRun<'a> {
    pub fn new(inst: &'a ProblemInstance, seed: u64, init: Init) -> Self {
        let n = inst.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x0 = match init {
            Init::UniformRandom => Subset::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))),
            Init::Empty => Subset::empty(n),
        };
        let mut run = GsemoRun {
            inst,
            rng,
            flip: Geometric::new(1.0 / n as f64).expect("1/n is a valid probability"),
            population: Population::new(),
            best: None,
            iterations: 0,
            start_evals: inst.g_evals(),
            trajectory: Vec::new(),
            stride: None,
            seed,
        };
        let ind = run.evaluate(x0);
        run.population.insert(ind);
        run
    }

    pub fn with_trajectory_stride(mut self, stride: Option<u64>) -> Self {
        self.stride = stride.filter(|s| *s > 0);
        self
    }

    pub fn population(&self) -> &Population {
        &self.population
    }

    pub fn best(&self) -> Option<&(Subset, f64)> {
        self.best.as_ref()
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    pub fn g_evals(&self) -> u64 {
        self.inst.g_evals() - self.start_evals
    }

    pub fn step(&mut self) -> StepOutcome {
        let parent = self.rng.gen_range(0..self.population.len());
        let mut child = self.population.members()[parent].x.clone();
        self.mutate(&mut child);
        let best_before = self.best.as_ref().map(|b| b.1);
        let ind = self.evaluate(child);
        let offspring_size = ind.x.cardinality();
        let outcome = self.population.insert(ind);
        self.iterations += 1;
        StepOutcome {
            outcome,
            offspring_size,
            improved_best: self.best.as_ref().map(|b| b.1) != best_before,
        }
    }

    pub fn run(&mut self, iterations: u64) {
        for _ in 0..iterations {
            self.step();
        }
    }

    pub fn finish(mut self) -> RunRecord {
        let g_evals = self.g_evals();
        if let Some((_, f)) = &self.best {
            if self.trajectory.last().is_none_or(|p| p.evals != g_evals) {
                self.trajectory.push(TrajectoryPoint { evals: g_evals, best_f: *f });
            }
        }
        let final_population_best = self
            .population
            .best_feasible(self.inst.k())
            .map(|m| (m.x.clone(), m.f()));
        let (best_feasible, best_f) = match self.best {
            Some((x, f)) => (Some(x), f),
            None => (None, f64::NEG_INFINITY),
        };
        RunRecord {
            best_feasible,
            best_f,
            g_evals,
            iterations: self.iterations,
            trajectory: Some(self.trajectory),
            seed: Some(self.seed),
            final_population_best,
            ..RunRecord::new("gsemo")
        }
    }

    /// Flips each bit with probability `1/n` by jumping geometric gaps.
    fn mutate(&mut self, x: &mut Subset) {
        let n = x.len() as u64;
        let mut pos = self.flip.sample(&mut self.rng);
        while pos < n {
            x.toggle(pos as usize);
            pos = pos.saturating_add(1).saturating_add(self.flip.sample(&mut self.rng));
        }
    }

    fn evaluate(&mut self, x: Subset) -> Individual {
        let eval = self.inst.evaluate(&x);
        let value = self.inst.bivalue_of(&eval);
        if x.cardinality() <= self.inst.k() {
            let f = eval.f();
            if self.best.as_ref().is_none_or(|(_, b)| f > *b) {
                self.best = Some((x.clone(), f));
                self.trajectory.push(TrajectoryPoint {
                    evals: self.g_evals(),
                    best_f: f,
                });
            }
        }
        if let (Some(stride), Some((_, f))) = (self.stride, &self.best) {
            let e = self.g_evals();
            if e.is_multiple_of(stride) && self.trajectory.last().is_none_or(|p| p.evals != e) {
                self.trajectory.push(TrajectoryPoint { evals: e, best_f: *f });
            }
        }
        Individual { x, value, eval }
    }
}

/// GSEMO from a uniformly random start for `iterations` iterations.
pub fn gsemo(inst: &ProblemInstance, iterations: u64, seed: u64) -> RunRecord {
    gsemo_with(inst, &GsemoConfig::new(iterations), seed)
}

pub fn gsemo_with(inst: &ProblemInstance, cfg: &GsemoConfig, seed: u64) -> RunRecord {
    let mut run = GsemoRun::new(inst, seed, cfg.init).with_trajectory_stride(cfg.trajectory_stride);
    run.run(cfg.iterations);
    run.finish()
}
