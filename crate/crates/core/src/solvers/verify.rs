//! Checks of the approximation guarantees against exact optima.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{brute_force_opt, default_iterations, distorted_greedy, gsemo};
use crate::error::{Error, Result};
use crate::objectives::{synthetic_instance, SyntheticKind};
use crate::problem::{Evaluation, ProblemInstance, Subset};

/// Slack allowed on every guarantee comparison.
pub const GUARANTEE_TOL: f64 = 1e-9;

/// `(1 - e^{-γ}) g(X*) - c(X*)`.
pub fn guarantee_target(gamma: f64, opt: &Evaluation) -> f64 {
    (1.0 - (-gamma).exp()) * opt.g - opt.c
}

pub fn meets_guarantee(f: f64, gamma: f64, opt: &Evaluation) -> bool {
    f >= guarantee_target(gamma, opt) - GUARANTEE_TOL
}

/// Lower bound on the best single-item `f1` gain from `x`:
/// `(γ/k)(1 - γ/k)^(k-|x|-1) g(X*) + (1/k)(c(V) - c(X*))`.
pub fn single_item_gain_bound(inst: &ProblemInstance, size: usize, opt: &Evaluation) -> f64 {
    let k = inst.k() as f64;
    let gamma = inst.gamma();
    let expo = inst.k() as i32 - size as i32 - 1;
    (gamma / k) * (1.0 - gamma / k).powi(expo) * opt.g + (inst.cost().total() - opt.c) / k
}

/// Best `f1(x ∪ {v}) - f1(x)` over `v ∉ x`, by enumeration.
pub fn best_single_item_gain(inst: &ProblemInstance, x: &Subset) -> Option<(usize, f64)> {
    let base = inst.f1_of(&inst.evaluate(x));
    (0..inst.n())
        .filter(|v| !x.contains(*v))
        .map(|v| (v, inst.f1_of(&inst.evaluate(&x.with(v))) - base))
        .fold(None, |best, (v, gain)| match best {
            Some((_, b)) if b >= gain => best,
            _ => Some((v, gain)),
        })
}

/// Largest budget used by [`random_check_instance`].
pub const CHECK_MAX_K: usize = 5;

/// A small seeded instance for guarantee checks: the family is drawn from
/// [`SyntheticKind::ALL`] unless given, `k` uniformly from `1..=min(5, n)`,
/// and `γ` is exact.
pub fn random_check_instance(n: usize, seed: u64, kind: Option<SyntheticKind>) -> Result<ProblemInstance> {
    if n == 0 || n > crate::objectives::GAMMA_MAX_N {
        return Err(Error::Capacity {
            what: "guarantee check",
            max: crate::objectives::GAMMA_MAX_N,
            n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = kind.unwrap_or(SyntheticKind::ALL[rng.gen_range(0..SyntheticKind::ALL.len())]);
    let k = rng.gen_range(1..=n.min(CHECK_MAX_K));
    synthetic_instance(kind, n, k, rng.gen())
}

/// Outcome of checking both algorithms on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct GuaranteeCheck {
    pub opt: Evaluation,
    pub target: f64,
    pub dg_f: f64,
    pub dg_ok: bool,
    /// `(best f, meets guarantee)` per GSEMO seed.
    pub gsemo: Vec<(f64, bool)>,
}

/// Brute-forces the optimum, then runs distorted greedy once and GSEMO for
/// `iteration_multiplier · ⌈e k² n⌉` iterations per seed.
pub fn check_guarantees(inst: &ProblemInstance, gsemo_seeds: &[u64], iteration_multiplier: u64) -> Result<GuaranteeCheck> {
    let (xstar, _) = brute_force_opt(inst)?;
    let opt = inst.evaluate(&xstar);
    let gamma = inst.gamma();
    let dg_f = distorted_greedy(&inst.fork()).best_f;
    let iterations = iteration_multiplier * default_iterations(inst.n(), inst.k());
    let gsemo = gsemo_seeds
        .iter()
        .map(|&s| {
            let f = gsemo(&inst.fork(), iterations, s).best_f;
            (f, meets_guarantee(f, gamma, &opt))
        })
        .collect();
    Ok(GuaranteeCheck {
        target: guarantee_target(gamma, &opt),
        opt,
        dg_f,
        dg_ok: meets_guarantee(dg_f, gamma, &opt),
        gsemo,
    })
}

/// Pass counts over a batch of random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifySummary {
    pub trials: usize,
    pub dg_pass: usize,
    pub gsemo_pass: usize,
}

impl VerifySummary {
    /// Distorted greedy must always pass; GSEMO in at least 95% of trials.
    pub fn passed(&self) -> bool {
        self.dg_pass == self.trials && self.gsemo_pass * 100 >= self.trials * 95
    }
}

/// `trials` instances of size `n`, one GSEMO run each at ten times the
/// default budget. Trial `t` uses seeds derived from `seed` and `t` only.
pub fn run_verification(n: usize, trials: usize, seed: u64, kind: Option<SyntheticKind>) -> Result<VerifySummary> {
    let mut summary = VerifySummary {
        trials,
        ..VerifySummary::default()
    };
    for t in 0..trials as u64 {
        let trial_seed = seed.wrapping_add(t.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let inst = random_check_instance(n, trial_seed, kind)?;
        let check = check_guarantees(&inst, &[trial_seed ^ 0x5eed], 10)?;
        summary.dg_pass += check.dg_ok as usize;
        summary.gsemo_pass += check.gsemo[0].1 as usize;
    }
    Ok(summary)
}
