//! Distorted greedy, its stochastic variant, and the undistorted greedy
//! baseline. All three share one round loop and differ only in the per-round
//! weight on the `g` gain and in the candidate set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::record::{RunRecord, TrajectoryPoint};
use crate::error::{Error, Result};
use crate::problem::{ProblemInstance, Subset};

/// `k` rounds; in round `i` pick the candidate maximizing
/// `weight(i) · (g(X ∪ {v}) - g(X)) - c({v})` (smallest index on ties) and add
/// it only if that score is strictly positive.
fn greedy_rounds(
    inst: &ProblemInstance,
    name: &str,
    weight: impl Fn(usize) -> f64,
    mut candidates: impl FnMut(usize) -> Vec<usize>,
) -> RunRecord {
    let n = inst.n();
    let start = inst.g_evals();
    let mut x = Subset::empty(n);
    let mut gx = inst.oracle().query(&x);
    let mut cx = 0.0;
    let mut trajectory = vec![TrajectoryPoint {
        evals: inst.g_evals() - start,
        best_f: gx,
    }];

    for round in 0..inst.k() {
        let w = weight(round);
        let mut best: Option<(f64, usize, f64)> = None;
        for v in candidates(round) {
            let (score, gv) = if x.contains(v) {
                (-inst.cost().item(v), gx)
            } else {
                let gv = inst.oracle().query(&x.with(v));
                (w * (gv - gx) - inst.cost().item(v), gv)
            };
            if best.is_none_or(|(s, _, _)| score > s) {
                best = Some((score, v, gv));
            }
        }
        if let Some((score, v, gv)) = best {
            if score > 0.0 {
                x.insert(v);
                gx = gv;
                cx += inst.cost().item(v);
                trajectory.push(TrajectoryPoint {
                    evals: inst.g_evals() - start,
                    best_f: gx - cx,
                });
            }
        }
    }

    let g_evals = inst.g_evals() - start;
    let best_f = gx - inst.cost().of(&x);
    if trajectory.last().is_some_and(|p| p.evals != g_evals) {
        trajectory.push(TrajectoryPoint { evals: g_evals, best_f });
    }
    RunRecord {
        best_feasible: Some(x),
        best_f,
        g_evals,
        iterations: inst.k() as u64,
        trajectory: Some(trajectory),
        ..RunRecord::new(name)
    }
}

/// Distorted greedy: round `i` weighs the gain by `(1 - γ/k)^(k-i-1)`.
///
/// Deterministic; issues at most `k·n + 1` oracle queries.
pub fn distorted_greedy(inst: &ProblemInstance) -> RunRecord {
    let all: Vec<usize> = (0..inst.n()).collect();
    greedy_rounds(inst, "dg", |i| inst.round_distortion(i), |_| all.clone())
}

/// Per-round sample size `⌈(n/k) ln(1/ε)⌉`.
pub fn sdg_sample_size(n: usize, k: usize, epsilon: f64) -> usize {
    ((n as f64 / k as f64) * (1.0 / epsilon).ln()).ceil() as usize
}

/// Stochastic distorted greedy: each round scans a fresh uniform sample of
/// [`sdg_sample_size`] items drawn with replacement (deduplicated before
/// evaluation).
pub fn stochastic_distorted_greedy(inst: &ProblemInstance, epsilon: f64, seed: u64) -> Result<RunRecord> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::usage(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let n = inst.n();
    let s = sdg_sample_size(n, inst.k(), epsilon);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec = stochastic_distorted_greedy_with_sampler(inst, |_| {
        (0..s).map(|_| rng.gen_range(0..n)).collect()
    });
    rec.algorithm = format!("sdg({epsilon})");
    rec.seed = Some(seed);
    Ok(rec)
}

/// Stochastic distorted greedy with an injected per-round sampler.
/// Returned indices may repeat and come in any order.
pub fn stochastic_distorted_greedy_with_sampler(
    inst: &ProblemInstance,
    mut sampler: impl FnMut(usize) -> Vec<usize>,
) -> RunRecord {
    greedy_rounds(
        inst,
        "sdg",
        |i| inst.round_distortion(i),
        |round| {
            let mut v = sampler(round);
            v.sort_unstable();
            v.dedup();
            v
        },
    )
}

/// Undistorted greedy on `f`-marginals `g(X ∪ {v}) - g(X) - c({v})`.
pub fn plain_greedy(inst: &ProblemInstance) -> RunRecord {
    let all: Vec<usize> = (0..inst.n()).collect();
    greedy_rounds(inst, "greedy", |_| 1.0, |_| all.clone())
}
