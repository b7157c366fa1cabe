//! Bayesian A-optimal design on the housing features: GSEMO's best `f`
//! against evaluations, in units of one distorted-greedy run (`k·n`).
//!
//! ```text
//! cargo run --release --example bed_housing -- [k] [sigma-multiplier]
//! ```

use std::path::Path;

use gsemo_submod::objectives::load_bed_problem;
use gsemo_submod::solvers::{default_iterations, distorted_greedy, gsemo_with, stochastic_distorted_greedy, GsemoConfig, Init};

fn main() -> gsemo_submod::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k: usize = args.first().map_or(20, |s| s.parse().expect("k must be an integer"));
    let mult: f64 = args.get(1).map_or(7.0, |s| s.parse().expect("multiplier must be a number"));

    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/housing.csv");
    let problem = load_bed_problem(&data, mult, 0)?;
    let inst = problem.instance(k)?;
    let unit = (k * inst.n()) as f64;
    println!(
        "n = {}, d = {}, σ = {mult}d, γ lower bound = {:.4}",
        inst.n(),
        problem.model.dim(),
        problem.gamma
    );

    let dg = distorted_greedy(&inst.fork());
    let sdg = stochastic_distorted_greedy(&inst.fork(), 0.1, 1)?;
    println!("dg       f = {:.4} after {:.2} units", dg.best_f, dg.g_evals as f64 / unit);
    println!("sdg(0.1) f = {:.4} after {:.2} units", sdg.best_f, sdg.g_evals as f64 / unit);

    let cfg = GsemoConfig {
        iterations: default_iterations(inst.n(), k),
        init: Init::Empty,
        trajectory_stride: Some(unit as u64),
    };
    let run = gsemo_with(&inst.fork(), &cfg, 1);
    println!("gsemo trajectory (units, best f):");
    let traj = run.trajectory.as_deref().unwrap_or(&[]);
    let mut next_report = 0.0;
    for p in traj {
        let u = p.evals as f64 / unit;
        if u >= next_report {
            println!("  {u:>7.2}  {:.4}{}", p.best_f, if p.best_f > dg.best_f { "  (above dg)" } else { "" });
            next_report = if u < 1.0 { 1.0 } else { (u * 2.0).floor() };
        }
    }
    let x = run.best_feasible.as_ref().expect("the empty start is feasible");
    println!("gsemo final f = {:.4}, |X| = {}, {} evaluations", run.best_f, x.cardinality(), run.g_evals);
    Ok(())
}
