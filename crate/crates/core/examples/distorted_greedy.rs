//! Plugging a custom `g` into the solvers: a facility-location style
//! function, solved with distorted greedy, its stochastic variant, plain
//! greedy and exhaustive search.
//!
//! ```text
//! cargo run --example distorted_greedy
//! ```

use gsemo_submod::objectives::brute_force_gamma;
use gsemo_submod::problem::{GOracle, ModularCost, ProblemInstance, SetFunction, Subset};
use gsemo_submod::solvers::{brute_force_opt, distorted_greedy, plain_greedy, stochastic_distorted_greedy};

/// `g(X) = Σ_j max_{i ∈ X} sim[i][j]`: each client is served by its best
/// open facility. Monotone and submodular.
struct FacilityLocation {
    sim: Vec<Vec<f64>>,
}

impl SetFunction for FacilityLocation {
    fn ground_size(&self) -> usize {
        self.sim.len()
    }

    fn value(&self, x: &Subset) -> f64 {
        let clients = self.sim.first().map_or(0, Vec::len);
        (0..clients)
            .map(|j| x.iter().map(|i| self.sim[i][j]).fold(0.0, f64::max))
            .sum()
    }
}

fn main() -> gsemo_submod::Result<()> {
    let sim = vec![
        vec![0.9, 0.1, 0.0, 0.4, 0.2],
        vec![0.2, 0.8, 0.3, 0.1, 0.0],
        vec![0.0, 0.3, 0.9, 0.2, 0.6],
        vec![0.5, 0.5, 0.5, 0.5, 0.5],
        vec![0.1, 0.0, 0.2, 0.9, 0.8],
        vec![0.3, 0.2, 0.1, 0.0, 0.1],
    ];
    let g = GOracle::new(FacilityLocation { sim });
    let gamma = brute_force_gamma(&g.fork())?;
    let cost = ModularCost::new(vec![0.6, 0.5, 0.7, 1.2, 0.6, 0.05])?;
    let inst = ProblemInstance::new(g, cost, 3, gamma)?;
    println!("n = {}, k = {}, exact γ = {gamma:.4}", inst.n(), inst.k());

    let runs = [
        distorted_greedy(&inst.fork()),
        stochastic_distorted_greedy(&inst.fork(), 0.2, 7)?,
        plain_greedy(&inst.fork()),
    ];
    for r in &runs {
        let x = r.best_feasible.as_ref().expect("greedy always returns a set");
        println!("{:<10} X = {x}  f = {:.3}  g-queries = {}", r.algorithm, r.best_f, r.g_evals);
    }
    let (xstar, fstar) = brute_force_opt(&inst.fork())?;
    println!("{:<10} X = {xstar}  f = {fstar:.3}", "optimum");
    Ok(())
}
