//! Exact submodularity ratio by enumeration next to the analytic BED bound,
//! plus a supermodular function where the ratio drops below 1.
//!
//! ```text
//! cargo run --release --example gamma_ratio
//! ```

use gsemo_submod::objectives::synthetic::bed_toy_model;
use gsemo_submod::objectives::{brute_force_gamma, DvcGraph};
use gsemo_submod::problem::{FnSetFunction, GOracle, Subset};

fn main() -> gsemo_submod::Result<()> {
    println!("{:>4} {:>3} {:>3} {:>10} {:>10}", "seed", "d", "n", "bound", "exact");
    for seed in 0..8 {
        let d = 2 + seed as usize % 2;
        let model = bed_toy_model(d, 9, seed);
        let bound = model.gamma_lower_bound();
        let exact = brute_force_gamma(&GOracle::new(model))?;
        println!("{seed:>4} {d:>3} {:>3} {bound:>10.4} {exact:>10.4}", 9);
    }

    let cycle = DvcGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
    println!("vertex cover on a 6-cycle with a chord: γ = {}", brute_force_gamma(&GOracle::new(cycle))?);

    // √|X| is submodular; |X|^1.5 is not
    for (name, p) in [("|X|^0.5", 0.5), ("|X|^1.5", 1.5)] {
        let g = GOracle::new(FnSetFunction::new(8, move |x: &Subset| (x.cardinality() as f64).powf(p)));
        println!("{name}: γ = {:.4} ({} queries)", brute_force_gamma(&g)?, g.evals());
    }
    Ok(())
}
