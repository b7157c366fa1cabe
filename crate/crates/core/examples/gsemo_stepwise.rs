//! Driving GSEMO one iteration at a time and printing the archive, which
//! holds at most one solution per cardinality.
//!
//! ```text
//! cargo run --example gsemo_stepwise
//! ```

use gsemo_submod::objectives::{synthetic_instance, SyntheticKind};
use gsemo_submod::solvers::{default_iterations, GsemoRun, Init, InsertOutcome};

fn main() -> gsemo_submod::Result<()> {
    let inst = synthetic_instance(SyntheticKind::BedToy, 14, 4, 2)?;
    let budget = default_iterations(inst.n(), inst.k());
    let mut run = GsemoRun::new(&inst, 3, Init::UniformRandom);
    let (mut inserted, mut rejected) = (0, 0);
    let mut first_feasible = None;
    for _ in 0..budget {
        let step = run.step();
        match step.outcome {
            InsertOutcome::Inserted { .. } => inserted += 1,
            InsertOutcome::Rejected => rejected += 1,
        }
        if first_feasible.is_none() && run.best().is_some() {
            first_feasible = Some(run.iterations());
        }
    }
    println!(
        "{budget} iterations: {inserted} offspring archived, {rejected} rejected; first feasible at iteration {:?}",
        first_feasible
    );

    let mut members: Vec<_> = run.population().members().iter().collect();
    members.sort_by_key(|m| m.x.cardinality());
    println!("{:>4} {:>12} {:>10}  x", "|x|", "f1", "f");
    for m in members {
        println!("{:>4} {:>12.4} {:>10.4}  {}", m.x.cardinality(), m.value.f1, m.f(), m.x);
    }
    let rec = run.finish();
    println!("best feasible f = {:.4} using {} evaluations", rec.best_f, rec.g_evals);
    Ok(())
}
