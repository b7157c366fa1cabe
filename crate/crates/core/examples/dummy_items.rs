//! Dummy-item augmentation and the per-step gain bound: for every `x` with
//! `|x| < k` some single item raises `f1` by at least
//! `(γ/k)(1 - γ/k)^(k-|x|-1) g(X*) + (c(V) - c(X*))/k`.
//!
//! ```text
//! cargo run --example dummy_items
//! ```

use gsemo_submod::objectives::{synthetic_instance, SyntheticKind};
use gsemo_submod::problem::Subset;
use gsemo_submod::solvers::verify::{best_single_item_gain, single_item_gain_bound};
use gsemo_submod::solvers::{augment_with_dummies, brute_force_opt};

fn main() -> gsemo_submod::Result<()> {
    let base = synthetic_instance(SyntheticKind::RandomCoverage, 6, 3, 11)?;
    let inst = augment_with_dummies(&base)?;
    println!(
        "original n = {}, augmented n = {} (items {}..{} are dummies), k = {}, γ = {:.4}",
        base.n(),
        inst.n(),
        base.n(),
        inst.n() - 1,
        inst.k(),
        inst.gamma()
    );

    let (xstar, fstar) = brute_force_opt(&inst)?;
    let opt = inst.evaluate(&xstar);
    println!("X* = {xstar}, f(X*) = {fstar:.4}");

    let mut tightest = (f64::INFINITY, Subset::empty(inst.n()));
    let mut count = 0;
    for mask in 0u64..1 << inst.n() {
        let x = Subset::from_mask(inst.n(), mask);
        if x.cardinality() >= inst.k() {
            continue;
        }
        let (_, gain) = best_single_item_gain(&inst, &x).expect("x is not the full set");
        let slack = gain - single_item_gain_bound(&inst, x.cardinality(), &opt);
        assert!(slack >= -1e-9, "bound violated at {x}");
        if slack < tightest.0 {
            tightest = (slack, x);
        }
        count += 1;
    }
    println!("bound holds on all {count} subsets; tightest slack {:.3e} at {}", tightest.0, tightest.1);
    Ok(())
}
