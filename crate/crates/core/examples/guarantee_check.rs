//! Compares distorted greedy and GSEMO against `(1 - e^{-γ}) g(X*) - c(X*)`
//! on small random instances whose optimum is found by enumeration.
//!
//! ```text
//! cargo run --release --example guarantee_check -- [n] [trials]
//! ```

use gsemo_submod::solvers::verify::{check_guarantees, random_check_instance, run_verification};

fn main() -> gsemo_submod::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(10, |s| s.parse().expect("n must be an integer"));
    let trials: usize = args.get(1).map_or(30, |s| s.parse().expect("trials must be an integer"));

    println!("{:>5} {:>2} {:>7} {:>10} {:>10} {:>22}", "trial", "k", "γ", "target", "dg", "gsemo (5 seeds)");
    for t in 0..5u64 {
        let inst = random_check_instance(n, t, None)?;
        let check = check_guarantees(&inst, &[1, 2, 3, 4, 5], 10)?;
        let gs: Vec<String> = check.gsemo.iter().map(|(f, _)| format!("{f:.2}")).collect();
        println!(
            "{t:>5} {:>2} {:>7.4} {:>10.4} {:>10.4} {:>22}",
            inst.k(),
            inst.gamma(),
            check.target,
            check.dg_f,
            gs.join(" ")
        );
    }

    let s = run_verification(n, trials, 42, None)?;
    println!(
        "\n{trials} trials at n = {n}: distorted greedy {}/{}, gsemo {}/{} -> {}",
        s.dg_pass,
        s.trials,
        s.gsemo_pass,
        s.trials,
        if s.passed() { "PASS" } else { "FAIL" }
    );
    Ok(())
}
