//! Runs an experiment config through the harness and writes the results CSV.
//!
//! ```text
//! cargo run --release --example benchmark -- [config] [out.csv]
//! ```
//!
//! Defaults to `configs/quick_synthetic.conf` and prints the CSV to stdout.

use std::path::PathBuf;

use gsemo_submod::harness::{run_experiment, write_results, ExperimentConfig};

fn main() -> gsemo_submod::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let config = args.first().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/quick_synthetic.conf")
    });
    let cfg = ExperimentConfig::from_file(&config)?;
    let res = run_experiment(&cfg)?;

    for cell in &res.cells {
        println!(
            "{:<10} k={:<3} mean f = {:>10.4} ± {:<8.4} (se {:.4})  evals = {:.0}",
            cell.algorithm,
            cell.k,
            cell.mean_f,
            cell.std_f,
            cell.std_err(),
            cell.mean_g_evals
        );
    }
    match args.get(1) {
        Some(out) => write_results(&res, std::fs::File::create(out)?)?,
        None => write_results(&res, std::io::stdout().lock())?,
    }
    Ok(())
}
