//! Experiment configuration, repeated runs and CSV output.

pub mod config;
pub mod experiment;
pub mod output;

pub use config::{AlgorithmSpec, Application, ExperimentConfig, IterationRule};
pub use experiment::{build_base_instance, run_experiment, run_experiment_on, run_once, run_seed, AggregateResult, CellSummary};
pub use output::{
    file_stem, fmt_real, read_results, read_trajectory, write_results, write_trajectory, ResultRow, RESULTS_HEADER,
    TRAJECTORY_HEADER,
};
