//! The optimization algorithms and the exact verification oracle.

mod brute;
mod dummy;
mod greedy;
mod gsemo;
mod record;
pub mod verify;

pub use brute::{brute_force_opt, BRUTE_MAX_N};
pub use dummy::{augment_with_dummies, DummyAugmented};
pub use greedy::{
    distorted_greedy, plain_greedy, sdg_sample_size, stochastic_distorted_greedy,
    stochastic_distorted_greedy_with_sampler,
};
pub use gsemo::{
    default_iterations, gsemo, gsemo_with, GsemoConfig, GsemoRun, Individual, Init, InsertOutcome,
    Population, StepOutcome,
};
pub use record::{RunRecord, TrajectoryPoint};
