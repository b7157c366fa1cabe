//! Concrete `g` oracles and instance builders: Bayesian A-optimal design,
//! directed vertex cover, synthetic families, and the exact submodularity
//! ratio by enumeration.

pub mod bed;
pub mod dvc;
pub mod gamma;
pub mod synthetic;

pub use bed::{build_bed_instance, load_bed_problem, BedModel, BedProblem};
pub use dvc::{build_dvc_instance, heavy_tailed_digraph, load_edge_list, DvcGraph, EdgeFormat};
pub use gamma::{brute_force_gamma, GAMMA_MAX_N};
pub use synthetic::{synthetic_instance, synthetic_problem, CoverageFunction, SyntheticKind, SyntheticProblem};
