//! Solvers for maximizing `f = g - c` subject to `|X| <= k`, where `g` is a
//! non-negative monotone approximately submodular set function and `c` is a
//! non-negative modular cost.
//!
//! The crate provides
//! - [`solvers::gsemo`], the GSEMO evolutionary algorithm run on the
//!   bi-objective reformulation `(f1, -|x|)` with
//!   `f1(x) = (1 - γ/k)^(k-|x|) g(x) - c(x) + (|x|/k) c(V)`;
//! - the distorted greedy family ([`solvers::distorted_greedy`],
//!   [`solvers::stochastic_distorted_greedy`]) and a plain greedy baseline;
//! - a brute-force optimum and exact submodularity ratio for small `n`, used
//!   to check the `(1 - e^{-γ}) g(X*) - c(X*)` guarantee;
//! - oracles for Bayesian A-optimal design and directed vertex cover;
//! - an experiment harness that repeats seeded runs and writes CSV summaries.
//!
//! ```
//! use gsemo_submod::problem::{GOracle, ModularCost, ModularFunction, ProblemInstance};
//! use gsemo_submod::solvers::distorted_greedy;
//!
//! let g = GOracle::new(ModularFunction::new(vec![10.0, 4.0, 1.0]));
//! let inst = ProblemInstance::new(g, ModularCost::new(vec![1.0; 3]).unwrap(), 2, 1.0).unwrap();
//! let run = distorted_greedy(&inst);
//! assert_eq!(run.best_f, 12.0);
//! ```

pub mod cli;
pub mod error;
pub mod harness;
pub mod objectives;
pub mod problem;
pub mod solvers;

pub use error::{Error, Result};
