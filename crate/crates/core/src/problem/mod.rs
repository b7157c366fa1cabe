//! Ground-set and solution representations, the `g`/`c` contracts, the
//! distorted bi-objective values and Pareto comparison.

mod dominance;
mod instance;
mod oracle;
mod subset;

pub use dominance::{compare, BiValue, Dominance};
pub use instance::{distorted_value, Evaluation, ModularCost, ProblemInstance};
pub use oracle::{FnSetFunction, GOracle, ModularFunction, SetFunction};
pub use subset::{Ones, Subset};
