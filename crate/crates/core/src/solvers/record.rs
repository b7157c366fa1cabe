use crate::problem::Subset;

/// `(g_evals, best_f)` at a point during a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub evals: u64,
    pub best_f: f64,
}

/// Outcome of one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: String,
    /// Best solution with `|x| <= k` found, if any.
    pub best_feasible: Option<Subset>,
    /// `f` of `best_feasible`, or `-inf` when there is none.
    pub best_f: f64,
    pub g_evals: u64,
    pub iterations: u64,
    pub trajectory: Option<Vec<TrajectoryPoint>>,
    pub seed: Option<u64>,
    /// GSEMO only: the best feasible member of the terminal population.
    pub final_population_best: Option<(Subset, f64)>,
}

impl RunRecord {
    pub(crate) fn new(algorithm: impl Into<String>) -> Self {
        RunRecord {
            algorithm: algorithm.into(),
            best_feasible: None,
            best_f: f64::NEG_INFINITY,
            g_evals: 0,
            iterations: 0,
            trajectory: None,
            seed: None,
            final_population_best: None,
        }
    }

    pub fn has_feasible(&self) -> bool {
        self.best_feasible.is_some()
    }
}
