use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::Subset;

/// A deterministic, non-negative set function over `{0, .., n-1}`.
///
/// Implementations are pure: repeated calls on the same subset return the
/// same value. Counting happens in [`GOracle`], not here.
pub trait SetFunction: Send + Sync {
    fn ground_size(&self) -> usize;

    fn value(&self, x: &Subset) -> f64;

    /// Short human-readable label used in reports.
    fn describe(&self) -> String {
        format!("set function over {} items", self.ground_size())
    }
}

/// Value oracle for `g` with an evaluation counter.
///
/// Each [`GOracle::query`] is one function evaluation. The counter is atomic so
/// a shared oracle tolerates concurrent queries; solvers that run in parallel
/// should instead take their own handle via [`GOracle::fork`].
pub struct GOracle {
    func: Arc<dyn SetFunction>,
    evals: AtomicU64,
}

impl GOracle {
    pub fn new<F: SetFunction + 'static>(func: F) -> Self {
        Self::from_arc(Arc::new(func))
    }

    pub fn from_arc(func: Arc<dyn SetFunction>) -> Self {
        GOracle {
            func,
            evals: AtomicU64::new(0),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.func.ground_size()
    }

    /// Counted evaluation of `g(x)`.
    #[inline]
    pub fn query(&self, x: &Subset) -> f64 {
        debug_assert_eq!(x.len(), self.n());
        self.evals.fetch_add(1, Ordering::Relaxed);
        self.func.value(x)
    }

    pub fn evals(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }

    pub fn reset_count(&self) {
        self.evals.store(0, Ordering::Relaxed);
    }

    /// A new handle on the same function with its own zeroed counter.
    pub fn fork(&self) -> GOracle {
        GOracle::from_arc(Arc::clone(&self.func))
    }

    pub fn function(&self) -> &Arc<dyn SetFunction> {
        &self.func
    }
}

impl fmt::Debug for GOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GOracle")
            .field("func", &self.func.describe())
            .field("evals", &self.evals())
            .finish()
    }
}

/// `g(X) = Σ_{i∈X} weights[i]`.
#[derive(Debug, Clone)]
pub struct ModularFunction {
    weights: Vec<f64>,
}

impl ModularFunction {
    pub fn new(weights: Vec<f64>) -> Self {
        assert!(
            weights.iter().all(|w| *w >= 0.0 && w.is_finite()),
            "modular weights must be finite and non-negative"
        );
        ModularFunction { weights }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl SetFunction for ModularFunction {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }

    fn value(&self, x: &Subset) -> f64 {
        x.iter().map(|i| self.weights[i]).sum()
    }

    fn describe(&self) -> String {
        format!("modular over {} items", self.weights.len())
    }
}

/// Wraps a closure as a set function; handy for tests and examples.
pub struct FnSetFunction<F> {
    n: usize,
    f: F,
}

impl<F> FnSetFunction<F>
where
    F: Fn(&Subset) -> f64 + Send + Sync,
{
    pub fn new(n: usize, f: F) -> Self {
        FnSetFunction { n, f }
    }
}

impl<F> SetFunction for FnSetFunction<F>
where
    F: Fn(&Subset) -> f64 + Send + Sync,
{
    fn ground_size(&self) -> usize {
        self.n
    }

    fn value(&self, x: &Subset) -> f64 {
        (self.f)(x)
    }
}
