use std::sync::Arc;

use super::{BiValue, GOracle, Subset};
use crate::error::{Error, Result};

/// Non-negative modular cost `c(X) = Σ_{v∈X} c({v})`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularCost {
    per_item: Vec<f64>,
    total: f64,
}

impl ModularCost {
    pub fn new(per_item: Vec<f64>) -> Result<Self> {
        if let Some((i, c)) = per_item
            .iter()
            .enumerate()
            .find(|(_, c)| !(c.is_finite() && **c >= 0.0))
        {
            return Err(Error::invalid(format!(
                "cost of item {i} must be finite and non-negative, got {c}"
            )));
        }
        let total = per_item.iter().sum();
        Ok(ModularCost { per_item, total })
    }

    pub fn zeros(n: usize) -> Self {
        ModularCost {
            per_item: vec![0.0; n],
            total: 0.0,
        }
    }

    pub fn len(&self) -> usize {
        self.per_item.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_item.is_empty()
    }

    #[inline]
    pub fn item(&self, i: usize) -> f64 {
        self.per_item[i]
    }

    pub fn per_item(&self) -> &[f64] {
        &self.per_item
    }

    /// `c(V)`, the cost of the whole ground set.
    #[inline]
    pub fn total(&self) -> f64 {
        self.total
    }

    #[inline]
    pub fn of(&self, x: &Subset) -> f64 {
        x.iter().map(|i| self.per_item[i]).sum()
    }
}

/// One oracle query's worth of information about a subset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub g: f64,
    pub c: f64,
    pub size: usize,
}

impl Evaluation {
    /// The original objective `f = g - c`.
    #[inline]
    pub fn f(&self) -> f64 {
        self.g - self.c
    }
}

/// `(1 - γ/k)^(k - size) · g - c + (size/k) · c(V)`, evaluated verbatim.
///
/// `size > k` gives a negative exponent and is allowed.
#[inline]
pub fn distorted_value(g: f64, c: f64, size: usize, k: usize, gamma: f64, total_cost: f64) -> f64 {
    let exponent = k as i64 - size as i64;
    let factor = (1.0 - gamma / k as f64).powi(exponent as i32);
    factor * g - c + (size as f64 / k as f64) * total_cost
}

/// `max f(X) = g(X) - c(X)` subject to `|X| <= k`.
///
/// `gamma` is the submodularity ratio of `g` or a lower bound on it; the
/// distorted algorithms take it as a parameter.
#[derive(Debug)]
pub struct ProblemInstance {
    g: GOracle,
    cost: Arc<ModularCost>,
    k: usize,
    gamma: f64,
}

impl ProblemInstance {
    pub fn new(g: GOracle, cost: ModularCost, k: usize, gamma: f64) -> Result<Self> {
        Self::with_shared_cost(g, Arc::new(cost), k, gamma)
    }

    pub fn with_shared_cost(g: GOracle, cost: Arc<ModularCost>, k: usize, gamma: f64) -> Result<Self> {
        let n = g.n();
        if cost.len() != n {
            return Err(Error::invalid(format!(
                "cost vector has {} entries but g is over {n} items",
                cost.len()
            )));
        }
        if k < 1 || k > n {
            return Err(Error::invalid(format!("budget k = {k} must satisfy 1 <= k <= n = {n}")));
        }
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::invalid(format!("submodularity ratio {gamma} outside (0, 1]")));
        }
        Ok(ProblemInstance { g, cost, k, gamma })
    }

    /// Independent handle on the same problem: shared data, fresh counter.
    pub fn fork(&self) -> ProblemInstance {
        ProblemInstance {
            g: self.g.fork(),
            cost: Arc::clone(&self.cost),
            k: self.k,
            gamma: self.gamma,
        }
    }

    /// Same `g` and `c` with a different budget (fresh counter).
    pub fn with_budget(&self, k: usize) -> Result<ProblemInstance> {
        Self::with_shared_cost(self.g.fork(), Arc::clone(&self.cost), k, self.gamma)
    }

    /// Same `g` and `c` with a different ratio (fresh counter).
    pub fn with_gamma(&self, gamma: f64) -> Result<ProblemInstance> {
        Self::with_shared_cost(self.g.fork(), Arc::clone(&self.cost), self.k, gamma)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.g.n()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn oracle(&self) -> &GOracle {
        &self.g
    }

    pub fn cost(&self) -> &ModularCost {
        &self.cost
    }

    pub fn shared_cost(&self) -> &Arc<ModularCost> {
        &self.cost
    }

    pub fn g_evals(&self) -> u64 {
        self.g.evals()
    }

    /// One counted `g` query plus the free cost sum.
    #[inline]
    pub fn evaluate(&self, x: &Subset) -> Evaluation {
        Evaluation {
            g: self.g.query(x),
            c: self.cost.of(x),
            size: x.cardinality(),
        }
    }

    /// `(1 - γ/k)^(k - i - 1)`, the greedy distortion in round `i`.
    #[inline]
    pub fn round_distortion(&self, round: usize) -> f64 {
        (1.0 - self.gamma / self.k as f64).powi((self.k - round - 1) as i32)
    }

    #[inline]
    pub fn f1_of(&self, e: &Evaluation) -> f64 {
        distorted_value(e.g, e.c, e.size, self.k, self.gamma, self.cost.total())
    }

    #[inline]
    pub fn bivalue_of(&self, e: &Evaluation) -> BiValue {
        BiValue::new(self.f1_of(e), e.size)
    }

    pub fn eval_f(&self, x: &Subset) -> Result<f64> {
        self.check_len(x)?;
        Ok(self.evaluate(x).f())
    }

    pub fn eval_f1(&self, x: &Subset) -> Result<f64> {
        self.check_len(x)?;
        let e = self.evaluate(x);
        Ok(self.f1_of(&e))
    }

    pub fn is_feasible(&self, x: &Subset) -> bool {
        x.cardinality() <= self.k
    }

    fn check_len(&self, x: &Subset) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::usage(format!(
                "subset over {} items passed to an instance over {}",
                x.len(),
                self.n()
            )));
        }
        Ok(())
    }
}
