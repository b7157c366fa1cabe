//! Seeded generators for small controlled instances.

use std::str::FromStr;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::bed::{random_prior_cov, BedModel};
use super::gamma::{brute_force_gamma, GAMMA_MAX_N};
use crate::error::{Error, Result};
use crate::problem::{GOracle, ModularCost, ModularFunction, ProblemInstance, SetFunction, Subset};

/// Weighted coverage: item `i` covers a set of universe elements, and
/// `g(X)` is the total weight of elements covered by `X`.
#[derive(Debug, Clone)]
pub struct CoverageFunction {
    covers: Vec<Subset>,
    element_weights: Vec<f64>,
}

impl CoverageFunction {
    pub fn new(covers: Vec<Subset>, element_weights: Vec<f64>) -> Self {
        assert!(covers.iter().all(|c| c.len() == element_weights.len()));
        assert!(element_weights.iter().all(|w| *w >= 0.0));
        CoverageFunction {
            covers,
            element_weights,
        }
    }
}

impl SetFunction for CoverageFunction {
    fn ground_size(&self) -> usize {
        self.covers.len()
    }

    fn value(&self, x: &Subset) -> f64 {
        let m = self.element_weights.len();
        let mut covered = vec![0u64; m.div_ceil(64)];
        for i in x.iter() {
            for (c, w) in covered.iter_mut().zip(self.covers[i].words()) {
                *c |= *w;
            }
        }
        let mut total = 0.0;
        for (wi, word) in covered.iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                total += self.element_weights[wi * 64 + bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
        }
        total
    }

    fn describe(&self) -> String {
        format!(
            "weighted coverage ({} items, {} elements)",
            self.covers.len(),
            self.element_weights.len()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SyntheticKind {
    RandomCoverage,
    RandomModular,
    BedToy,
}

impl SyntheticKind {
    pub const ALL: [SyntheticKind; 3] = [
        SyntheticKind::RandomModular,
        SyntheticKind::RandomCoverage,
        SyntheticKind::BedToy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SyntheticKind::RandomCoverage => "random_coverage",
            SyntheticKind::RandomModular => "random_modular",
            SyntheticKind::BedToy => "bed_toy",
        }
    }
}

impl FromStr for SyntheticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random_coverage" | "coverage" => Ok(SyntheticKind::RandomCoverage),
            "random_modular" | "modular" => Ok(SyntheticKind::RandomModular),
            "bed_toy" => Ok(SyntheticKind::BedToy),
            other => Err(Error::usage(format!(
                "unknown synthetic kind {other:?} (expected random_coverage, random_modular or bed_toy)"
            ))),
        }
    }
}

/// The pieces of a synthetic instance before a budget is attached.
pub struct SyntheticProblem {
    pub g: Arc<dyn SetFunction>,
    pub cost: ModularCost,
    pub gamma: f64,
    /// Present for `bed_toy`: the analytic ratio bound.
    pub gamma_bound: Option<f64>,
}

impl SyntheticProblem {
    pub fn instance(&self, k: usize) -> Result<ProblemInstance> {
        ProblemInstance::new(GOracle::from_arc(self.g.clone()), self.cost.clone(), k, self.gamma)
    }
}

/// Toy BED model with `d ∈ {2, 3}` and Gaussian measurements.
pub fn bed_toy_model(d: usize, n: usize, seed: u64) -> BedModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = DMatrix::<f64>::from_fn(d, n, |_, _| StandardNormal.sample(&mut rng));
    let noise = rng.gen_range(0.25..4.0);
    BedModel::new(v, random_prior_cov(d, rng.gen()), noise).expect("A D Aᵀ with Gaussian A is SPD")
}

/// Generates the named family. `γ` comes from [`brute_force_gamma`] when
/// `n <= 16`, otherwise from the family's known bound.
pub fn synthetic_problem(kind: SyntheticKind, n: usize, seed: u64) -> Result<SyntheticProblem> {
    if n == 0 {
        return Err(Error::usage("synthetic instances need n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ kind_salt(kind));
    let g: Arc<dyn SetFunction>;
    let mut gamma_bound = None;
    match kind {
        SyntheticKind::RandomModular => {
            g = Arc::new(ModularFunction::new((0..n).map(|_| rng.gen_range(0.0..10.0)).collect()));
        }
        SyntheticKind::RandomCoverage => {
            let m = 2 * n;
            let weights: Vec<f64> = (0..m).map(|_| rng.gen_range(0.5..2.0)).collect();
            let covers = (0..n)
                .map(|_| {
                    let mut s = Subset::from_indices(m, (0..m).filter(|_| rng.gen_bool(0.25)));
                    if s.is_empty() {
                        s.insert(rng.gen_range(0..m));
                    }
                    s
                })
                .collect();
            g = Arc::new(CoverageFunction::new(covers, weights));
        }
        SyntheticKind::BedToy => {
            let d = rng.gen_range(2..=3);
            let model = bed_toy_model(d, n, rng.gen());
            gamma_bound = Some(model.gamma_lower_bound());
            g = Arc::new(model);
        }
    }
    // costs scale each item's own value so some items are net-negative
    let cost: Vec<f64> = (0..n)
        .map(|i| rng.gen_range(0.0..1.2) * g.value(&Subset::from_indices(n, [i])))
        .collect();
    let gamma = if n <= GAMMA_MAX_N {
        brute_force_gamma(&GOracle::from_arc(g.clone()))?
    } else {
        match kind {
            SyntheticKind::RandomCoverage | SyntheticKind::RandomModular => 1.0,
            SyntheticKind::BedToy => gamma_bound.expect("set above"),
        }
    };
    Ok(SyntheticProblem {
        g,
        cost: ModularCost::new(cost)?,
        gamma,
        gamma_bound,
    })
}

pub fn synthetic_instance(kind: SyntheticKind, n: usize, k: usize, seed: u64) -> Result<ProblemInstance> {
    if k < 1 || k > n {
        return Err(Error::invalid(format!("budget k = {k} must satisfy 1 <= k <= n = {n}")));
    }
    synthetic_problem(kind, n, seed)?.instance(k)
}

fn kind_salt(kind: SyntheticKind) -> u64 {
    match kind {
        SyntheticKind::RandomCoverage => 0x636f_7665_7261_6765,
        SyntheticKind::RandomModular => 0x6d6f_6475_6c61_7200,
        SyntheticKind::BedToy => 0x6265_645f_746f_7900,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(inst: &ProblemInstance) -> Vec<f64> {
        let n = inst.n();
        (0..1u64 << n)
            .map(|m| inst.oracle().query(&Subset::from_mask(n, m)))
            .collect()
    }

    #[test]
    fn modular_has_unit_ratio() {
        let inst = synthetic_instance(SyntheticKind::RandomModular, 8, 3, 5).unwrap();
        assert!((inst.gamma() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coverage_is_deterministic() {
        let a = synthetic_instance(SyntheticKind::RandomCoverage, 10, 4, 77).unwrap();
        let b = synthetic_instance(SyntheticKind::RandomCoverage, 10, 4, 77).unwrap();
        assert_eq!(table(&a), table(&b));
        assert_eq!(a.cost(), b.cost());
        assert!((a.gamma() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bed_toy_ratio_is_reproducible() {
        let a = synthetic_instance(SyntheticKind::BedToy, 12, 3, 3).unwrap();
        let b = synthetic_instance(SyntheticKind::BedToy, 12, 3, 3).unwrap();
        assert_eq!(a.gamma().to_bits(), b.gamma().to_bits());
        assert!(a.gamma() > 0.0 && a.gamma() <= 1.0);
    }

    #[test]
    fn large_coverage_falls_back_to_unit_ratio() {
        let p = synthetic_problem(SyntheticKind::RandomCoverage, 40, 1).unwrap();
        assert_eq!(p.gamma, 1.0);
        let p = synthetic_problem(SyntheticKind::BedToy, 40, 1).unwrap();
        assert_eq!(Some(p.gamma), p.gamma_bound);
    }

    #[test]
    fn unknown_kind_is_rejected() {
        assert!("spiral".parse::<SyntheticKind>().is_err());
        assert_eq!("bed_toy".parse::<SyntheticKind>().unwrap(), SyntheticKind::BedToy);
    }

    #[test]
    fn budget_is_validated() {
        assert!(synthetic_instance(SyntheticKind::RandomModular, 4, 5, 0).is_err());
        assert!(synthetic_instance(SyntheticKind::RandomModular, 4, 0, 0).is_err());
    }
}
