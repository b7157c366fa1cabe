use std::sync::Arc;

use crate::error::Result;
use crate::problem::{GOracle, ModularCost, ProblemInstance, SetFunction, Subset};

/// `g` extended by zero-contribution items: `g'(X) = g(X ∩ V)`.
pub struct DummyAugmented {
    inner: Arc<dyn SetFunction>,
    original: usize,
    dummies: usize,
}

impl DummyAugmented {
    pub fn new(inner: Arc<dyn SetFunction>, dummies: usize) -> Self {
        let original = inner.ground_size();
        DummyAugmented {
            inner,
            original,
            dummies,
        }
    }
}

impl SetFunction for DummyAugmented {
    fn ground_size(&self) -> usize {
        self.original + self.dummies
    }

    fn value(&self, x: &Subset) -> f64 {
        self.inner.value(&x.truncated(self.original))
    }

    fn describe(&self) -> String {
        format!("{} + {} dummy items", self.inner.describe(), self.dummies)
    }
}

/// Adds `k` dummy items (indices `n..n+k`) with zero marginal value and zero
/// cost. `k` and `γ` carry over unchanged.
pub fn augment_with_dummies(inst: &ProblemInstance) -> Result<ProblemInstance> {
    let k = inst.k();
    let g = DummyAugmented::new(Arc::clone(inst.oracle().function()), k);
    let mut cost = inst.cost().per_item().to_vec();
    cost.resize(inst.n() + k, 0.0);
    ProblemInstance::new(GOracle::new(g), ModularCost::new(cost)?, k, inst.gamma())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{synthetic_instance, SyntheticKind};
    use crate::solvers::brute_force_opt;

    #[test]
    fn dummies_contribute_nothing() {
        let inst = synthetic_instance(SyntheticKind::RandomCoverage, 6, 3, 1).unwrap();
        let aug = augment_with_dummies(&inst).unwrap();
        assert_eq!(aug.n(), 9);
        assert_eq!(aug.k(), 3);
        assert_eq!(aug.gamma(), inst.gamma());
        let only_dummies = Subset::from_indices(9, [6, 7, 8]);
        assert_eq!(aug.oracle().query(&only_dummies), inst.oracle().query(&Subset::empty(6)));
        for d in 6..9 {
            assert_eq!(aug.cost().item(d), 0.0);
        }
        let x = Subset::from_indices(9, [0, 4, 7]);
        assert_eq!(aug.oracle().query(&x), inst.oracle().query(&Subset::from_indices(6, [0, 4])));
    }

    #[test]
    fn optimum_is_preserved() {
        for seed in 0..30 {
            for kind in SyntheticKind::ALL {
                let inst = synthetic_instance(kind, 7, 3, seed).unwrap();
                let aug = augment_with_dummies(&inst).unwrap();
                let (_, a) = brute_force_opt(&inst).unwrap();
                let (_, b) = brute_force_opt(&aug).unwrap();
                assert_eq!(a, b, "{kind:?} seed {seed}");
            }
        }
    }
}
