/// The bi-objective value `(f1, f2)` of a solution, with `f2 = -|x|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiValue {
    pub f1: f64,
    pub f2: i64,
}

impl BiValue {
    pub fn new(f1: f64, size: usize) -> Self {
        BiValue {
            f1,
            f2: -(size as i64),
        }
    }

    /// `|x|`, recovered from `f2`.
    pub fn size(&self) -> usize {
        (-self.f2) as usize
    }

    /// `self ⪰ other`: at least as good on both objectives.
    #[inline]
    pub fn weakly_dominates(&self, other: &BiValue) -> bool {
        self.f1 >= other.f1 && self.f2 >= other.f2
    }

    /// `self ≻ other`: weakly dominates and strictly better on one objective.
    #[inline]
    pub fn strictly_dominates(&self, other: &BiValue) -> bool {
        self.weakly_dominates(other) && (self.f1 > other.f1 || self.f2 > other.f2)
    }
}

/// Outcome of comparing `a` against `b` under Pareto domination.
///
/// With two objectives, "weak but not strict" domination coincides with
/// equality, so the four variants are exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Equal,
    ADominates,
    BDominates,
    Incomparable,
}

impl Dominance {
    pub fn a_weakly_dominates(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::ADominates)
    }

    pub fn b_weakly_dominates(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::BDominates)
    }
}

/// Exact Pareto comparison; no tolerance is applied to `f1`.
pub fn compare(a: &BiValue, b: &BiValue) -> Dominance {
    let ab = a.weakly_dominates(b);
    let ba = b.weakly_dominates(a);
    match (ab, ba) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::ADominates,
        (false, true) => Dominance::BDominates,
        (false, false) => Dominance::Incomparable,
    }
}
