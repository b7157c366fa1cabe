use crate::error::{Error, Result};
use crate::problem::{ProblemInstance, Subset};

/// Largest ground set [`brute_force_opt`] will enumerate.
pub const BRUTE_MAX_N: usize = 20;

/// Exact optimum over all subsets of size at most `k`.
///
/// Ties on `f` go to the smaller cardinality, then to the lexicographically
/// smallest sorted index list.
pub fn brute_force_opt(inst: &ProblemInstance) -> Result<(Subset, f64)> {
    let n = inst.n();
    if n > BRUTE_MAX_N {
        return Err(Error::Capacity {
            what: "brute_force_opt",
            max: BRUTE_MAX_N,
            n,
        });
    }
    let k = inst.k() as u32;
    let mut best: Option<(Subset, f64)> = None;
    for mask in 0u64..1 << n {
        if mask.count_ones() > k {
            continue;
        }
        let x = Subset::from_mask(n, mask);
        let f = inst.evaluate(&x).f();
        let better = match &best {
            None => true,
            Some((bx, bf)) => {
                f > *bf
                    || (f == *bf
                        && (x.cardinality(), &x) < (bx.cardinality(), bx))
            }
        };
        if better {
            best = Some((x, f));
        }
    }
    Ok(best.expect("the empty set is always feasible"))
}
