use crate::error::{Error, Result};
use crate::problem::{GOracle, Subset};

/// Largest ground set [`brute_force_gamma`] will enumerate.
pub const GAMMA_MAX_N: usize = 16;

/// Exact submodularity ratio
/// `min_{X ⊆ Y, g(Y) > g(X)} Σ_{v∈Y\X} (g(X∪{v}) - g(X)) / (g(Y) - g(X))`.
///
/// Tabulates `g` on all `2^n` subsets (that many oracle queries) and then
/// walks the `3^n` nested pairs. Pairs with `g(Y) = g(X)` are skipped; if no
/// pair has a positive gap the ratio is 1.
pub fn brute_force_gamma(g: &GOracle) -> Result<f64> {
    let n = g.n();
    if n > GAMMA_MAX_N {
        return Err(Error::Capacity {
            what: "brute_force_gamma",
            max: GAMMA_MAX_N,
            n,
        });
    }
    let size = 1usize << n;
    let values: Vec<f64> = (0..size as u64).map(|m| g.query(&Subset::from_mask(n, m))).collect();
    Ok(gamma_from_table(n, &values))
}

/// Same as [`brute_force_gamma`] on a precomputed value table indexed by mask.
pub fn gamma_from_table(n: usize, values: &[f64]) -> f64 {
    let size = 1usize << n;
    assert_eq!(values.len(), size);
    let full = size - 1;
    let mut numer = vec![0.0f64; size];
    let mut delta = vec![0.0f64; n];
    let mut best = f64::INFINITY;
    for x in 0..size {
        let gx = values[x];
        let comp = full & !x;
        for (v, dv) in delta.iter_mut().enumerate() {
            if comp >> v & 1 == 1 {
                *dv = values[x | 1 << v] - gx;
            }
        }
        // submasks of comp in increasing order; s & (s-1) precedes s
        let mut s = comp.wrapping_neg() & comp;
        while s != 0 {
            let low = s.trailing_zeros() as usize;
            let num = numer[s & (s - 1)] + delta[low];
            numer[s] = num;
            let den = values[x | s] - gx;
            if den > 0.0 {
                let r = num / den;
                if r < best {
                    best = r;
                }
            }
            s = s.wrapping_sub(comp) & comp;
        }
    }
    if best.is_finite() {
        best.clamp(0.0, 1.0)
    } else {
        1.0
    }
}
