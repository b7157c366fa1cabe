//! Bayesian A-optimal experimental design.
//!
//! `g(X) = tr(Σ) - tr((Σ⁻¹ + σ⁻² V_X V_Xᵀ)⁻¹)`.
//!
//! With `Σ = L Lᵀ` and `W = Lᵀ V_X` the posterior covariance is
//! `L (I + σ⁻² W Wᵀ)⁻¹ Lᵀ`, so each query factors `K = I + σ⁻² W Wᵀ = R Rᵀ`
//! (eigenvalues `>= 1`, never ill-conditioned) and returns
//! `tr(Σ) - ‖R⁻¹ Lᵀ‖²_F`. `Σ⁻¹` is never formed.

use std::path::Path;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::problem::{GOracle, ModularCost, ProblemInstance, SetFunction, Subset};

/// Cost multiplier on singleton values `c_i = 0.8 · g({i})`.
pub const BED_COST_FACTOR: f64 = 0.8;

#[derive(Debug, Clone)]
pub struct BedModel {
    d: usize,
    n: usize,
    features: DMatrix<f64>,
    prior_cov: DMatrix<f64>,
    noise_var: f64,
    /// `Lᵀ` row-major, `d × d`.
    chol_t: Vec<f64>,
    /// Row `i` holds `Lᵀ v_i`.
    whitened: Vec<f64>,
    prior_trace: f64,
}

impl BedModel {
    /// `features` is `d × n` (one column per measurement).
    pub fn new(features: DMatrix<f64>, prior_cov: DMatrix<f64>, noise_var: f64) -> Result<Self> {
        let d = features.nrows();
        let n = features.ncols();
        if d == 0 {
            return Err(Error::invalid("feature matrix has no rows"));
        }
        if prior_cov.nrows() != d || prior_cov.ncols() != d {
            return Err(Error::invalid(format!(
                "prior covariance is {}x{}, expected {d}x{d}",
                prior_cov.nrows(),
                prior_cov.ncols()
            )));
        }
        if !(noise_var > 0.0 && noise_var.is_finite()) {
            return Err(Error::invalid(format!("noise variance must be positive, got {noise_var}")));
        }
        let scale = prior_cov.amax().max(f64::MIN_POSITIVE);
        let asym = (&prior_cov - prior_cov.transpose()).amax();
        if asym > 1e-12 * scale {
            return Err(Error::NotPositiveDefinite(format!("asymmetry {asym:e}")));
        }
        let lam_min = SymmetricEigen::new(prior_cov.clone()).eigenvalues.min();
        if lam_min <= 0.0 {
            return Err(Error::NotPositiveDefinite(format!("smallest eigenvalue {lam_min:e}")));
        }
        let chol = prior_cov
            .clone()
            .cholesky()
            .ok_or_else(|| Error::NotPositiveDefinite("Cholesky factorization failed".into()))?;
        let l = chol.l();
        let lt = l.transpose();

        let mut chol_t = vec![0.0; d * d];
        for r in 0..d {
            for c in 0..d {
                chol_t[r * d + c] = lt[(r, c)];
            }
        }
        let w = &lt * &features;
        let mut whitened = vec![0.0; n * d];
        for i in 0..n {
            for r in 0..d {
                whitened[i * d + r] = w[(r, i)];
            }
        }

        let mut identity = vec![0.0; d * d];
        for r in 0..d {
            identity[r * d + r] = 1.0;
        }
        let prior_trace = solve_frobenius(&identity, &chol_t, d);

        Ok(BedModel {
            d,
            n,
            features,
            prior_cov,
            noise_var,
            chol_t,
            whitened,
            prior_trace,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn features(&self) -> &DMatrix<f64> {
        &self.features
    }

    pub fn prior_cov(&self) -> &DMatrix<f64> {
        &self.prior_cov
    }

    pub fn noise_var(&self) -> f64 {
        self.noise_var
    }

    pub fn prior_trace(&self) -> f64 {
        self.prior_trace
    }

    /// `(1 + (s²/σ²) λ_max(Σ))⁻¹` with `s = max_i ‖v_i‖₂`.
    pub fn gamma_lower_bound(&self) -> f64 {
        let s2 = (0..self.n)
            .map(|i| self.features.column(i).norm_squared())
            .fold(0.0, f64::max);
        let lam_max = SymmetricEigen::new(self.prior_cov.clone()).eigenvalues.max();
        1.0 / (1.0 + (s2 / self.noise_var) * lam_max)
    }

    pub fn g(&self, x: &Subset) -> f64 {
        assert_eq!(x.len(), self.n, "subset size does not match BED model");
        if x.is_empty() {
            return 0.0;
        }
        let d = self.d;
        let inv_s2 = 1.0 / self.noise_var;
        // lower triangle of Σ_{i∈X} u_i u_iᵀ
        let mut k = vec![0.0; d * d];
        for i in x.iter() {
            let u = &self.whitened[i * d..(i + 1) * d];
            for r in 0..d {
                let ur = u[r];
                let row = &mut k[r * d..r * d + r + 1];
                for (kc, uc) in row.iter_mut().zip(u) {
                    *kc += ur * uc;
                }
            }
        }
        for r in 0..d {
            for c in 0..=r {
                k[r * d + c] *= inv_s2;
            }
            k[r * d + r] += 1.0;
        }
        cholesky_in_place(&mut k, d);
        let post = solve_frobenius(&k, &self.chol_t, d);
        (self.prior_trace - post).max(0.0)
    }
}

impl SetFunction for BedModel {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn value(&self, x: &Subset) -> f64 {
        self.g(x)
    }

    fn describe(&self) -> String {
        format!("Bayesian A-optimality (d = {}, n = {})", self.d, self.n)
    }
}

/// Lower Cholesky factor of an SPD matrix stored row-major; only the lower
/// triangle is read and written.
fn cholesky_in_place(a: &mut [f64], d: usize) {
    for j in 0..d {
        let mut diag = a[j * d + j];
        for p in 0..j {
            diag -= a[j * d + p] * a[j * d + p];
        }
        debug_assert!(diag > 0.0);
        let diag = diag.sqrt();
        a[j * d + j] = diag;
        for i in j + 1..d {
            let mut s = a[i * d + j];
            for p in 0..j {
                s -= a[i * d + p] * a[j * d + p];
            }
            a[i * d + j] = s / diag;
        }
    }
}

/// `‖R⁻¹ B‖²_F` for lower-triangular `R` (row-major) and square `B` (row-major).
fn solve_frobenius(r: &[f64], b: &[f64], d: usize) -> f64 {
    let mut y = vec![0.0; d];
    let mut total = 0.0;
    for col in 0..d {
        for i in 0..d {
            let mut s = b[i * d + col];
            for p in 0..i {
                s -= r[i * d + p] * y[p];
            }
            y[i] = s / r[i * d + i];
        }
        total += y.iter().map(|v| v * v).sum::<f64>();
    }
    total
}

/// `Σ = A D Aᵀ` with `A_ij ~ N(0, 1)` and `D = diag((i/d)²)`, `i = 1..d`.
pub fn random_prior_cov(d: usize, seed: u64) -> DMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = DMatrix::<f64>::from_fn(d, d, |_, _| StandardNormal.sample(&mut rng));
    let diag = DMatrix::<f64>::from_diagonal(&nalgebra::DVector::from_fn(d, |i, _| {
        let t = (i + 1) as f64 / d as f64;
        t * t
    }));
    let s = &a * diag * a.transpose();
    // symmetrize away roundoff asymmetry from the triple product
    (&s + s.transpose()) * 0.5
}

/// A numeric table read from a feature CSV: one row per measurement.
#[derive(Debug, Clone)]
pub struct FeatureTable {
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<f64>>,
}

impl FeatureTable {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    fn column_name(&self, j: usize) -> String {
        match &self.header {
            Some(h) if j < h.len() => format!("column {} ({:?})", j + 1, h[j]),
            _ => format!("column {}", j + 1),
        }
    }
}

/// Reads a comma-separated numeric table. A first row with any non-numeric
/// cell is taken as a header.
pub fn load_feature_table(path: &Path) -> Result<FeatureTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::ingest(path, e.to_string()))?;
    let mut header = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::ingest(path, e.to_string()))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Vec<Option<f64>> = rec.iter().map(|s| s.parse::<f64>().ok()).collect();
        if line == 0 && parsed.iter().any(Option::is_none) {
            header = Some(rec.iter().map(|s| s.trim_matches('"').to_string()).collect());
            continue;
        }
        let mut row = Vec::with_capacity(parsed.len());
        for (j, v) in parsed.into_iter().enumerate() {
            match v {
                Some(v) if v.is_finite() => row.push(v),
                _ => {
                    return Err(Error::ingest(
                        path,
                        format!("line {}: non-numeric cell {:?} in column {}", line + 1, &rec[j], j + 1),
                    ))
                }
            }
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::ingest(
                    path,
                    format!("line {}: expected {} columns, found {}", line + 1, first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::ingest(path, "no data rows"));
    }
    Ok(FeatureTable { header, rows })
}

/// Standardizes every column to mean 0 and (population) variance 1 and
/// returns the `d × n` measurement matrix.
///
/// A table with a single row cannot be scaled and is only centered.
pub fn standardize(table: &FeatureTable, source: &Path) -> Result<DMatrix<f64>> {
    let n = table.n_rows();
    let d = table.n_cols();
    let mut out = DMatrix::<f64>::zeros(d, n);
    for j in 0..d {
        let mean = table.rows.iter().map(|r| r[j]).sum::<f64>() / n as f64;
        let var = table.rows.iter().map(|r| (r[j] - mean).powi(2)).sum::<f64>() / n as f64;
        let scale = if n == 1 {
            1.0
        } else if var > 0.0 {
            var.sqrt()
        } else {
            return Err(Error::ingest(
                source,
                format!("{} has zero variance", table.column_name(j)),
            ));
        };
        for (i, r) in table.rows.iter().enumerate() {
            out[(j, i)] = (r[j] - mean) / scale;
        }
    }
    Ok(out)
}

/// A BED problem with its costs and ratio bound, reusable across budgets.
#[derive(Debug, Clone)]
pub struct BedProblem {
    pub model: std::sync::Arc<BedModel>,
    pub cost: ModularCost,
    pub gamma: f64,
}

impl BedProblem {
    /// `σ = sigma_multiplier · d`, `Σ` drawn from `seed`, costs `0.8 · g({i})`,
    /// `γ` set to the analytic lower bound.
    pub fn from_features(features: DMatrix<f64>, sigma_multiplier: f64, seed: u64) -> Result<Self> {
        if !(sigma_multiplier > 0.0 && sigma_multiplier.is_finite()) {
            return Err(Error::usage(format!("sigma multiplier must be positive, got {sigma_multiplier}")));
        }
        let d = features.nrows();
        let sigma = sigma_multiplier * d as f64;
        let model = BedModel::new(features, random_prior_cov(d, seed), sigma * sigma)?;
        Ok(Self::with_model(model, BED_COST_FACTOR))
    }

    /// Costs `factor · g({i})`, computed through the bare function so they are
    /// not charged to any oracle counter.
    pub fn with_model(model: BedModel, factor: f64) -> Self {
        let n = model.ground_size();
        let cost = (0..n)
            .map(|i| factor * model.g(&Subset::from_indices(n, [i])))
            .collect();
        let gamma = model.gamma_lower_bound();
        BedProblem {
            model: std::sync::Arc::new(model),
            cost: ModularCost::new(cost).expect("singleton values are non-negative"),
            gamma,
        }
    }

    pub fn instance(&self, k: usize) -> Result<ProblemInstance> {
        ProblemInstance::new(
            GOracle::from_arc(self.model.clone()),
            self.cost.clone(),
            k,
            self.gamma,
        )
    }
}

/// Loads, standardizes and builds a BED instance from a feature CSV.
pub fn build_bed_instance(
    features_csv: &Path,
    sigma_multiplier: f64,
    k: usize,
    seed: u64,
) -> Result<ProblemInstance> {
    load_bed_problem(features_csv, sigma_multiplier, seed)?.instance(k)
}

pub fn load_bed_problem(features_csv: &Path, sigma_multiplier: f64, seed: u64) -> Result<BedProblem> {
    let table = load_feature_table(features_csv)?;
    let features = standardize(&table, features_csv)?;
    BedProblem::from_features(features, sigma_multiplier, seed)
}
