//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run a subset with `cargo test --test acceptance -- 1 4 8`.
//!
//! Failures are reported but the exit status stays 0 so the workspace test
//! run completes; set `ACCEPTANCE_STRICT=1` to exit non-zero on any FAIL.
//!
//! Reference values (optima, guarantee targets, distorted objectives,
//! dominance checks) are recomputed here by direct enumeration rather than
//! through the library's own helpers.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gsemo_submod::harness::{run_experiment_on, ExperimentConfig};
use gsemo_submod::objectives::synthetic::bed_toy_model;
use gsemo_submod::objectives::{brute_force_gamma, heavy_tailed_digraph, load_bed_problem, load_edge_list, DvcGraph, EdgeFormat, SyntheticKind};
use gsemo_submod::problem::{GOracle, ProblemInstance, Subset};
use gsemo_submod::solvers::verify::random_check_instance;
use gsemo_submod::solvers::{
    augment_with_dummies, default_iterations, distorted_greedy, gsemo, gsemo_with, sdg_sample_size,
    stochastic_distorted_greedy, GsemoConfig, GsemoRun, Init,
};

const TOL: f64 = 1e-9;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// `(g, c)` of subset `mask`, straight from the function and cost vector.
fn g_c(inst: &ProblemInstance, mask: u64) -> (f64, f64) {
    let n = inst.n();
    let g = inst.oracle().function().value(&Subset::from_mask(n, mask));
    let c: f64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| inst.cost().item(i)).sum();
    (g, c)
}

/// `(g(X*), c(X*))` for an `f`-maximizer over `|X| <= k`.
fn exact_opt(inst: &ProblemInstance) -> (f64, f64) {
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for mask in 0u64..1 << inst.n() {
        if mask.count_ones() as usize <= inst.k() {
            let (g, c) = g_c(inst, mask);
            if g - c > best.0 {
                best = (g - c, g, c);
            }
        }
    }
    (best.1, best.2)
}

fn target(gamma: f64, (g, c): (f64, f64)) -> f64 {
    (1.0 - (-gamma).exp()) * g - c
}

/// The guarantee-check family: n in 6..=12, k in 1..=min(5, n), three kinds.
fn family(i: u64) -> ProblemInstance {
    let n = 6 + (i % 7) as usize;
    let kind = SyntheticKind::ALL[(i % 3) as usize];
    random_check_instance(n, 0xacce_0000 + i, Some(kind)).expect("valid instance")
}

const FAMILY_SIZE: u64 = 500;

fn criterion_1() -> Verdict {
    let mut fails = 0;
    let mut worst = f64::INFINITY;
    for i in 0..FAMILY_SIZE {
        let inst = family(i);
        let t = target(inst.gamma(), exact_opt(&inst));
        let f = distorted_greedy(&inst.fork()).best_f;
        worst = worst.min(f - t);
        if f < t - TOL {
            fails += 1;
        }
    }
    Verdict {
        pass: fails == 0,
        detail: format!("{FAMILY_SIZE} instances, {fails} below (1-e^-γ)g(X*)-c(X*); min slack {worst:.3e}"),
    }
}

fn criterion_2() -> Verdict {
    let seeds = 20u64;
    let (mut ok, mut total) = (0u64, 0u64);
    for i in 0..FAMILY_SIZE {
        let inst = family(i);
        let t = target(inst.gamma(), exact_opt(&inst));
        let iters = 10 * default_iterations(inst.n(), inst.k());
        for s in 0..seeds {
            let f = gsemo(&inst.fork(), iters, 1000 * i + s).best_f;
            ok += (f >= t - TOL) as u64;
            total += 1;
        }
    }
    let rate = ok as f64 / total as f64;
    Verdict {
        pass: rate >= 0.95,
        detail: format!("{ok}/{total} (instance, seed) pairs meet the bound ({:.2}%, need 95%)", 100.0 * rate),
    }
}

fn criterion_3() -> Verdict {
    let (mut checked, mut fails, mut instances) = (0u64, 0u64, 0u64);
    for i in 0..120u64 {
        let n0 = 3 + (i % 6) as usize;
        let kind = SyntheticKind::ALL[(i % 3) as usize];
        let base = random_check_instance(n0, 0xd00d + i, Some(kind)).unwrap();
        let inst = augment_with_dummies(&base).unwrap();
        instances += 1;
        let (n, k, gamma) = (inst.n(), inst.k(), inst.gamma());
        let (gs, cs) = exact_opt(&inst);
        let total_c: f64 = inst.cost().per_item().iter().sum();
        let kf = k as f64;
        let f1 = |mask: u64| {
            let (g, c) = g_c(&inst, mask);
            let s = mask.count_ones() as f64;
            (1.0 - gamma / kf).powf(kf - s) * g - c + s / kf * total_c
        };
        for mask in 0u64..1 << n {
            let size = mask.count_ones() as usize;
            if size >= k {
                continue;
            }
            let base_f1 = f1(mask);
            let best_gain = (0..n)
                .filter(|v| mask >> v & 1 == 0)
                .map(|v| f1(mask | 1 << v) - base_f1)
                .fold(f64::NEG_INFINITY, f64::max);
            let bound = gamma / kf * (1.0 - gamma / kf).powf(kf - size as f64 - 1.0) * gs + (total_c - cs) / kf;
            checked += 1;
            if best_gain < bound - TOL {
                fails += 1;
            }
        }
    }
    Verdict {
        pass: fails == 0 && instances >= 100,
        detail: format!("{instances} dummy-augmented instances, {checked} subsets with |x| < k, {fails} violations"),
    }
}

fn criterion_4() -> Verdict {
    let target_steps: u64 = 1_000_000;
    let (mut steps, mut accepted, mut violations) = (0u64, 0u64, 0u64);
    let mut first_violation = String::new();
    let mut run_id = 0u64;
    while steps < target_steps {
        let n = [8usize, 12, 16, 24][(run_id % 4) as usize];
        let mut rng = ChaCha8Rng::seed_from_u64(run_id);
        let inst = if run_id % 5 == 4 {
            let edges: Vec<(usize, usize)> = (0..3 * n).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
            DvcGraph::new(n, edges).instance(rng.gen_range(1..=n / 2)).unwrap()
        } else {
            let kind = SyntheticKind::ALL[(run_id % 3) as usize];
            gsemo_submod::objectives::synthetic_instance(kind, n.min(16), rng.gen_range(1..=4), rng.gen()).unwrap()
        };
        let n = inst.n();
        let mut run = GsemoRun::new(&inst, run_id, Init::UniformRandom);
        let mut zero_seen = false;
        for _ in 0..50_000 {
            let out = run.step();
            steps += 1;
            accepted += matches!(out.outcome, gsemo_submod::solvers::InsertOutcome::Inserted { .. }) as u64;
            let members = run.population().members();
            let mut bad = None;
            if members.len() > n + 1 {
                bad = Some(format!("|P| = {} > n + 1", members.len()));
            }
            let mut sizes = vec![0u32; n + 1];
            for (a_i, a) in members.iter().enumerate() {
                sizes[a.x.cardinality()] += 1;
                for b in &members[a_i + 1..] {
                    let (fa, sa, fb, sb) = (a.value.f1, -(a.x.cardinality() as i64), b.value.f1, -(b.x.cardinality() as i64));
                    if (fa >= fb && sa >= sb) || (fb >= fa && sb >= sa) {
                        bad = Some(format!("comparable pair ({fa}, {sa}) vs ({fb}, {sb})"));
                    }
                }
            }
            if sizes.iter().any(|c| *c > 1) {
                bad = Some("two members share a cardinality".into());
            }
            let has_zero = members.iter().any(|m| m.x.is_empty());
            if zero_seen && !has_zero {
                bad = Some("all-zeros solution evicted".into());
            }
            zero_seen |= has_zero;
            if let Some(b) = bad {
                if violations == 0 {
                    first_violation = format!(" (first: run {run_id}, {b})");
                }
                violations += 1;
            }
        }
        run_id += 1;
    }
    Verdict {
        pass: violations == 0,
        detail: format!(
            "{steps} insertion attempts ({accepted} accepted) over {run_id} runs, {violations} violations{first_violation}"
        ),
    }
}

fn criterion_5() -> Verdict {
    let mut dvc_worst: f64 = 0.0;
    let mut dvc_fail = 0;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.05..0.6);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let gamma = brute_force_gamma(&GOracle::new(DvcGraph::new(n, edges))).unwrap();
        dvc_worst = dvc_worst.max((gamma - 1.0).abs());
        if (gamma - 1.0).abs() > TOL {
            dvc_fail += 1;
        }
    }
    let mut bed_fail = 0;
    let mut min_gap = f64::INFINITY;
    for seed in 0..200u64 {
        let d = 1 + (seed % 3) as usize;
        let n = 4 + (seed % 7) as usize;
        let model = bed_toy_model(d, n, seed);
        let bound = model.gamma_lower_bound();
        let exact = brute_force_gamma(&GOracle::new(model)).unwrap();
        min_gap = min_gap.min(exact - bound);
        if bound > exact + TOL {
            bed_fail += 1;
        }
    }
    Verdict {
        pass: dvc_fail == 0 && bed_fail == 0,
        detail: format!(
            "dvc: 200 graphs, max |γ-1| = {dvc_worst:.1e}, {dvc_fail} off; bed: 200 models, min(exact-bound) = {min_gap:.3e}, {bed_fail} violations"
        ),
    }
}

fn housing() -> PathBuf {
    data_dir().join("housing.csv")
}

fn criterion_6() -> Verdict {
    let p = load_bed_problem(&housing(), 7.0, 0).unwrap();
    let (n, k) = (506, 20);
    let inst = p.instance(k).unwrap();
    let mut problems = Vec::new();
    let dg_inst = inst.fork();
    let dg = distorted_greedy(&dg_inst);
    if dg_inst.g_evals() != dg.g_evals || dg.g_evals > (k * (n + 1)) as u64 {
        problems.push(format!("dg used {} (counter {})", dg.g_evals, dg_inst.g_evals()));
    }
    let mut sdg_max = [0u64; 2];
    for (j, eps) in [0.1, 0.2].into_iter().enumerate() {
        let s = sdg_sample_size(n, k, eps);
        let expected = if j == 0 { 59 } else { 41 };
        if s != expected {
            problems.push(format!("sample size for ε={eps} is {s}, expected {expected}"));
        }
        let direct = ((n as f64 / k as f64) * (1.0 / eps).ln()).ceil() as usize;
        if s != direct {
            problems.push(format!("sample size for ε={eps} is {s}, formula gives {direct}"));
        }
        for seed in 0..5 {
            let si = inst.fork();
            let r = stochastic_distorted_greedy(&si, eps, seed).unwrap();
            sdg_max[j] = sdg_max[j].max(r.g_evals);
            if si.g_evals() != r.g_evals || r.g_evals > (k * (s + 1)) as u64 {
                problems.push(format!("sdg({eps}) seed {seed} used {}", r.g_evals));
            }
        }
    }
    Verdict {
        pass: problems.is_empty(),
        detail: format!(
            "dg {} <= {}; sdg(0.1) max {} <= {}; sdg(0.2) max {} <= {}{}",
            dg.g_evals,
            k * (n + 1),
            sdg_max[0],
            k * 60,
            sdg_max[1],
            k * 42,
            if problems.is_empty() { String::new() } else { format!("; {}", problems.join("; ")) }
        ),
    }
}

fn criterion_7() -> Verdict {
    let text = format!(
        "application = bed\ndataset = {}\nsigma_multiplier = 7\nsigma_seed = 0\n\
         algorithms = gsemo, dg, sdg(0.1), sdg(0.2)\nbudgets = 5, 10, 15, 20\nrepeats = 20\nbase_seed = 1\n\
         gsemo_iterations = auto\ngsemo_init = empty\n",
        housing().display()
    );
    let cfg = ExperimentConfig::parse(&text, Path::new(".")).unwrap();
    let base = load_bed_problem(&housing(), 7.0, 0).unwrap().instance(1).unwrap();
    let res = run_experiment_on(&cfg, &base).unwrap();
    let order = ["gsemo", "dg", "sdg(0.1)", "sdg(0.2)"];
    let mut pass = true;
    let mut rows = Vec::new();
    for k in [5, 10, 15, 20] {
        let cells: Vec<_> = order.iter().map(|a| res.cell(a, k).unwrap()).collect();
        let mut marks = String::new();
        for w in cells.windows(2) {
            let se = (w[0].std_f.powi(2) / w[0].repeats as f64 + w[1].std_f.powi(2) / w[1].repeats as f64).sqrt();
            let ok = w[0].mean_f >= w[1].mean_f - se;
            pass &= ok;
            marks.push_str(if ok { " >=" } else { " <!" });
        }
        rows.push(format!(
            "k={k}: {:.4}{} {:.4}{} {:.4}{} {:.4}",
            cells[0].mean_f,
            &marks[0..3],
            cells[1].mean_f,
            &marks[3..6],
            cells[2].mean_f,
            &marks[6..9],
            cells[3].mean_f
        ));
    }
    // informational: the uniformly random start under the same budget
    let mut random_start = Vec::new();
    for k in [5, 20] {
        let inst = base.with_budget(k).unwrap();
        let cfg = GsemoConfig::new(default_iterations(inst.n(), k));
        let r = gsemo_with(&inst, &cfg, 1);
        random_start.push(format!("k={k}: {}", if r.has_feasible() { format!("{:.4}", r.best_f) } else { "no feasible".into() }));
    }
    Verdict {
        pass,
        detail: format!(
            "gsemo >= dg >= sdg(0.1) >= sdg(0.2), empty start, 20 repeats\n      {}\n      random start, 1 run: {}",
            rows.join("\n      "),
            random_start.join(", ")
        ),
    }
}

fn criterion_8() -> Verdict {
    let targets = [(3.0, 0.456), (4.0, 0.567), (7.0, 0.800)];
    let mut pass = true;
    let mut lines = Vec::new();
    for seed in 0..5u64 {
        let vals: Vec<f64> = targets
            .iter()
            .map(|(m, _)| load_bed_problem(&housing(), *m, seed).unwrap().gamma)
            .collect();
        let mut line = format!("seed {seed}:");
        for ((m, t), v) in targets.iter().zip(&vals) {
            let ok = (v - t).abs() <= 0.1;
            pass &= ok;
            line.push_str(&format!(" {m}d={v:.3}{}", if ok { "" } else { "(out)" }));
        }
        let ordered = vals[0] < vals[1] && vals[1] < vals[2];
        pass &= ordered;
        if !ordered {
            line.push_str(" (order violated)");
        }
        lines.push(line);
    }
    Verdict {
        pass,
        detail: format!("targets 0.456/0.567/0.800 ± 0.1\n      {}", lines.join("\n      ")),
    }
}

fn criterion_9() -> Verdict {
    let env_path = std::env::var_os("EMAIL_EU_CORE").map(PathBuf::from);
    let path = env_path.unwrap_or_else(|| data_dir().join("email-Eu-core.txt"));
    let (graph, source) = if path.exists() {
        (load_edge_list(&path, EdgeFormat::EdgeList).unwrap(), format!("{}", path.display()))
    } else {
        (
            heavy_tailed_digraph(1005, 25_571, 3.0, 1).unwrap(),
            "SURROGATE heavy-tailed digraph (n=1005, m=25571); email-Eu-core.txt not found".to_string(),
        )
    };
    let k = 10;
    let inst = graph.instance(k).unwrap();
    let dg = distorted_greedy(&inst.fork()).best_f;
    let cfg = GsemoConfig {
        iterations: default_iterations(inst.n(), k),
        init: Init::Empty,
        trajectory_stride: None,
    };
    let fs: Vec<f64> = (0..20).map(|s| gsemo_with(&inst.fork(), &cfg, 9000 + s).best_f).collect();
    let mean = fs.iter().sum::<f64>() / fs.len() as f64;
    Verdict {
        pass: mean >= dg,
        detail: format!("{source}\n      k=10, empty start: gsemo mean {mean:.3} over 20 runs vs dg {dg:.3}"),
    }
}

fn main() -> ExitCode {
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let criteria: [Criterion; 9] = [
        ("distorted greedy guarantee", criterion_1),
        ("GSEMO guarantee (statistical)", criterion_2),
        ("single-item gain bound", criterion_3),
        ("archive invariants", criterion_4),
        ("submodularity ratio consistency", criterion_5),
        ("evaluation accounting", criterion_6),
        ("housing ordering", criterion_7),
        ("ratio bound ballpark", criterion_8),
        ("vertex cover run", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let v = f();
        println!(
            "[{}] {id}. {name} ({:.1?}): {}",
            if v.pass { "PASS" } else { "FAIL" },
            t.elapsed(),
            v.detail
        );
        failed += !v.pass as usize;
    }
    if failed == 0 {
        println!("all selected criteria passed");
        return ExitCode::SUCCESS;
    }
    println!("{failed} criteria failed");
    if std::env::var_os("ACCEPTANCE_STRICT").is_some_and(|v| v == "1") {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
