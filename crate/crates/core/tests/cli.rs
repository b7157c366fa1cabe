use std::path::{Path, PathBuf};
use std::process::Command;

use gsemo_submod::cli;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("gsemo-submod").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn solve_toy_graph_with_distorted_greedy() {
    let toy = data("toy.txt");
    let (code, out, err) = run(&[
        "solve",
        "--app",
        "dvc",
        "--edges",
        toy.to_str().unwrap(),
        "--k",
        "1",
        "--algorithm",
        "dg",
        "--vertex-cost",
        "0.5",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("subset: [0]\n"), "{out}");
    assert!(out.contains("f: 2.5\n"), "{out}");
    assert!(out.contains("g: 3\n"), "{out}");
    assert!(out.contains("c: 0.5\n"), "{out}");
    assert!(out.contains("gamma: 1\n"), "{out}");
}

#[test]
fn budget_above_n_is_a_validation_error() {
    let toy = data("toy.txt");
    let (code, _, err) = run(&["solve", "--app", "dvc", "--edges", toy.to_str().unwrap(), "--k", "4"]);
    assert_eq!(code, 1);
    assert!(err.contains("k = 4"), "{err}");
}

#[test]
fn repeated_solve_prints_identical_reports() {
    let housing = data("housing.csv");
    let args = [
        "solve",
        "--app",
        "bed",
        "--features",
        housing.to_str().unwrap(),
        "--k",
        "3",
        "--algorithm",
        "sdg",
        "--epsilon",
        "0.2",
        "--seed",
        "11",
    ];
    let a = run(&args);
    assert_eq!(a.0, 0, "{}", a.2);
    assert_eq!(a, run(&args));
}

#[test]
fn gsemo_solve_reports_iterations_plus_one_evaluations() {
    let (code, out, err) = run(&[
        "solve",
        "--app",
        "synthetic",
        "--kind",
        "bed_toy",
        "--n",
        "9",
        "--k",
        "2",
        "--iterations",
        "250",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("g_evals: 251\n"), "{out}");
}

#[test]
fn brute_force_on_large_instance_is_a_capacity_error() {
    let housing = data("housing.csv");
    let (code, _, err) = run(&[
        "solve",
        "--app",
        "bed",
        "--features",
        housing.to_str().unwrap(),
        "--k",
        "2",
        "--algorithm",
        "brute",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("capacity"), "{err}");
}

#[test]
fn gamma_on_small_graph_is_one() {
    let toy = data("toy.txt");
    let (code, out, err) = run(&["gamma", "--app", "dvc", "--edges", toy.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("exact gamma: 1\n"), "{out}");
}

#[test]
fn gamma_on_toy_bed_prints_bound_and_exact() {
    let (code, out, err) = run(&["gamma", "--app", "synthetic", "--kind", "bed_toy", "--n", "8", "--instance-seed", "4"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("analytic lower bound: "), "{out}");
    assert!(out.contains("exact gamma: "), "{out}");
    assert!(out.contains("bound <= exact: ok"), "{out}");
}

#[test]
fn gamma_on_housing_skips_enumeration() {
    let housing = data("housing.csv");
    let (code, out, err) = run(&["gamma", "--app", "bed", "--features", housing.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("n: 506"), "{out}");
    assert!(out.contains("skipped"), "{out}");
}

#[test]
fn verify_passes_and_is_reproducible() {
    let args = ["verify", "--n", "7", "--trials", "12", "--seed", "5"];
    let a = run(&args);
    assert_eq!(a.0, 0, "{}\n{}", a.1, a.2);
    assert!(a.1.contains("distorted greedy: 12/12"), "{}", a.1);
    assert_eq!(a, run(&args));
    let (code, out, _) = run(&["verify", "--trials", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"));
}

#[test]
fn verify_rejects_oversized_n() {
    let (code, _, err) = run(&["verify", "--n", "30", "--trials", "1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gsemo-submod");
    let toy = data("toy.txt");
    let ok = Command::new(bin)
        .args(["solve", "--app", "dvc", "--edges", toy.to_str().unwrap(), "--k", "1", "--algorithm", "dg"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let usage = Command::new(bin).args(["solve", "--nope"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    let missing = Command::new(bin)
        .args(["solve", "--app", "dvc", "--edges", "/definitely/missing.txt", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("missing.txt"));
}
