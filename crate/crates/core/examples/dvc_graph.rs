//! Directed vertex cover with degree costs: distorted greedy against GSEMO.
//!
//! ```text
//! cargo run --release --example dvc_graph -- [edge-list] [k]
//! ```
//!
//! Without an edge list a seeded heavy-tailed digraph of the same size as
//! email-Eu-core (1005 vertices, 25571 edges) is generated.

use std::path::Path;
use std::time::Instant;

use gsemo_submod::objectives::{heavy_tailed_digraph, load_edge_list, EdgeFormat};
use gsemo_submod::solvers::{default_iterations, distorted_greedy, gsemo_with, stochastic_distorted_greedy, GsemoConfig, Init};

fn main() -> gsemo_submod::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let graph = match args.first() {
        Some(path) => load_edge_list(Path::new(path), EdgeFormat::EdgeList)?,
        None => heavy_tailed_digraph(1005, 25_571, 3.0, 1)?,
    };
    let k: usize = args.get(1).map_or(10, |s| s.parse().expect("k must be an integer"));
    let max_deg = (0..graph.n()).map(|v| graph.out_degree(v)).max().unwrap_or(0);
    println!("graph: n = {}, edges = {}, max out-degree = {max_deg}", graph.n(), graph.edge_count());
    let inst = graph.instance(k)?;

    let dg = distorted_greedy(&inst.fork());
    println!("dg        f = {:>10.3}  evals = {}", dg.best_f, dg.g_evals);
    for eps in [0.1, 0.2] {
        let r = stochastic_distorted_greedy(&inst.fork(), eps, 1)?;
        println!("sdg({eps})  f = {:>10.3}  evals = {}", r.best_f, r.g_evals);
    }
    let iterations = default_iterations(inst.n(), k);
    for init in [Init::Empty, Init::UniformRandom] {
        let t = Instant::now();
        let cfg = GsemoConfig { iterations, init, trajectory_stride: None };
        let r = gsemo_with(&inst.fork(), &cfg, 1);
        println!(
            "gsemo ({init:?} start, {iterations} iterations)  f = {:>10.3}  [{:.1?}]",
            r.best_f,
            t.elapsed()
        );
    }
    Ok(())
}
