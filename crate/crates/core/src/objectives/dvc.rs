//! Directed vertex cover with costs: `g(X) = Σ_{v ∈ N(X) ∪ X} w(v)` where
//! `N(X)` is the set of heads of edges leaving `X`.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use rand::distributions::WeightedIndex;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Distribution;

use crate::error::{Error, Result};
use crate::problem::{GOracle, ModularCost, ProblemInstance, SetFunction, Subset};

/// Out-degree above which vertex cost grows linearly.
pub const DVC_DEGREE_THRESHOLD: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFormat {
    /// One directed edge `u v` per line.
    EdgeList,
    /// One undirected edge per line, expanded into `u→v` and `v→u`.
    UndirectedEdgeList,
}

impl FromStr for EdgeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge_list" | "edge-list" | "directed" => Ok(EdgeFormat::EdgeList),
            "undirected_edge_list" | "undirected-edge-list" | "undirected" => {
                Ok(EdgeFormat::UndirectedEdgeList)
            }
            other => Err(Error::usage(format!("unknown edge format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DvcGraph {
    out: Vec<Vec<usize>>,
    weights: Vec<f64>,
    /// `{v} ∪ out(v)` per vertex.
    closed: Vec<Subset>,
    unit_weights: bool,
    /// Original vertex labels, indexed by dense id.
    labels: Vec<u64>,
}

impl DvcGraph {
    /// Unit-weight graph on `n` vertices. Duplicate edges are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::with_weights(vec![1.0; n], edges)
    }

    pub fn with_weights(weights: Vec<f64>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        assert!(weights.iter().all(|w| *w >= 0.0), "vertex weights must be non-negative");
        let n = weights.len();
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            sets[u].insert(v);
        }
        let out: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let closed = out
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut s = Subset::from_indices(n, nb.iter().copied());
                s.insert(v);
                s
            })
            .collect();
        let unit_weights = weights.iter().all(|w| *w == 1.0);
        DvcGraph {
            out,
            weights,
            closed,
            unit_weights,
            labels: (0..n as u64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// `1 + max(d(v) - 6, 0)` for every vertex.
    pub fn degree_costs(&self) -> Vec<f64> {
        (0..self.n())
            .map(|v| 1.0 + self.out_degree(v).saturating_sub(DVC_DEGREE_THRESHOLD) as f64)
            .collect()
    }

    /// Instance with `w ≡` the graph weights, degree costs and `γ = 1`.
    pub fn instance(self, k: usize) -> Result<ProblemInstance> {
        let cost = ModularCost::new(self.degree_costs())?;
        ProblemInstance::new(GOracle::new(self), cost, k, 1.0)
    }

    pub fn g(&self, x: &Subset) -> f64 {
        assert_eq!(x.len(), self.n(), "subset size does not match graph");
        let nwords = x.words().len();
        let mut covered = vec![0u64; nwords];
        for v in x.iter() {
            for (c, w) in covered.iter_mut().zip(self.closed[v].words()) {
                *c |= *w;
            }
        }
        if self.unit_weights {
            covered.iter().map(|w| w.count_ones() as f64).sum()
        } else {
            let mut total = 0.0;
            for (wi, word) in covered.iter().enumerate() {
                let mut bits = *word;
                while bits != 0 {
                    let tz = bits.trailing_zeros() as usize;
                    total += self.weights[wi * 64 + tz];
                    bits &= bits - 1;
                }
            }
            total
        }
    }
}

impl SetFunction for DvcGraph {
    fn ground_size(&self) -> usize {
        self.n()
    }

    fn value(&self, x: &Subset) -> f64 {
        self.g(x)
    }

    fn describe(&self) -> String {
        format!("directed vertex cover ({} vertices, {} edges)", self.n(), self.edge_count())
    }
}

/// Parses whitespace-separated `u v` pairs. Lines starting with `#` or `%`
/// and blank lines are skipped. Vertex labels are mapped to `0..n` in
/// ascending label order; for labels already dense in `0..n` this is the
/// identity.
pub fn parse_edge_list<R: BufRead>(reader: R, format: EdgeFormat, source: &Path) -> Result<DvcGraph> {
    let mut raw = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::ingest(source, e.to_string()))?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
            continue;
        }
        let mut parts = t.split_whitespace();
        let parse = |tok: Option<&str>| tok.and_then(|s| s.parse::<u64>().ok());
        let (u, v) = match (parse(parts.next()), parse(parts.next()), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::ingest(
                    source,
                    format!("line {}: expected two vertex ids, got {t:?}", lineno + 1),
                ))
            }
        };
        raw.push((u, v));
    }
    let labels: Vec<u64> = raw
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let id = |l: u64| labels.binary_search(&l).expect("label collected above");
    let mut edges = Vec::with_capacity(raw.len() * 2);
    for &(u, v) in &raw {
        edges.push((id(u), id(v)));
        if format == EdgeFormat::UndirectedEdgeList {
            edges.push((id(v), id(u)));
        }
    }
    let mut g = DvcGraph::new(labels.len(), edges);
    g.labels = labels;
    Ok(g)
}

pub fn load_edge_list(path: &Path, format: EdgeFormat) -> Result<DvcGraph> {
    let f = File::open(path).map_err(|e| Error::ingest(path, e.to_string()))?;
    parse_edge_list(BufReader::new(f), format, path)
}

/// Loads a graph and builds the unit-weight, degree-cost instance with `γ = 1`.
pub fn build_dvc_instance(path: &Path, format: EdgeFormat, k: usize) -> Result<ProblemInstance> {
    load_edge_list(path, format)?.instance(k)
}

/// Seeded random digraph with exactly `m` distinct edges, no self-loops and
/// heavy-tailed degrees: endpoints are drawn with Chung-Lu weights
/// `w_r ∝ (r + 1)^(-1/(β - 1))` over independently shuffled vertex ranks for
/// tails and heads.
pub fn heavy_tailed_digraph(n: usize, m: usize, beta: f64, seed: u64) -> Result<DvcGraph> {
    if n < 2 || m > n * (n - 1) {
        return Err(Error::usage(format!("cannot place {m} distinct edges on {n} vertices")));
    }
    if beta <= 1.0 {
        return Err(Error::usage(format!("degree exponent must exceed 1, got {beta}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranked: Vec<f64> = (0..n).map(|r| ((r + 1) as f64).powf(-1.0 / (beta - 1.0))).collect();
    let mut tail_rank: Vec<usize> = (0..n).collect();
    let mut head_rank = tail_rank.clone();
    tail_rank.shuffle(&mut rng);
    head_rank.shuffle(&mut rng);
    let tails = WeightedIndex::new(tail_rank.iter().map(|r| ranked[*r])).expect("positive weights");
    let heads = WeightedIndex::new(head_rank.iter().map(|r| ranked[*r])).expect("positive weights");
    let mut edges = BTreeSet::new();
    while edges.len() < m {
        let (u, v) = (tails.sample(&mut rng), heads.sample(&mut rng));
        if u != v {
            edges.insert((u, v));
        }
    }
    Ok(DvcGraph::new(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn toy() -> DvcGraph {
        DvcGraph::new(3, [(0, 1), (0, 2)])
    }

    #[test]
    fn toy_graph_values() {
        let g = toy();
        assert_eq!(g.g(&Subset::empty(3)), 0.0);
        assert_eq!(g.g(&Subset::from_indices(3, [0])), 3.0);
        assert_eq!(g.g(&Subset::from_indices(3, [1])), 1.0);
        assert_eq!(g.g(&Subset::full(3)), 3.0);
    }

    #[test]
    fn singleton_ignores_self_loop() {
        let g = DvcGraph::with_weights(vec![2.0, 3.0, 5.0], [(0, 0), (0, 1)]);
        assert_eq!(g.g(&Subset::from_indices(3, [0])), 5.0);
        assert_eq!(g.g(&Subset::full(3)), 10.0);
    }

    #[test]
    fn degree_costs() {
        let edges: Vec<_> = (1..=10).map(|v| (0, v)).chain((1..=6).map(|v| (1, v + 1))).collect();
        let g = DvcGraph::new(11, edges);
        let c = g.degree_costs();
        assert_eq!(c[0], 5.0);
        assert_eq!(c[1], 1.0);
        assert_eq!(c[2], 1.0);
    }

    #[test]
    fn parse_snap_style() {
        let text = "# comment\n0 1\n0\t2\n\n2 0\n";
        let g = parse_edge_list(text.as_bytes(), EdgeFormat::EdgeList, Path::new("t")).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.out_neighbors(0), &[1, 2]);
    }

    #[test]
    fn undirected_expands_both_directions() {
        let text = "1 2\n2 3\n";
        let g = parse_edge_list(text.as_bytes(), EdgeFormat::UndirectedEdgeList, Path::new("t")).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels(), &[1, 2, 3]);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.out_neighbors(1), &[0, 2]);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let text = "0 1\n0 x\n";
        let err = parse_edge_list(text.as_bytes(), EdgeFormat::EdgeList, Path::new("g.txt"))
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_edge_list("1 2 3\n".as_bytes(), EdgeFormat::EdgeList, Path::new("g"))
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn instance_uses_unit_ratio() {
        let inst = toy().instance(2).unwrap();
        assert_eq!(inst.gamma(), 1.0);
        assert_eq!(inst.cost().per_item(), &[1.0, 1.0, 1.0]);
    }

    fn arb_graph() -> impl Strategy<Value = DvcGraph> {
        (2usize..14).prop_flat_map(|n| {
            (
                proptest::collection::vec(0.0f64..3.0, n),
                proptest::collection::vec((0..n, 0..n), 0..3 * n),
            )
                .prop_map(|(w, e)| DvcGraph::with_weights(w, e))
        })
    }

    proptest! {
        #[test]
        fn submodular_and_monotone(g in arb_graph(), a in any::<u64>(), b in any::<u64>()) {
            let n = g.n();
            let x = Subset::from_mask(n, a);
            let y = Subset::from_mask(n, b);
            let lhs = g.g(&x.union(&y)) + g.g(&x.intersection(&y));
            let rhs = g.g(&x) + g.g(&y);
            prop_assert!(lhs <= rhs + 1e-9);
            prop_assert!(g.g(&x.intersection(&y)) <= g.g(&x) + 1e-9);
            prop_assert!(g.g(&x) <= g.g(&x.union(&y)) + 1e-9);
        }
    }

    #[test]
    fn heavy_tailed_digraph_shape() {
        let g = heavy_tailed_digraph(300, 3000, 2.2, 4).unwrap();
        assert_eq!(g.edge_count(), 3000);
        assert!((0..300).all(|v| !g.out_neighbors(v).contains(&v)));
        let max = (0..300).map(|v| g.out_degree(v)).max().unwrap();
        assert!(max > 5 * 3000 / 300, "max out-degree {max}");
        let h = heavy_tailed_digraph(300, 3000, 2.2, 4).unwrap();
        assert_eq!(g.degree_costs(), h.degree_costs());
        assert!(heavy_tailed_digraph(3, 7, 2.0, 0).is_err());
    }
}
