#![allow(dead_code)]

use rand::Rng;
use tuza_core::Graph;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("simple")
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("simple")
}

pub fn clique_edges(set: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in set.iter().enumerate() {
        out.extend(set[i + 1..].iter().map(|&b| (a, b)));
    }
    out
}

/// Repeatedly isolates a vertex with a small neighborhood component and
/// drops isolated vertices, until the graph is robust or empty.
pub fn robust_core(mut g: Graph) -> Graph {
    while let Err(v) = tuza_core::graph::is_robust(&g) {
        g = g.isolate(&[v.vertex]);
        let keep: Vec<usize> = (0..g.order()).filter(|&x| g.degree(x) > 0).collect();
        g = g.induced_subgraph(&keep).expect("in range").0;
    }
    g
}
