//! Small named graphs used by tests, fixtures and the CLI.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// K_{1,k} with center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
}

/// Triangles 012 and 034 sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, e).unwrap()
}

/// Hub `k` joined to a k-cycle on `0..k`.
pub fn wheel(k: usize) -> Graph {
    let mut g: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    g.extend((0..k).map(|i| (i, k)));
    Graph::from_edges(k + 1, g).unwrap()
}

/// K2 ∨ complement(K_r): spine 0-1, pages 2..r+2 adjacent to both spine vertices.
pub fn book(r: usize) -> Graph {
    let mut e = vec![(0, 1)];
    for p in 2..r + 2 {
        e.push((0, p));
        e.push((1, p));
    }
    Graph::from_edges(r + 2, e).unwrap()
}

/// K_{2,2,2}.
pub fn octahedron() -> Graph {
    complete(6).without_edges(&[
        super::Edge::new(0, 1),
        super::Edge::new(2, 3),
        super::Edge::new(4, 5),
    ])
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    let edges = a
        .edges()
        .into_iter()
        .map(|e| (e.u(), e.v()))
        .chain(b.edges().into_iter().map(|e| (e.u() + shift, e.v() + shift)));
    Graph::from_edges(a.order() + b.order(), edges).unwrap()
}

/// `a` ∨ `b`: disjoint union plus all edges between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    let mut g: Vec<(usize, usize)> = disjoint_union(a, b)
        .edges()
        .into_iter()
        .map(|e| (e.u(), e.v()))
        .collect();
    for i in 0..a.order() {
        for j in 0..b.order() {
            g.push((i, shift + j));
        }
    }
    Graph::from_edges(a.order() + b.order(), g).unwrap()
}

/// `k` copies of K4 glued in a chain, consecutive copies sharing one vertex.
pub fn k4_chain(k: usize) -> Graph {
    assert!(k >= 1);
    let n = 3 * k + 1;
    let mut e = Vec::new();
    for c in 0..k {
        let base = 3 * c;
        let vs = [base, base + 1, base + 2, base + 3];
        for i in 0..4 {
            for j in i + 1..4 {
                e.push((vs[i], vs[j]));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}
