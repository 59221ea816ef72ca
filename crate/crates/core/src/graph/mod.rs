//! Immutable simple graphs and the local primitives the rest of the crate
//! is built from: neighborhoods, induced subgraphs, triangles, blocks,
//! matchings and vertex covers.

mod blocks;
pub mod families;
mod local;
mod matching;
mod triangle;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use blocks::{blocks, has_long_odd_cycle, is_hin_block, Blocks};
pub use local::{is_robust, is_thin, subsumes, RobustnessViolation};
pub use matching::{is_matching, is_vertex_cover, maximum_matching, minimum_vertex_cover};
pub use triangle::Triangle;

/// Unordered edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }

    pub fn map(self, f: impl Fn(usize) -> usize) -> Edge {
        Edge::new(f(self.0), f(self.1))
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = String;

    fn try_from([a, b]: [usize; 2]) -> std::result::Result<Self, Self::Error> {
        if a == b {
            Err(format!("degenerate edge [{a}, {b}]"))
        } else {
            Ok(Edge::new(a, b))
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Simple undirected graph on vertices `0..n` with bitset adjacency rows.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list; loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if g.adj[a][b] {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
            g.m += 1;
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub(crate) fn from_edge_set<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            if !g.adj[e.0][e.1] {
                g.adj[e.0].insert(e.1);
                g.adj[e.1].insert(e.0);
                g.m += 1;
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u][v]
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Open neighborhood N(v) as a bitset row.
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// N(v), ascending.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        self.adj[v].ones().collect()
    }

    /// N[v] = N(v) ∪ {v} as a bitset.
    pub fn closed_row(&self, v: usize) -> FixedBitSet {
        let mut r = self.adj[v].clone();
        r.insert(v);
        r
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u].intersection(&self.adj[v]).collect()
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &FixedBitSet) -> usize {
        self.adj[v].intersection_count(set)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.order() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    /// Edges with both endpoints in `set`, lexicographic.
    pub fn edges_within(&self, set: &[usize]) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if self.has_edge(a, b) {
                    out.push(Edge::new(a, b));
                }
            }
        }
        out.sort();
        out
    }

    /// G[W] together with the map from local ids back to ids of `self`.
    /// The local order follows ascending original ids.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = w.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            self.check_vertex(v)?;
        }
        let k = map.len();
        let mut sub = Graph::empty(k);
        for i in 0..k {
            for j in i + 1..k {
                if self.adj[map[i]][map[j]] {
                    sub.adj[i].insert(j);
                    sub.adj[j].insert(i);
                    sub.m += 1;
                }
            }
        }
        if let Some(labels) = &self.labels {
            sub.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((sub, map))
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut c = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u][v] {
                    c.adj[u].insert(v);
                    c.adj[v].insert(u);
                    c.m += 1;
                }
            }
        }
        c.labels = self.labels.clone();
        c
    }

    /// G − D for an edge set D; edges of D absent from G are ignored.
    pub fn without_edges<'a, I>(&self, edges: I) -> Graph
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for e in edges {
            if g.adj[e.0][e.1] {
                g.adj[e.0].set(e.1, false);
                g.adj[e.1].set(e.0, false);
                g.m -= 1;
            }
        }
        g
    }

    /// Removes every edge incident to `vertices`, keeping ids stable.
    pub fn isolate(&self, vertices: &[usize]) -> Graph {
        let mut g = self.clone();
        for &v in vertices {
            let nbrs: Vec<usize> = g.adj[v].ones().collect();
            for u in nbrs {
                g.adj[u].set(v, false);
                g.adj[v].set(u, false);
                g.m -= 1;
            }
        }
        g
    }

    /// Vertex sets of connected components, each ascending, ordered by least
    /// element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.adj[x].ones() {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let cx = color[x].unwrap();
                for y in self.adj[x].ones() {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            stack.push(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Every triangle once, lexicographic on sorted vertex triples.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in 0..self.order() {
            for b in self.adj[a].ones().filter(|&b| b > a) {
                for c in self.adj[a].intersection(&self.adj[b]).filter(|&c| c > b) {
                    out.push(Triangle::from_sorted([a, b, c]));
                }
            }
        }
        out
    }

    /// Triangles containing `v`, lexicographic.
    pub fn triangles_at(&self, v: usize) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in self.adj[v].ones() {
            for b in self.adj[v].intersection(&self.adj[a]).filter(|&b| b > a) {
                out.push(Triangle::new(v, a, b));
            }
        }
        out.sort();
        out
    }

    pub fn in_triangle(&self, v: usize) -> bool {
        self.adj[v]
            .ones()
            .any(|a| self.adj[v].intersection(&self.adj[a]).next().is_some())
    }

    pub fn has_triangle(&self) -> bool {
        (0..self.order()).any(|v| self.in_triangle(v))
    }

    /// Number of triangle-incident vertices.
    pub fn triangle_support(&self) -> usize {
        (0..self.order()).filter(|&v| self.in_triangle(v)).count()
    }

    pub(crate) fn row_of(&self, set: &[usize]) -> FixedBitSet {
        let mut r = FixedBitSet::with_capacity(self.order());
        for &v in set {
            r.insert(v);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn k4_triangles_in_order() {
        let t: Vec<[usize; 3]> = complete(4).triangles().iter().map(|t| t.vertices()).collect();
        assert_eq!(t, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
    }

    #[test]
    fn c5_is_triangle_free() {
        assert!(cycle(5).triangles().is_empty());
        assert!(!cycle(5).has_triangle());
    }

    #[test]
    fn bowtie_triangles() {
        let t: Vec<[usize; 3]> = bowtie().triangles().iter().map(|t| t.vertices()).collect();
        assert_eq!(t, vec![[0, 1, 2], [0, 3, 4]]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = complete(4);
        let (whole, map) = k4.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(whole, k4);
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (k3, _) = k4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, complete(3));
        let b = bowtie();
        let (sub, map) = b.induced_subgraph(&b.neighborhood(0)).unwrap();
        assert_eq!(map, vec![1, 2, 3, 4]);
        let lifted: Vec<Edge> = sub.edges().iter().map(|e| e.map(|x| map[x])).collect();
        assert_eq!(lifted, vec![Edge::new(1, 2), Edge::new(3, 4)]);
        assert!(matches!(
            k4.induced_subgraph(&[0, 7]),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(5).complement(), Graph::empty(5));
        let c = cycle(5).complement();
        // 0-2-4-1-3-0 is a 5-cycle
        for (a, b) in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)] {
            assert!(c.has_edge(a, b));
        }
        assert_eq!(c.size(), 5);
        assert_eq!(petersen().complement().complement(), petersen());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn isolate_and_remove_keep_ids() {
        let k4 = complete(4);
        let g = k4.without_edges(&[Edge::new(1, 2), Edge::new(0, 3)]).isolate(&[0]);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![Edge::new(1, 3), Edge::new(2, 3)]);
    }

    #[test]
    fn edge_serializes_as_pair() {
        let e = Edge::new(4, 1);
        assert_eq!(serde_json::to_string(&e).unwrap(), "[1,4]");
        let back: Edge = serde_json::from_str("[4,1]").unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<Edge>("[2,2]").is_err());
    }
}
