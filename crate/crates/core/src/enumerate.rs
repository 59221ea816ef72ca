//! Isomorph-free generation of all graphs on a few vertices, for exhaustive
//! test suites.
//!
//! Graphs are grown one vertex at a time and deduplicated by a canonical
//! code: vertices are split into colour-refinement cells, and the code is the
//! smallest adjacency bit string over all orderings that list the cells in
//! their canonical order.

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph};
use crate::io::emit_graph6;
use crate::par::Execution;
use crate::{Error, Result};

/// 12346 graphs on eight vertices; nine would be 274668.
pub const MAX_ORDER: usize = 8;
/// Orders up to this fit a canonical code in 64 bits.
const MAX_CODE_ORDER: usize = 11;

fn bit(i: usize, j: usize) -> u64 {
    debug_assert!(i < j);
    1 << (63 - (j * (j - 1) / 2 + i))
}

/// Stable colour refinement; colours are ranks of sorted signatures so the
/// result depends only on the isomorphism class.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).map(|u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Canonical adjacency code; equal exactly for isomorphic graphs of equal
/// order.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MAX_CODE_ORDER {
        return Err(Error::TooLarge { what: "canonical code", limit: MAX_CODE_ORDER, got: n });
    }
    let colour = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    let slots: Vec<usize> = order.iter().map(|&v| colour[v]).collect();
    let mut search = Canon {
        g,
        colour: &colour,
        slots: &slots,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.extend(0);
    Ok(search.best.expect("at least one ordering"))
}

struct Canon<'a> {
    g: &'a Graph,
    colour: &'a [usize],
    slots: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
}

impl Canon<'_> {
    /// `code` holds all pairs among the placed vertices.
    fn extend(&mut self, code: u64) {
        let k = self.placed.len();
        if let Some(best) = self.best {
            let prefix = if k < 2 { 0 } else { !0u64 << (64 - k * (k - 1) / 2) };
            if code & prefix > best & prefix {
                return;
            }
        }
        if k == self.slots.len() {
            self.best = Some(self.best.map_or(code, |b| b.min(code)));
            return;
        }
        for v in 0..self.slots.len() {
            if self.used[v] || self.colour[v] != self.slots[k] {
                continue;
            }
            let mut next = code;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    next |= bit(i, k);
                }
            }
            self.used[v] = true;
            self.placed.push(v);
            self.extend(next);
            self.placed.pop();
            self.used[v] = false;
        }
    }
}

pub fn from_code(n: usize, code: u64) -> Graph {
    let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| code & bit(i, j) != 0);
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(from_code(g.order(), canonical_code(g)?))
}

/// One representative per isomorphism class on exactly `n` vertices, sorted
/// by graph6.
pub fn graphs_on(n: usize, exec: Execution) -> Result<Vec<Graph>> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge { what: "enumeration", limit: MAX_ORDER, got: n });
    }
    let mut layer = vec![Graph::empty(0)];
    for k in 1..=n {
        let children: Vec<Vec<u64>> = exec.map(&layer, |g| {
            (0u32..1 << (k - 1))
                .map(|mask| {
                    let edges = g
                        .edges()
                        .into_iter()
                        .chain((0..k - 1).filter(|i| mask >> i & 1 == 1).map(|i| Edge::new(i, k - 1)));
                    canonical_code(&Graph::from_edge_set(k, edges)).expect("order checked")
                })
                .collect()
        });
        let codes: BTreeSet<u64> = children.into_iter().flatten().collect();
        layer = codes.into_iter().map(|c| from_code(k, c)).collect();
    }
    layer.sort_by_cached_key(emit_graph6);
    Ok(layer)
}

/// All graphs on 1..=max_n vertices, ordered by order then graph6.
pub fn graphs_up_to(max_n: usize, exec: Execution) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(graphs_on(n, exec)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> =
            (0..=6).map(|n| graphs_on(n, Execution::default()).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn connected_counts() {
        let connected = |n| {
            graphs_on(n, Execution::default()).unwrap().iter().filter(|g| g.is_connected()).count()
        };
        assert_eq!([connected(4), connected(5), connected(6)], [6, 21, 112]);
    }

    #[test]
    fn codes_are_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for g in [petersen(), wheel(6), octahedron(), k4_chain(2), cycle(7)] {
            let code = canonical_code(&g).unwrap();
            for _ in 0..10 {
                let mut p: Vec<usize> = (0..g.order()).collect();
                p.shuffle(&mut rng);
                let h = Graph::from_edge_set(g.order(), g.edges().into_iter().map(|e| e.map(|x| p[x])));
                assert_eq!(canonical_code(&h).unwrap(), code);
            }
        }
        // same degree sequence, not isomorphic
        let c6 = cycle(6);
        let two_triangles = disjoint_union(&complete(3), &complete(3));
        assert_ne!(canonical_code(&c6).unwrap(), canonical_code(&two_triangles).unwrap());
    }

    #[test]
    fn limits() {
        assert!(graphs_on(9, Execution::Sequential).is_err());
        assert!(canonical_code(&Graph::empty(12)).is_err());
        assert_eq!(canonical_form(&complete(4)).unwrap(), complete(4));
    }
}
