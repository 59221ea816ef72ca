//! Exact ν and τ by branch-and-bound. Ground truth for small graphs.
//!
//! Both searches refuse inputs with more than a fixed number of triangles
//! rather than return an approximation.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, Triangle};
use crate::{Error, Result};

pub const DEFAULT_TRIANGLE_BOUND: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult<W> {
    pub value: usize,
    pub witness: Vec<W>,
    /// Search tree nodes visited.
    pub explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuzaCheck {
    pub nu: OracleResult<Triangle>,
    pub tau: OracleResult<Edge>,
    pub holds: bool,
}

/// Triangles as triples of indices into the list of edges lying on a
/// triangle.
struct Hypergraph {
    triangles: Vec<Triangle>,
    edges: Vec<Edge>,
    sides: Vec<[usize; 3]>,
    incident: Vec<Vec<usize>>,
}

impl Hypergraph {
    fn new(g: &Graph, bound: usize) -> Result<Self> {
        let triangles = g.triangles();
        if triangles.len() > bound {
            return Err(Error::OracleRefused { triangles: triangles.len(), bound });
        }
        let mut edges: Vec<Edge> = triangles.iter().flat_map(|t| t.edges()).collect();
        edges.sort_unstable();
        edges.dedup();
        let index = |e: Edge| edges.binary_search(&e).expect("triangle edge indexed");
        let sides: Vec<[usize; 3]> = triangles.iter().map(|t| t.edges().map(index)).collect();
        let mut incident = vec![Vec::new(); edges.len()];
        for (i, s) in sides.iter().enumerate() {
            for &e in s {
                incident[e].push(i);
            }
        }
        Ok(Hypergraph { triangles, edges, sides, incident })
    }
}

pub fn nu_exact(g: &Graph) -> Result<OracleResult<Triangle>> {
    nu_exact_bounded(g, DEFAULT_TRIANGLE_BOUND)
}

pub fn tau_exact(g: &Graph) -> Result<OracleResult<Edge>> {
    tau_exact_bounded(g, DEFAULT_TRIANGLE_BOUND)
}

pub fn check_tuza(g: &Graph) -> Result<TuzaCheck> {
    check_tuza_bounded(g, DEFAULT_TRIANGLE_BOUND)
}

pub fn check_tuza_bounded(g: &Graph, bound: usize) -> Result<TuzaCheck> {
    let nu = nu_exact_bounded(g, bound)?;
    let tau = tau_exact_bounded(g, bound)?;
    let holds = tau.value <= 2 * nu.value;
    Ok(TuzaCheck { nu, tau, holds })
}

pub fn nu_exact_bounded(g: &Graph, bound: usize) -> Result<OracleResult<Triangle>> {
    let h = Hypergraph::new(g, bound)?;
    let mut s = Packing {
        blocked: vec![false; h.edges.len()],
        current: Vec::new(),
        best: Vec::new(),
        explored: 0,
        h: &h,
    };
    s.search();
    let mut witness: Vec<Triangle> = s.best.iter().map(|&i| h.triangles[i]).collect();
    witness.sort_unstable();
    Ok(OracleResult { value: witness.len(), witness, explored: s.explored })
}

struct Packing<'a> {
    h: &'a Hypergraph,
    blocked: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
    explored: u64,
}

impl Packing<'_> {
    fn available(&self, t: usize) -> bool {
        self.h.sides[t].iter().all(|&e| !self.blocked[e])
    }

    fn search(&mut self) {
        self.explored += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let h = self.h;
        // live edges with the number of available triangles through each
        let mut load = vec![0usize; h.edges.len()];
        let mut live = 0;
        for t in 0..h.sides.len() {
            if self.available(t) {
                live += 1;
                for &e in &h.sides[t] {
                    load[e] += 1;
                }
            }
        }
        if live == 0 {
            return;
        }
        let free = load.iter().filter(|&&c| c > 0).count();
        if self.current.len() + live.min(free / 3) <= self.best.len() {
            return;
        }
        let e = (0..load.len())
            .filter(|&e| load[e] > 0)
            .min_by_key(|&e| load[e])
            .expect("a live triangle has live edges");
        for &t in &h.incident[e] {
            if !self.available(t) {
                continue;
            }
            for &f in &h.sides[t] {
                self.blocked[f] = true;
            }
            self.current.push(t);
            self.search();
            self.current.pop();
            for &f in &h.sides[t] {
                self.blocked[f] = false;
            }
        }
        // e stays unused
        self.blocked[e] = true;
        self.search();
        self.blocked[e] = false;
    }
}

pub fn tau_exact_bounded(g: &Graph, bound: usize) -> Result<OracleResult<Edge>> {
    let h = Hypergraph::new(g, bound)?;
    let mut s = Cover {
        deleted: vec![false; h.edges.len()],
        forbidden: vec![false; h.edges.len()],
        current: Vec::new(),
        best: (0..h.edges.len()).collect(),
        explored: 0,
        h: &h,
    };
    s.search();
    let mut witness: Vec<Edge> = s.best.iter().map(|&e| h.edges[e]).collect();
    witness.sort_unstable();
    Ok(OracleResult { value: witness.len(), witness, explored: s.explored })
}

struct Cover<'a> {
    h: &'a Hypergraph,
    deleted: Vec<bool>,
    forbidden: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
    explored: u64,
}

impl Cover<'_> {
    fn hit(&self, t: usize) -> bool {
        self.h.sides[t].iter().any(|&e| self.deleted[e])
    }

    /// Greedy edge-disjoint packing of unhit triangles.
    fn lower_bound(&self) -> usize {
        let mut used = vec![false; self.h.edges.len()];
        let mut count = 0;
        for (t, s) in self.h.sides.iter().enumerate() {
            if !self.hit(t) && s.iter().all(|&e| !used[e]) {
                for &e in s {
                    used[e] = true;
                }
                count += 1;
            }
        }
        count
    }

    fn search(&mut self) {
        self.explored += 1;
        let Some(t) = (0..self.h.sides.len()).find(|&t| !self.hit(t)) else {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        if self.current.len() + self.lower_bound() >= self.best.len() {
            return;
        }
        let sides = self.h.sides[t];
        let mut newly_forbidden = Vec::new();
        for e in sides {
            if self.forbidden[e] {
                continue;
            }
            self.deleted[e] = true;
            self.current.push(e);
            self.search();
            self.current.pop();
            self.deleted[e] = false;
            // later branches leave e in place
            self.forbidden[e] = true;
            newly_forbidden.push(e);
        }
        for e in newly_forbidden {
            self.forbidden[e] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Literal definitions over all subsets; only for a handful of triangles.
    fn nu_by_subsets(g: &Graph) -> usize {
        let ts = g.triangles();
        assert!(ts.len() <= 16);
        (0u32..1 << ts.len())
            .filter(|&mask| {
                let chosen: Vec<Edge> = (0..ts.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .flat_map(|i| ts[i].edges())
                    .collect();
                let mut dedup = chosen.clone();
                dedup.sort_unstable();
                dedup.dedup();
                dedup.len() == chosen.len()
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn tau_by_subsets(g: &Graph) -> usize {
        let es = g.edges();
        assert!(es.len() <= 16);
        (0u32..1 << es.len())
            .filter(|&mask| {
                let removed: Vec<Edge> =
                    (0..es.len()).filter(|&i| mask >> i & 1 == 1).map(|i| es[i]).collect();
                !g.without_edges(removed.iter()).has_triangle()
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn assert_witnesses(g: &Graph, nu: &OracleResult<Triangle>, tau: &OracleResult<Edge>) {
        let mut edges: Vec<Edge> = nu.witness.iter().flat_map(|t| t.edges()).collect();
        assert!(nu.witness.iter().all(|t| t.is_in(g)));
        edges.sort_unstable();
        edges.dedup();
        assert_eq!(edges.len(), 3 * nu.value);
        assert_eq!(tau.witness.len(), tau.value);
        assert!(!g.without_edges(tau.witness.iter()).has_triangle());
    }

    #[test]
    fn small_values() {
        let cases = [
            (complete(3), 1, 1),
            (complete(4), 1, 2),
            (complete(5), 2, 4),
            (complete(6), 4, 6),
            (complete(7), 7, 9),
            (bowtie(), 2, 2),
            (cycle(5), 0, 0),
            (petersen(), 0, 0),
            (wheel(5), 2, 3),
            (octahedron(), 4, 4),
            (k4_chain(1), 1, 2),
            (k4_chain(2), 2, 4),
            (k4_chain(3), 3, 6),
        ];
        for (g, nu, tau) in cases {
            let check = check_tuza(&g).unwrap();
            assert_eq!((check.nu.value, check.tau.value), (nu, tau));
            assert_witnesses(&g, &check.nu, &check.tau);
            assert!(check.holds);
            assert!(check.nu.explored >= 1 && check.tau.explored >= 1);
        }
    }

    #[test]
    fn disjoint_k4s_add_up() {
        let mut g = complete(4);
        for k in 1..=3 {
            let check = check_tuza(&g).unwrap();
            assert_eq!((check.nu.value, check.tau.value), (k, 2 * k));
            g = disjoint_union(&g, &complete(4));
        }
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(3..=7);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.55))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            if g.triangles().len() > 16 || g.size() > 16 {
                continue;
            }
            assert_eq!(nu_exact(&g).unwrap().value, nu_by_subsets(&g));
            assert_eq!(tau_exact(&g).unwrap().value, tau_by_subsets(&g));
        }
    }

    #[test]
    fn larger_cliques() {
        // K9 has a Steiner triple system; K9's max triangle-free subgraph is K_{4,5}
        let g = complete(9);
        assert_eq!(nu_exact(&g).unwrap().value, 12);
        assert_eq!(tau_exact(&g).unwrap().value, 36 - 20);
    }

    #[test]
    fn refuses_above_bound() {
        let g = complete(12);
        assert!(matches!(
            nu_exact(&g),
            Err(Error::OracleRefused { triangles: 220, bound: 200 })
        ));
        assert!(tau_exact(&g).is_err());
        assert!(check_tuza_bounded(&complete(5), 9).is_err());
        assert_eq!(check_tuza_bounded(&complete(5), 10).unwrap().tau.value, 4);
    }

    #[test]
    fn empty_graphs() {
        let r = nu_exact(&Graph::empty(0)).unwrap();
        assert_eq!((r.value, r.witness.len()), (0, 0));
        assert_eq!(tau_exact(&Graph::empty(3)).unwrap().value, 0);
    }
}
