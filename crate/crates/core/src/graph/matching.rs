//! Exact matching and vertex cover by branch and bound. Inputs are
//! neighborhoods or desk-scale graphs, so exponential worst cases are fine;
//! both searches visit candidates in lexicographic order and return the
//! lexicographically least optimum.

use super::{Edge, Graph};

/// Maximum matching; lexicographically least sorted edge list among the
/// maximum ones.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let active = adj.iter().filter(|a| !a.is_empty()).count();
    let mut search = MatchingSearch {
        adj,
        matched: vec![false; n],
        current: Vec::new(),
        best: Vec::new(),
        cap: active / 2,
        found_cap: false,
    };
    search.run(0);
    search.best
}

struct MatchingSearch {
    adj: Vec<Vec<usize>>,
    matched: Vec<bool>,
    current: Vec<Edge>,
    best: Vec<Edge>,
    cap: usize,
    found_cap: bool,
}

impl MatchingSearch {
    fn open(&self, v: usize) -> bool {
        !self.matched[v] && self.adj[v].iter().any(|&u| u > v && !self.matched[u])
    }

    fn run(&mut self, start: usize) {
        if self.found_cap {
            return;
        }
        let n = self.adj.len();
        let Some(v) = (start..n).find(|&v| self.open(v)) else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.found_cap = self.best.len() == self.cap;
            return;
        };
        let free = (v..n).filter(|&x| !self.matched[x] && !self.adj[x].is_empty()).count();
        if self.current.len() + free / 2 <= self.best.len() {
            return;
        }
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            if u <= v || self.matched[u] {
                continue;
            }
            self.matched[v] = true;
            self.matched[u] = true;
            self.current.push(Edge::new(v, u));
            self.run(v + 1);
            self.current.pop();
            self.matched[v] = false;
            self.matched[u] = false;
            if self.found_cap {
                return;
            }
        }
        self.run(v + 1);
    }
}

/// Minimum vertex cover, ascending; lexicographically least among minimum
/// covers.
pub fn minimum_vertex_cover(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut search = CoverSearch {
        adj,
        state: vec![State::Open; n],
    };
    let lower = search.matching_bound(0);
    for k in lower..=n {
        if search.run(0, 0, k) {
            return (0..n).filter(|&v| search.state[v] == State::In).collect();
        }
    }
    unreachable!("the whole vertex set is a cover")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Open,
    In,
    Out,
}

struct CoverSearch {
    adj: Vec<Vec<usize>>,
    state: Vec<State>,
}

impl CoverSearch {
    /// Size of a greedy matching on edges between open vertices at or after `from`.
    fn matching_bound(&self, from: usize) -> usize {
        let n = self.adj.len();
        let mut used = vec![false; n];
        let mut k = 0;
        for a in from..n {
            if used[a] || self.state[a] != State::Open {
                continue;
            }
            if let Some(&b) = self.adj[a]
                .iter()
                .find(|&&b| b > a && !used[b] && self.state[b] == State::Open)
            {
                used[a] = true;
                used[b] = true;
                k += 1;
            }
        }
        k
    }

    fn run(&mut self, v: usize, taken: usize, budget: usize) -> bool {
        let n = self.adj.len();
        if v == n {
            return true;
        }
        if taken + self.matching_bound(v) > budget {
            return false;
        }
        if self.state[v] == State::In {
            return self.run(v + 1, taken, budget);
        }
        if taken < budget {
            self.state[v] = State::In;
            if self.run(v + 1, taken + 1, budget) {
                return true;
            }
            self.state[v] = State::Open;
        }
        // v stays out: every later neighbor is forced in
        let forced: Vec<usize> = self.adj[v]
            .iter()
            .copied()
            .filter(|&u| u > v && self.state[u] == State::Open)
            .collect();
        if taken + forced.len() <= budget {
            self.state[v] = State::Out;
            for &u in &forced {
                self.state[u] = State::In;
            }
            if self.run(v + 1, taken + forced.len(), budget) {
                return true;
            }
            for &u in &forced {
                self.state[u] = State::Open;
            }
        }
        self.state[v] = State::Open;
        false
    }
}

pub fn is_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut seen = vec![false; g.order()];
    for e in edges {
        if !g.contains_edge(*e) || seen[e.u()] || seen[e.v()] {
            return false;
        }
        seen[e.u()] = true;
        seen[e.v()] = true;
    }
    true
}

pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let set = g.row_of(cover);
    g.edges().iter().all(|e| set[e.u()] || set[e.v()])
}
