//! Exact maximum average degree and the Euler-formula edge-count gates.
//!
//! `mad` follows Goldberg's densest-subgraph reduction: for a candidate
//! edge density p/q, a min cut in an integer-capacity network decides
//! whether some vertex set S has q·e(S) > p·|S|. The optimum is one of the
//! finitely many ratios e/k, so a binary search over those candidates finds
//! it exactly.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An average degree 2|E(H)|/|V(H)| attained by the induced subgraph on
/// `witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub numerator: u64,
    pub denominator: u64,
    pub witness: Vec<usize>,
}

impl Density {
    fn of(g: &Graph, witness: Vec<usize>) -> Density {
        let (sub, _) = g.induced_subgraph(&witness).expect("witness is in range");
        Density {
            numerator: 2 * sub.size() as u64,
            denominator: witness.len() as u64,
            witness,
        }
    }

    pub fn value(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.value();
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

/// Maximum average degree over all nonempty subgraphs, exactly.
pub fn mad(g: &Graph) -> Result<Density> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.size();
    if m == 0 {
        return Ok(Density::of(g, vec![0]));
    }
    // edge densities e/k, with e bounded by what k vertices can carry
    let mut candidates: Vec<Ratio<u64>> = Vec::new();
    for k in 1..=n as u64 {
        let cap = (m as u64).min(k * (k - 1) / 2);
        candidates.extend((0..=cap).map(|e| Ratio::new(e, k)));
    }
    candidates.sort_unstable();
    candidates.dedup();

    // largest index i with some S of density >= candidates[i]; that holds
    // iff some S beats candidates[i - 1] strictly
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if denser_than(g, candidates[mid - 1]).is_some() {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    if lo == 0 {
        return Ok(Density::of(g, vec![0]));
    }
    let witness = denser_than(g, candidates[lo - 1]).expect("search invariant");
    let d = Density::of(g, witness);
    debug_assert_eq!(Ratio::new(d.numerator, 2 * d.denominator), candidates[lo]);
    Ok(d)
}

/// A vertex set S with e(S)/|S| > `ratio`, if one exists.
fn denser_than(g: &Graph, ratio: Ratio<u64>) -> Option<Vec<usize>> {
    let n = g.order();
    let m = g.size() as i64;
    let p = *ratio.numer() as i64;
    let q = *ratio.denom() as i64;
    let source = n;
    let sink = n + 1;
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        net.add_edge(source, v, q * m);
        net.add_edge(v, sink, q * m + 2 * p - q * g.degree(v) as i64);
    }
    for e in g.edges() {
        net.add_edge(e.u(), e.v(), q);
        net.add_edge(e.v(), e.u(), q);
    }
    let cut = net.max_flow(source, sink);
    // cut({s} ∪ S) = n·q·m − (2q·e(S) − 2p·|S|)
    if cut >= n as i64 * q * m {
        return None;
    }
    let side = net.source_side(source);
    Some((0..n).filter(|&v| side[v]).collect())
}

/// Exhaustive version of [`mad`] over all vertex subsets; at most 20 vertices.
pub fn mad_bruteforce(g: &Graph) -> Result<Density> {
    const LIMIT: usize = 20;
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > LIMIT {
        return Err(Error::TooLarge {
            what: "subset enumeration",
            limit: LIMIT,
            got: n,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let (mut best_e, mut best_k, mut best_mask) = (0u64, 1u64, 1u32);
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as u64;
        let twice: u64 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (rows[v] & mask).count_ones() as u64)
            .sum();
        // twice / k > best_e / best_k
        if twice * best_k > best_e * k {
            best_e = twice;
            best_k = k;
            best_mask = mask;
        }
    }
    Ok(Density::of(
        g,
        (0..n).filter(|&v| best_mask >> v & 1 == 1).collect(),
    ))
}

/// Euler-formula bound for a genus-γ embedding: m ≤ 3(n − 2 + 2γ).
pub fn genus_edge_gate(n: u64, m: u64, genus: u64) -> Result<bool> {
    if n < 3 {
        return Err(Error::Precondition(format!("edge gate needs n >= 3, got {n}")));
    }
    Ok(m <= 3 * (n - 2 + 2 * genus))
}

/// The average degree bound 6 + 12(γ − 1)/n implied by [`genus_edge_gate`].
pub fn genus_average_degree_bound(n: u64, genus: u64) -> Result<Ratio<i64>> {
    if n < 3 {
        return Err(Error::Precondition(format!("edge gate needs n >= 3, got {n}")));
    }
    Ok(Ratio::from_integer(6) + Ratio::new(12 * (genus as i64 - 1), n as i64))
}

/// For genus γ ≥ 2, graphs with more than 12(γ − 1) vertices have average
/// degree below 7, so only orders up to this bound need direct checking.
pub fn finite_order_threshold(genus: u64) -> Result<u64> {
    if genus < 2 {
        return Err(Error::Precondition(format!(
            "order threshold needs genus >= 2, got {genus}"
        )));
    }
    Ok(12 * (genus - 1))
}

/// Dinic's algorithm on an adjacency-list residual graph.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: i64) {
        debug_assert!(c >= 0);
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<i64> {
        let mut level = vec![-1; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                if self.cap[e] > 0 && level[self.to[e]] < 0 {
                    level[self.to[e]] = level[x] + 1;
                    queue.push_back(self.to[e]);
                }
            }
        }
        level
    }

    fn augment(&mut self, x: usize, t: usize, f: i64, level: &[i64], it: &mut [usize]) -> i64 {
        if x == t {
            return f;
        }
        while it[x] < self.head[x].len() {
            let e = self.head[x][it[x]];
            let y = self.to[e];
            if self.cap[e] > 0 && level[y] == level[x] + 1 {
                let got = self.augment(y, t, f.min(self.cap[e]), level, it);
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            it[x] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            let level = self.levels(s);
            if level[t] < 0 {
                return flow;
            }
            let mut it = vec![0; self.head.len()];
            loop {
                let f = self.augment(s, t, i64::MAX, &level, &mut it);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Vertices reachable from `s` in the residual graph.
    fn source_side(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l >= 0).collect()
    }
}
