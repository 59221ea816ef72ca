//! Weak König–Egerváry graphs.
//!
//! H is weak König–Egerváry (wKE) when it has a matching M and a vertex set
//! Q with |Q| ≤ |M| such that Q covers every edge of H − M. A wKE
//! neighborhood makes its center reducible, so these witnesses feed straight
//! into [`crate::certificates::lift_wke`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    blocks, has_long_odd_cycle, is_hin_block, maximum_matching, minimum_vertex_cover, Edge, Graph,
};

/// A matching and a cover of everything the matching leaves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WkeWitness {
    pub matching: Vec<Edge>,
    pub cover: Vec<usize>,
}

impl WkeWitness {
    /// Sorts and deduplicates both parts.
    pub fn new(matching: impl IntoIterator<Item = Edge>, cover: impl IntoIterator<Item = usize>) -> Self {
        let matching: BTreeSet<Edge> = matching.into_iter().collect();
        let cover: BTreeSet<usize> = cover.into_iter().collect();
        WkeWitness {
            matching: matching.into_iter().collect(),
            cover: cover.into_iter().collect(),
        }
    }

    fn mapped(&self, map: &[usize]) -> WkeWitness {
        WkeWitness::new(
            self.matching.iter().map(|e| e.map(|x| map[x])),
            self.cover.iter().map(|&x| map[x]),
        )
    }

    fn extend(&mut self, other: WkeWitness) {
        let merged = WkeWitness::new(
            self.matching.iter().copied().chain(other.matching),
            self.cover.iter().copied().chain(other.cover),
        );
        *self = merged;
    }
}

/// A witness that additionally has `anchor` in the cover or unmatched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnchoredWkeWitness {
    pub witness: WkeWitness,
    pub anchor: usize,
}

/// Which sufficient condition produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WkeMethod {
    /// König: maximum matching plus minimum cover.
    Bipartite,
    /// Connected, at most four vertices.
    SmallOrder,
    /// Connected with matching number at most one, or at most two on six or
    /// more vertices.
    SmallMatching,
    /// Connected on n ≥ 6 vertices with an independent set of size n − 3.
    IndependentSet,
    /// Connected on five or six vertices whose complement has a vertex of
    /// degree at least two.
    ComplementDegree,
    /// No odd cycle longer than a triangle; leaf-block induction.
    NoLongOddCycle,
    /// Disjoint union of structurally certified components.
    ComponentUnion,
    /// Exhaustive search.
    BruteForce,
}

impl fmt::Display for WkeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap_or_default())
    }
}

/// Checks that `w` is a wKE witness of `h`. Vertices or edges outside `h`
/// are input errors rather than a `false` verdict.
pub fn verify_wke_witness(h: &Graph, w: &WkeWitness) -> Result<bool> {
    for &q in &w.cover {
        h.check_vertex(q)?;
    }
    for e in &w.matching {
        if !h.contains_edge(*e) {
            return Err(Error::MissingEdge(e.to_string()));
        }
    }
    let mut touched = vec![false; h.order()];
    let mut distinct = BTreeSet::new();
    for e in &w.matching {
        if !distinct.insert(*e) {
            continue;
        }
        if touched[e.u()] || touched[e.v()] {
            return Ok(false);
        }
        touched[e.u()] = true;
        touched[e.v()] = true;
    }
    let cover: BTreeSet<usize> = w.cover.iter().copied().collect();
    if cover.len() > distinct.len() {
        return Ok(false);
    }
    Ok(h.edges()
        .iter()
        .all(|e| distinct.contains(e) || cover.contains(&e.u()) || cover.contains(&e.v())))
}

const BRUTE_FORCE_LIMIT: usize = 16;

/// Complete search for a witness, at most 16 vertices.
///
/// For a fixed Q, the edges of H − Q must all lie in M, so they must form a
/// matching themselves; M is then completed by a maximum matching on the
/// vertices those edges leave free. Q runs over subsets by size and then
/// lexicographically, so the returned cover is the lexicographically least
/// among the smallest feasible ones.
pub fn find_wke_bruteforce(h: &Graph) -> Result<Option<WkeWitness>> {
    let n = h.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "wKE brute force",
            limit: BRUTE_FORCE_LIMIT,
            got: n,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| h.neighbors(v).fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    for size in 0..=n / 2 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let q_mask = idx.iter().fold(0u32, |acc, &i| acc | 1 << i);
            let outside = all & !q_mask;
            let forced_ok = (0..n)
                .filter(|&v| outside >> v & 1 == 1)
                .all(|v| (rows[v] & outside).count_ones() <= 1);
            if forced_ok {
                let forced: Vec<Edge> = (0..n)
                    .filter(|&v| outside >> v & 1 == 1)
                    .flat_map(|v| {
                        let r = rows[v] & outside;
                        (0..n).filter(move |&u| u > v && r >> u & 1 == 1).map(move |u| Edge::new(v, u))
                    })
                    .collect();
                let used = forced.iter().fold(0u32, |acc, e| acc | 1 << e.u() | 1 << e.v());
                let free: Vec<usize> = (0..n).filter(|&v| used >> v & 1 == 0).collect();
                let (rest, map) = h.induced_subgraph(&free)?;
                let extra = maximum_matching(&rest);
                if forced.len() + extra.len() >= size {
                    let w = WkeWitness::new(
                        forced.into_iter().chain(extra.iter().map(|e| e.map(|x| map[x]))),
                        idx.iter().copied(),
                    );
                    debug_assert!(verify_wke_witness(h, &w).unwrap_or(false));
                    return Ok(Some(w));
                }
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Completes a fixed cover Q to a witness when possible: the edges Q misses
/// must all be matched, and the rest of M comes from a maximum matching on
/// the vertices they leave free.
pub(crate) fn witness_for_cover(h: &Graph, cover: &[usize]) -> Option<WkeWitness> {
    let cover: BTreeSet<usize> = cover.iter().copied().collect();
    let forced: Vec<Edge> = h
        .edges()
        .into_iter()
        .filter(|e| !cover.contains(&e.u()) && !cover.contains(&e.v()))
        .collect();
    let mut used = vec![false; h.order()];
    for e in &forced {
        if used[e.u()] || used[e.v()] {
            return None;
        }
        used[e.u()] = true;
        used[e.v()] = true;
    }
    let free: Vec<usize> = (0..h.order()).filter(|&x| !used[x]).collect();
    let (rest, map) = h.induced_subgraph(&free).ok()?;
    let extra = maximum_matching(&rest);
    if forced.len() + extra.len() < cover.len() {
        return None;
    }
    Some(WkeWitness::new(
        forced.into_iter().chain(extra.iter().map(|e| e.map(|x| map[x]))),
        cover,
    ))
}

/// Advances `idx` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Tries the constructive sufficient conditions in a fixed order. Sound but
/// not complete: `None` does not mean `h` is not wKE.
pub fn find_wke_structural(h: &Graph) -> Option<(WkeWitness, WkeMethod)> {
    let n = h.order();
    if h.is_bipartite() {
        return Some((
            WkeWitness::new(maximum_matching(h), minimum_vertex_cover(h)),
            WkeMethod::Bipartite,
        ));
    }
    let connected = h.is_connected();
    if connected {
        if n <= 4 {
            if let Some(w) = short_odd_cycle_witness(h) {
                return Some((w, WkeMethod::SmallOrder));
            }
        }
        let alpha = maximum_matching(h).len();
        if alpha <= 1 || (n > 5 && alpha == 2) {
            if let Some(w) = short_odd_cycle_witness(h) {
                return Some((w, WkeMethod::SmallMatching));
            }
        }
        if n >= 6 {
            if let Some(w) = independent_set_witness(h) {
                return Some((w, WkeMethod::IndependentSet));
            }
        }
        if (n == 5 || n == 6) && h.complement().max_degree() > 1 {
            if let Some(w) = complement_degree_witness(h) {
                return Some((w, WkeMethod::ComplementDegree));
            }
        }
    }
    if let Some(w) = short_odd_cycle_witness(h) {
        return Some((w, WkeMethod::NoLongOddCycle));
    }
    if !connected {
        let mut acc = WkeWitness::default();
        for comp in h.components() {
            let (sub, map) = h.induced_subgraph(&comp).expect("component is in range");
            let (w, _) = find_wke_structural(&sub)?;
            acc.extend(w.mapped(&map));
        }
        return Some((acc, WkeMethod::ComponentUnion));
    }
    None
}

/// Structural conditions first, then brute force when small enough.
pub fn find_wke(h: &Graph) -> Option<(WkeWitness, WkeMethod)> {
    if let Some(found) = find_wke_structural(h) {
        return Some(found);
    }
    if h.order() <= BRUTE_FORCE_LIMIT {
        find_wke_bruteforce(h)
            .expect("within limit")
            .map(|w| (w, WkeMethod::BruteForce))
    } else {
        None
    }
}

/// Witness for a graph with no odd cycle longer than three, by repeatedly
/// splitting off a leaf block with an anchored witness at its cut vertex.
fn short_odd_cycle_witness(h: &Graph) -> Option<WkeWitness> {
    if has_long_odd_cycle(h) {
        return None;
    }
    let mut alive: Vec<usize> = (0..h.order()).collect();
    let mut acc = WkeWitness::default();
    loop {
        let (cur, map) = h.induced_subgraph(&alive).expect("alive vertices are in range");
        let bl = blocks(&cur);
        if bl.blocks.is_empty() {
            return Some(acc);
        }
        let is_cut = |v: &usize| bl.cut_vertices.binary_search(v).is_ok();
        // a component that is a single block goes in one piece
        let (block, anchor, whole) = match bl.blocks.iter().find(|b| !b.iter().any(is_cut)) {
            // anchoring at the largest vertex keeps the matching lexicographically small
            Some(b) => (b.clone(), *b.last().unwrap(), true),
            None => {
                let (i, cut) = bl.leaves()[0];
                (bl.blocks[i].clone(), cut, false)
            }
        };
        let (bg, bmap) = cur.induced_subgraph(&block).expect("block is in range");
        let local_anchor = bmap.iter().position(|&x| x == anchor).unwrap();
        let aw = anchored_wke(&bg, local_anchor).ok()??;
        let anchor_in_cover = aw.witness.cover.contains(&local_anchor);
        let to_host: Vec<usize> = bmap.iter().map(|&x| map[x]).collect();
        acc.extend(aw.witness.mapped(&to_host));
        let removed: BTreeSet<usize> = block
            .iter()
            .filter(|&&x| whole || anchor_in_cover || x != anchor)
            .map(|&x| map[x])
            .collect();
        alive.retain(|x| !removed.contains(x));
    }
}

fn independent_set_witness(h: &Graph) -> Option<WkeWitness> {
    let cover = minimum_vertex_cover(h);
    if cover.len() > 3 {
        return None;
    }
    let m = maximum_matching(h);
    if m.len() < 3 {
        return short_odd_cycle_witness(h);
    }
    Some(WkeWitness::new(m, cover))
}

/// Connected, five or six vertices, some vertex non-adjacent to two others.
fn complement_degree_witness(h: &Graph) -> Option<WkeWitness> {
    let n = h.order();
    let alpha = maximum_matching(h).len();
    if alpha + 3 < n {
        return short_odd_cycle_witness(h);
    }
    let comp = h.complement();
    for u in 0..n {
        let non: Vec<usize> = comp.neighborhood(u);
        for (i, &z1) in non.iter().enumerate() {
            for &z2 in &non[i + 1..] {
                let w = complement_degree_case(h, alpha, u, z1, z2);
                if let Some(w) = w.filter(|w| verify_wke_witness(h, w).unwrap_or(false)) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn complement_degree_case(h: &Graph, alpha: usize, u: usize, z1: usize, z2: usize) -> Option<WkeWitness> {
    let n = h.order();
    let rest: Vec<usize> = (0..n).filter(|&x| x != u && x != z1 && x != z2).collect();
    if !h.has_edge(z1, z2) {
        return Some(WkeWitness::new(maximum_matching(h), rest));
    }
    let others: Vec<usize> = (0..n).filter(|&x| x != z1 && x != z2).collect();
    let (h0, map) = h.induced_subgraph(&others).ok()?;
    let m0 = maximum_matching(&h0);
    if m0.len() + 1 == alpha {
        let m = m0.iter().map(|e| e.map(|x| map[x])).chain([Edge::new(z1, z2)]);
        return Some(WkeWitness::new(m, rest));
    }
    if n == 5 {
        return Some(WkeWitness::new(maximum_matching(h), [z1, z2]));
    }
    if let Some(w) = independent_set_witness(h) {
        return Some(w);
    }
    // H − {z1, z2} is a triangle plus an isolated vertex
    let tri: Vec<usize> = (0..h0.order()).filter(|&x| h0.degree(x) == 2).collect();
    if tri.len() != 3 || h0.size() != 3 {
        return None;
    }
    let m = maximum_matching(h);
    let in_tri = |x: usize| map_index(&map, x).is_some_and(|i| tri.contains(&i));
    let inside = m.iter().find(|e| in_tri(e.u()) && in_tri(e.v())).copied()?;
    let y = tri.iter().map(|&x| map[x]).find(|&x| !inside.contains(x))?;
    Some(WkeWitness::new(m, [y, z1, z2]))
}

fn map_index(map: &[usize], x: usize) -> Option<usize> {
    map.iter().position(|&y| y == x)
}

/// Witness for a 2-connected graph (or single edge) with the extra promise
/// that `anchor` is in the cover or unmatched. `None` when the block is
/// neither bipartite nor one of K3, K4, K2 ∨ complement(K_r).
pub fn anchored_wke(b: &Graph, anchor: usize) -> Result<Option<AnchoredWkeWitness>> {
    b.check_vertex(anchor)?;
    let bl = blocks(b);
    if bl.blocks.len() != 1 || bl.blocks[0].len() != b.order() {
        return Err(Error::Precondition(
            "anchored witness needs a 2-connected graph or a single edge".into(),
        ));
    }
    let n = b.order();
    let wrap = |w: WkeWitness| Some(AnchoredWkeWitness { witness: w, anchor });
    if b.is_bipartite() {
        let full = maximum_matching(b);
        let others: Vec<usize> = (0..n).filter(|&x| x != anchor).collect();
        let (sub, map) = b.induced_subgraph(&others)?;
        let without = maximum_matching(&sub);
        let w = if without.len() == full.len() {
            // some maximum matching misses the anchor
            WkeWitness::new(without.iter().map(|e| e.map(|x| map[x])), minimum_vertex_cover(b))
        } else {
            // the anchor lies in some minimum cover
            let cover = minimum_vertex_cover(&sub).into_iter().map(|x| map[x]).chain([anchor]);
            WkeWitness::new(full, cover)
        };
        return Ok(wrap(w));
    }
    if !is_hin_block(b) {
        return Ok(None);
    }
    let w = match n {
        3 => {
            let opposite: Vec<usize> = (0..3).filter(|&x| x != anchor).collect();
            WkeWitness::new([Edge::new(opposite[0], opposite[1])], [anchor])
        }
        4 => {
            let m = maximum_matching(b);
            let mate = m.iter().find_map(|e| e.other(anchor)).expect("perfect matching");
            WkeWitness::new(m, [anchor, mate])
        }
        _ => {
            let spine: Vec<usize> = (0..n).filter(|&x| b.degree(x) == n - 1).collect();
            if spine.contains(&anchor) {
                WkeWitness::new(maximum_matching(b), spine)
            } else {
                let others: Vec<usize> = (0..n).filter(|&x| x != anchor).collect();
                let (sub, map) = b.induced_subgraph(&others)?;
                let m = maximum_matching(&sub).into_iter().map(|e| e.map(|x| map[x]));
                WkeWitness::new(m, spine)
            }
        }
    };
    Ok(wrap(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Literal definition: every matching against every vertex subset.
    pub(crate) fn wke_by_definition(h: &Graph) -> bool {
        let n = h.order();
        let edges = h.edges();
        let m = edges.len();
        assert!(m <= 20 && n <= 10);
        for emask in 0u32..1 << m {
            let chosen: Vec<Edge> = (0..m).filter(|&i| emask >> i & 1 == 1).map(|i| edges[i]).collect();
            if !crate::graph::is_matching(h, &chosen) {
                continue;
            }
            for qmask in 0u32..1 << n {
                if qmask.count_ones() as usize > chosen.len() {
                    continue;
                }
                let ok = edges.iter().all(|e| {
                    chosen.contains(e) || qmask >> e.u() & 1 == 1 || qmask >> e.v() & 1 == 1
                });
                if ok {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn verify_examples() {
        let c5 = cycle(5);
        let w = WkeWitness::new([Edge::new(0, 1), Edge::new(2, 3)], [1, 4]);
        assert!(verify_wke_witness(&c5, &w).unwrap());
        assert!(verify_wke_witness(&Graph::empty(1), &WkeWitness::default()).unwrap());
        let bad = WkeWitness::new([Edge::new(0, 2)], []);
        assert!(verify_wke_witness(&c5, &bad).is_err());
        let too_big = WkeWitness::new([Edge::new(0, 1)], [2, 3]);
        assert!(!verify_wke_witness(&c5, &too_big).unwrap());
        assert!(verify_wke_witness(&c5, &WkeWitness::new([], [9])).is_err());
    }

    #[test]
    fn k5_has_no_witness() {
        assert!(!wke_by_definition(&complete(5)));
        assert_eq!(find_wke_bruteforce(&complete(5)).unwrap(), None);
        assert!(find_wke_structural(&complete(5)).is_none());
    }

    #[test]
    fn brute_force_examples() {
        let w = find_wke_bruteforce(&cycle(5)).unwrap().unwrap();
        assert!(verify_wke_witness(&cycle(5), &w).unwrap());
        for g in [complete_bipartite(3, 4), star(5), path(6), cycle(8)] {
            let w = find_wke_bruteforce(&g).unwrap().unwrap();
            assert!(verify_wke_witness(&g, &w).unwrap());
        }
        assert!(find_wke_bruteforce(&Graph::empty(17)).is_err());
    }

    #[test]
    fn structural_examples() {
        for g in [complete(4), complete(3), star(3), path(4), book(2)] {
            let (w, _) = find_wke_structural(&g).unwrap();
            assert!(verify_wke_witness(&g, &w).unwrap());
        }
        let (w, method) = find_wke_structural(&complete(4)).unwrap();
        assert_eq!(method, WkeMethod::SmallOrder);
        assert!(verify_wke_witness(&complete(4), &w).unwrap());

        let book3 = book(3);
        let (w, _) = find_wke_structural(&book3).unwrap();
        assert_eq!(w.cover, vec![0, 1]);

        let (_, method) = find_wke_structural(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(method, WkeMethod::Bipartite);
    }

    #[test]
    fn complement_degree_on_six_vertices() {
        // K6 minus two edges at vertex 0: complement degree 2 at 0
        let g = complete(6).without_edges(&[Edge::new(0, 1), Edge::new(0, 2)]);
        let (w, method) = find_wke_structural(&g).unwrap();
        assert_eq!(method, WkeMethod::ComplementDegree);
        assert!(verify_wke_witness(&g, &w).unwrap());
    }

    #[test]
    fn anchored_examples() {
        let k3 = complete(3);
        let a = anchored_wke(&k3, 0).unwrap().unwrap();
        assert_eq!(a.witness.matching, vec![Edge::new(1, 2)]);
        assert_eq!(a.witness.cover, vec![0]);

        let k4 = complete(4);
        for v in 0..4 {
            let a = anchored_wke(&k4, v).unwrap().unwrap();
            assert_eq!(a.witness.matching.len(), 2);
            assert_eq!(a.witness.cover.len(), 2);
            assert!(a.witness.cover.contains(&v));
            let mate = a.witness.matching.iter().find_map(|e| e.other(v)).unwrap();
            assert!(a.witness.cover.contains(&mate));
        }

        // even cycle: every vertex lies in some minimum cover
        let c6 = cycle(6);
        let a = anchored_wke(&c6, 3).unwrap().unwrap();
        assert!(a.witness.cover.contains(&3));
        assert!(verify_wke_witness(&c6, &a.witness).unwrap());

        assert!(anchored_wke(&cycle(5), 0).unwrap().is_none());
        assert!(anchored_wke(&k3, 5).is_err());
        assert!(anchored_wke(&path(3), 0).is_err());
    }

    #[test]
    fn anchored_book_pages() {
        let b = book(4);
        for v in 0..b.order() {
            let a = anchored_wke(&b, v).unwrap().unwrap();
            let w = &a.witness;
            assert!(verify_wke_witness(&b, w).unwrap());
            assert!(w.cover.contains(&v) || !w.matching.iter().any(|e| e.contains(v)));
        }
    }
}
