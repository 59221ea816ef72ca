//! Certificates around 7⁺-vertices that subsume, or sit next to, low
//! vertices.

use std::collections::BTreeSet;

use super::constructors::cycle_order;
use super::{lift_wke, verify_certificate, Certificate, Provenance, Target};
use crate::graph::{is_thin, maximum_matching, minimum_vertex_cover, subsumes, Edge, Graph, Triangle};
use crate::wke::{find_wke_structural, witness_for_cover, WkeWitness};

fn tri(a: usize, b: usize, c: usize) -> Triangle {
    Triangle::new(a, b, c)
}

fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b)
}

fn low_neighbors(g: &Graph, v: usize) -> Vec<usize> {
    g.neighbors(v).filter(|&x| g.degree(x) <= 6).collect()
}

fn independent(g: &Graph, set: &[usize]) -> bool {
    g.edges_within(set).is_empty()
}

/// Number of edges missing from G[N(x)] and its largest complement degree.
fn neighborhood_gaps(g: &Graph, x: usize) -> (usize, usize) {
    let (h, _) = g.induced_subgraph(&g.neighborhood(x)).expect("in range");
    let c = h.complement();
    (c.size(), c.max_degree())
}

/// Certificates for configurations centered at `hub`, tried in order:
/// a 10⁺-vertex subsuming a 6⁻-vertex with at least d − 5 6⁻-neighbors, a
/// 9-vertex subsuming three 6⁻-vertices with a fourth 6⁻-neighbor, a 7- or
/// 8-vertex subsuming a 5-vertex, a 7-vertex subsuming a 6-vertex, a
/// 7-vertex next to a thin 6-vertex, and a 7-, 8- or 9-vertex with more
/// than d − 4 6⁻-neighbors.
pub fn subsumption_certificate(g: &Graph, hub: usize) -> Option<Certificate> {
    if hub >= g.order() {
        return None;
    }
    let d = g.degree(hub);
    let low = low_neighbors(g, hub);
    let subsumed: Vec<usize> = low.iter().copied().filter(|&x| subsumes(g, hub, x)).collect();
    if d >= 10 && !subsumed.is_empty() && low.len() + 5 >= d {
        if let Some(c) = big_hub(g, hub, &low) {
            return Some(c);
        }
    }
    if d == 9 && subsumed.len() >= 3 && low.len() >= 4 {
        if let Some(c) = nine_hub(g, hub, &subsumed, &low) {
            return Some(c);
        }
    }
    if d == 7 || d == 8 {
        for &v in subsumed.iter().filter(|&&x| g.degree(x) == 5) {
            if let Some(c) = subsumed_five(g, hub, v) {
                return Some(c);
            }
        }
    }
    if d == 7 {
        for &v in subsumed.iter().filter(|&&x| g.degree(x) == 6) {
            if let Some(c) = subsumed_six(g, hub, v) {
                return Some(c);
            }
        }
        for &v in low.iter().filter(|&&x| is_thin(g, x)) {
            if let Some(c) = thin_neighbor(g, hub, v) {
                return Some(c);
            }
        }
    }
    if (7..=9).contains(&d) && low.len() + 4 > d {
        if let Some(c) = crowded_hub(g, hub, &low) {
            return Some(c);
        }
    }
    None
}

/// Lifts a witness on G[N(hub)] given in local ids.
fn lift_local(g: &Graph, hub: usize, w: &WkeWitness, map: &[usize], provenance: Provenance) -> Option<Certificate> {
    let host = WkeWitness::new(
        w.matching.iter().map(|e| e.map(|x| map[x])),
        w.cover.iter().map(|&x| map[x]),
    );
    let mut c = lift_wke(g, hub, &g.neighborhood(hub), &host).ok()?;
    c.provenance = provenance;
    Some(c)
}

/// The high-degree neighbors B cover G[N(v)] because the low ones are
/// independent; B or B minus one vertex completes to a witness.
fn big_hub(g: &Graph, v: usize, low: &[usize]) -> Option<Certificate> {
    if !independent(g, low) {
        return None;
    }
    let nbhd = g.neighborhood(v);
    let (h, map) = g.induced_subgraph(&nbhd).ok()?;
    let local = |x: usize| map.binary_search(&x).unwrap();
    let b: Vec<usize> = nbhd.iter().copied().filter(|x| !low.contains(x)).map(local).collect();
    let w = witness_for_cover(&h, &b).or_else(|| {
        b.iter().find_map(|&drop| {
            let rest: Vec<usize> = b.iter().copied().filter(|&x| x != drop).collect();
            witness_for_cover(&h, &rest)
        })
    })?;
    lift_local(g, v, &w, &map, Provenance::HubTenPlus)
}

/// The low neighbors are independent, so the others form a cover of size at
/// most three; with a small matching number the whole neighborhood has no
/// long odd cycle instead.
fn crowded_hub(g: &Graph, v: usize, low: &[usize]) -> Option<Certificate> {
    if !independent(g, low) {
        return None;
    }
    let nbhd = g.neighborhood(v);
    let (h, map) = g.induced_subgraph(&nbhd).ok()?;
    if !h.is_connected() {
        return None;
    }
    let b: Vec<usize> = (0..h.order()).filter(|&x| !low.contains(&map[x])).collect();
    let w = witness_for_cover(&h, &b).or_else(|| find_wke_structural(&h).map(|(w, _)| w))?;
    lift_local(g, v, &w, &map, Provenance::CrowdedHub)
}

/// Pairs of disjoint edges of `g` inside `set` avoiding `used`, in
/// lexicographic order.
fn disjoint_pairs(g: &Graph, set: &[usize], used: &BTreeSet<Edge>) -> Vec<(Edge, Edge)> {
    let edges: Vec<Edge> = g
        .edges_within(set)
        .into_iter()
        .filter(|e| !used.contains(e))
        .collect();
    let mut out = Vec::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            if !b.contains(a.u()) && !b.contains(a.v()) {
                out.push((*a, *b));
            }
        }
    }
    out
}

/// V₀ = {v, w1, w2, w3, w'} for a 9-vertex v subsuming w1, w2, w3 and
/// adjacent to a fourth 6⁻-vertex w'. Triangles are picked greedily around
/// each wᵢ, then v w3 r, v w' r1 and, when w' has a neighbor p outside
/// N[v], w' r2 p.
fn nine_hub(g: &Graph, v: usize, subsumed: &[usize], low: &[usize]) -> Option<Certificate> {
    for &w1 in subsumed {
        for &w2 in subsumed {
            for &w3 in subsumed {
                if w1 == w2 || w1 == w3 || w2 == w3 {
                    continue;
                }
                for &wp in low {
                    if [w1, w2, w3].contains(&wp) {
                        continue;
                    }
                    if let Some(c) = nine_hub_with(g, v, [w1, w2, w3], wp) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

fn nine_hub_with(g: &Graph, v: usize, w: [usize; 3], wp: usize) -> Option<Certificate> {
    let [w1, w2, w3] = w;
    let all = [w1, w2, w3, wp];
    if !independent(g, &all) {
        return None;
    }
    for &x in &all {
        if neighborhood_gaps(g, x).1 > 1 {
            return None;
        }
    }
    if neighborhood_gaps(g, w3).0 == 2 {
        return None;
    }
    let outside_v = |x: usize| -> Vec<usize> { g.neighbors(x).filter(|&y| y != v).collect() };
    let (h1, h2, h3) = (outside_v(w1), outside_v(w2), outside_v(w3));
    let h_prime: Vec<usize> = g.neighbors(wp).filter(|&y| g.has_edge(v, y)).collect();
    let p_list: Vec<usize> = g.neighbors(wp).filter(|&y| y != v && !g.has_edge(v, y)).collect();
    if p_list.len() > 1 {
        return None;
    }
    let p = p_list.first().copied();
    let v0: BTreeSet<usize> = [v, w1, w2, w3, wp].into_iter().collect();
    let z: Vec<usize> = g.neighbors(v).filter(|x| !v0.contains(x)).collect();

    for (s1, s2) in disjoint_pairs(g, &h1, &BTreeSet::new()) {
        let mut used: BTreeSet<Edge> = [s1, s2].into_iter().collect();
        let Some(&(t1, t2)) = disjoint_pairs(g, &h2, &used).first() else {
            continue;
        };
        used.extend([t1, t2]);
        let Some(uu) = g.edges_within(&h3).into_iter().find(|e| !used.contains(e)) else {
            continue;
        };
        let Some(&r) = h3.iter().find(|&&x| !uu.contains(x)) else {
            continue;
        };
        let Some(&r1) = h_prime.iter().find(|&&x| x != r) else {
            continue;
        };
        let mut s = vec![
            tri(w1, s1.u(), s1.v()),
            tri(w1, s2.u(), s2.v()),
            tri(w2, t1.u(), t1.v()),
            tri(w2, t2.u(), t2.v()),
            tri(w3, uu.u(), uu.v()),
            tri(v, w3, r),
            tri(v, wp, r1),
        ];
        let mut x: Vec<Edge> = g.edges_within(&z);
        x.extend([e(v, w1), e(v, w2), e(v, w3), e(v, wp)]);
        if let Some(p) = p {
            let Some(&r2) = h_prime
                .iter()
                .find(|&&y| y != r && y != r1 && g.has_edge(y, p))
            else {
                continue;
            };
            s.push(tri(wp, r2, p));
            x.extend([e(wp, p), e(r2, p)]);
        }
        let c = Certificate::new(Target::Vertices(v0.iter().copied().collect()), s, x, Provenance::HubNine);
        if verify_certificate(g, &c).is_ok() {
            return Some(c);
        }
    }
    None
}

/// u ∈ {7, 8}-vertex subsuming the 5-vertex v. W = N(u) ∩ N(v) spans K4 or
/// K4 minus an edge, Z = N(u) − N[v]. An edge inside Z gives an explicit
/// {u, v} certificate; otherwise the W–Z matching number decides between a
/// wKE witness for N(u) and another explicit certificate.
fn subsumed_five(g: &Graph, u: usize, v: usize) -> Option<Certificate> {
    let (gaps, _) = neighborhood_gaps(g, v);
    if gaps > 1 {
        return None;
    }
    let w_set = g.common_neighbors(u, v);
    let z: Vec<usize> = g.neighbors(u).filter(|&x| x != v && !g.has_edge(v, x)).collect();
    if w_set.len() != 4 || z.len() + 5 != g.degree(u) {
        return None;
    }
    let w_edges = g.edges_within(&w_set);
    let complete = match w_edges.len() {
        6 => true,
        5 => false,
        _ => return None,
    };
    let (w1, w2) = if complete {
        (w_set[0], w_set[1])
    } else {
        let gap = w_set
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| w_set[i + 1..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| !g.has_edge(a, b))?;
        gap
    };
    let star = |w: usize, wp: usize| {
        [tri(u, wp, w1), tri(v, w, w1), tri(u, v, w2), tri(w, wp, w2)]
    };
    let target = Target::Vertices(vec![u, v]);

    if let Some(zz) = g.edges_within(&z).first().copied() {
        let (z1, z2) = (zz.u(), zz.v());
        let mut z_star: Vec<usize> = z.iter().copied().filter(|&x| w_set.iter().any(|&w| g.has_edge(x, w))).collect();
        if complete && z_star.len() == 3 {
            let z0 = z_star.iter().copied().find(|&x| x != z1 && x != z2)?;
            let w = w_set.iter().copied().find(|&w| g.has_edge(z0, w))?;
            let rest: Vec<usize> = w_set.iter().copied().filter(|&x| x != w).collect();
            let (w1, w2, wp) = (rest[0], rest[1], rest[2]);
            let s = [
                tri(u, wp, w1),
                tri(v, w, w1),
                tri(u, v, w2),
                tri(w, wp, w2),
                tri(u, z1, z2),
                tri(u, z0, w),
            ];
            let x = w_edges
                .iter()
                .copied()
                .chain(z.iter().map(|&y| e(u, y)))
                .chain([e(u, v), e(z1, z2), e(z0, w)]);
            return Some(Certificate::new(target, s, x, Provenance::Subsumed5Case1a));
        }
        for &y in &z {
            if z_star.len() >= 2 {
                break;
            }
            if !z_star.contains(&y) {
                z_star.push(y);
            }
        }
        let rest: Vec<usize> = w_set.iter().copied().filter(|&x| x != w1 && x != w2).collect();
        let (w, wp) = (rest[0], rest[1]);
        let s = star(w, wp).into_iter().chain([tri(u, z1, z2)]);
        let x = w_edges
            .iter()
            .copied()
            .chain([e(z1, z2), e(u, v)])
            .chain(z_star.iter().map(|&y| e(u, y)));
        return Some(Certificate::new(target, s, x, Provenance::Subsumed5Case1b));
    }

    let nbhd = g.neighborhood(u);
    let (h, _) = g.induced_subgraph(&nbhd).ok()?;
    if !h.is_connected() {
        return None;
    }
    // J: the bipartite graph of W–Z edges
    let mut j_map: Vec<usize> = w_set.iter().chain(&z).copied().collect();
    j_map.sort_unstable();
    let idx = |x: usize| j_map.binary_search(&x).unwrap();
    let j_pairs: Vec<(usize, usize)> = w_set
        .iter()
        .flat_map(|&w| z.iter().filter(move |&&y| g.has_edge(w, y)).map(move |&y| (w, y)))
        .map(|(w, y)| (idx(w), idx(y)))
        .collect();
    let j = Graph::from_edges(j_map.len(), j_pairs).ok()?;
    let to_host = |ed: &Edge| ed.map(|x| j_map[x]);
    let j_matching: Vec<Edge> = maximum_matching(&j).iter().map(to_host).collect();
    let nw_z: Vec<usize> = w_set
        .iter()
        .copied()
        .filter(|&w| z.iter().any(|&y| g.has_edge(w, y)))
        .collect();
    let lift_host = |m: Vec<Edge>, q: Vec<usize>, prov: Provenance| {
        let mut c = lift_wke(g, u, &nbhd, &WkeWitness::new(m, q)).ok()?;
        c.provenance = prov;
        Some(c)
    };
    match j_matching.len() {
        1 => {
            let w = *nw_z.first().filter(|_| nw_z.len() == 1)?;
            let zz = z[0];
            let t = w_edges.iter().copied().find(|ed| !ed.contains(w))?;
            let wp = w_set.iter().copied().find(|&x| x != w && !t.contains(x))?;
            lift_host(
                vec![e(w, zz), t, e(v, wp)],
                vec![v, w, wp],
                Provenance::Subsumed5Case2a,
            )
        }
        2 if nw_z.len() >= 3 => {
            let w = nw_z.iter().copied().find(|&x| x != w1 && x != w2)?;
            let z0 = z.iter().copied().find(|&y| g.has_edge(w, y))?;
            let wp = w_set.iter().copied().find(|&x| ![w, w1, w2].contains(&x))?;
            let cover: Vec<usize> = minimum_vertex_cover(&j).into_iter().map(|x| j_map[x]).collect();
            if cover.len() != 2 {
                return None;
            }
            let s = star(w, wp).into_iter().chain([tri(u, z0, w)]);
            let x = w_edges
                .iter()
                .copied()
                .chain([e(u, v), e(z0, w), e(u, cover[0]), e(u, cover[1])]);
            Some(Certificate::new(target, s, x, Provenance::Subsumed5Case2bi))
        }
        2 => {
            let t: Vec<usize> = w_set.iter().copied().filter(|x| !nw_z.contains(x)).collect();
            if t.len() != 2 {
                return None;
            }
            let extra = if g.has_edge(t[0], t[1]) { e(t[0], t[1]) } else { e(v, t[0]) };
            let m = j_matching.iter().copied().chain([extra]).collect();
            let q = nw_z.iter().copied().chain([v]).collect();
            lift_host(m, q, Provenance::Subsumed5Case2bii)
        }
        3 => {
            let matched: BTreeSet<usize> = j_matching.iter().flat_map(|ed| [ed.u(), ed.v()]).collect();
            let w = w_set.iter().copied().find(|x| !matched.contains(x))?;
            let m = j_matching.iter().copied().chain([e(v, w)]).collect();
            lift_host(m, w_set.clone(), Provenance::Subsumed5Case2c)
        }
        _ => None,
    }
}

/// 7-vertex u subsuming the 6-vertex v: H = N(u) ∩ N(v) has five vertices
/// and at most one missing edge w1w2; p is the one vertex of N(u) − N[v].
fn subsumed_six(g: &Graph, u: usize, v: usize) -> Option<Certificate> {
    let (gaps, _) = neighborhood_gaps(g, v);
    if gaps > 1 {
        return None;
    }
    let h = g.common_neighbors(u, v);
    let p: Vec<usize> = g.neighbors(u).filter(|&x| x != v && !g.has_edge(v, x)).collect();
    if h.len() != 5 || p.len() != 1 {
        return None;
    }
    let inner = g.edges_within(&h);
    let (w1, w2) = match inner.len() {
        10 => (h[0], h[1]),
        9 => h
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| h[i + 1..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| !g.has_edge(a, b))?,
        _ => return None,
    };
    let rest: Vec<usize> = h.iter().copied().filter(|&x| x != w1 && x != w2).collect();
    let (w3, w4, w5) = (rest[0], rest[1], rest[2]);
    let s = [
        tri(u, w2, w5),
        tri(u, w3, w4),
        tri(v, w2, w3),
        tri(v, w4, w5),
        tri(u, v, w1),
        tri(w1, w3, w5),
    ];
    let x = inner.into_iter().chain([e(u, v), e(u, p[0])]);
    Some(Certificate::new(Target::Vertices(vec![u, v]), s, x, Provenance::Subsumed6))
}

/// 7-vertex u next to the thin 6-vertex v whose neighborhood complement is a
/// perfect matching; the common neighborhood is then a 4-cycle abcd.
fn thin_neighbor(g: &Graph, u: usize, v: usize) -> Option<Certificate> {
    let (gaps, max) = neighborhood_gaps(g, v);
    if gaps != 3 || max != 1 {
        return None;
    }
    let common = g.common_neighbors(u, v);
    let [a, b, c, d] = cycle_order(g, &common)?;
    let p: Vec<usize> = g.neighbors(u).filter(|&x| x != v && !g.has_edge(v, x)).collect();
    let q: Vec<usize> = g.neighbors(v).filter(|&x| x != u && !g.has_edge(u, x)).collect();
    if p.len() != 2 || q.len() != 1 {
        return None;
    }
    let s = [tri(u, a, b), tri(u, c, d), tri(v, b, c), tri(v, a, d)];
    let x = g
        .edges_within(&common)
        .into_iter()
        .chain([e(u, v), e(u, p[0]), e(u, p[1]), e(v, q[0])]);
    Some(Certificate::new(Target::Vertices(vec![u, v]), s, x, Provenance::ThinNeighbor))
}
