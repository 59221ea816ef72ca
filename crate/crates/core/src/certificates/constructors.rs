//! Certificates around 6⁻-vertices: a single low vertex whose neighborhood
//! is nearly complete, and a pair of adjacent low vertices.

use std::collections::BTreeSet;

use super::{lifted, Certificate, Provenance, Target};
use crate::error::{Error, Result};
use crate::graph::{is_robust, Edge, Graph, Triangle};
use crate::wke::find_wke_structural;

fn tri(a: usize, b: usize, c: usize) -> Triangle {
    Triangle::new(a, b, c)
}

fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b)
}

/// Certificate for {v} when d(v) ∈ {5, 6} and the complement of G[N(v)]
/// either has a vertex of degree two or is exactly two disjoint edges.
pub fn comp_matching_certificate(g: &Graph, v: usize) -> Option<Certificate> {
    let d = g.degree(v);
    if d != 5 && d != 6 {
        return None;
    }
    let nbhd = g.neighborhood(v);
    let (h, map) = g.induced_subgraph(&nbhd).ok()?;
    if !h.is_connected() {
        return None;
    }
    let comp = h.complement();
    if comp.max_degree() > 1 {
        let (w, method) = find_wke_structural(&h)?;
        return lifted(g, v, &nbhd, &w, &map, method);
    }
    if comp.size() != 2 {
        return None;
    }
    let missing = comp.edges();
    let (w1, w2) = (map[missing[0].u()], map[missing[0].v()]);
    let (w3, w4) = (map[missing[1].u()], map[missing[1].v()]);
    let others: Vec<usize> = nbhd
        .iter()
        .copied()
        .filter(|x| ![w1, w2, w3, w4].contains(x))
        .collect();
    let c = if d == 5 {
        let w5 = others[0];
        Certificate::new(
            Target::Vertices(vec![v]),
            [tri(v, w2, w4), tri(v, w1, w3), tri(w1, w4, w5), tri(w2, w3, w5)],
            g.edges_within(&nbhd),
            Provenance::ComplementPair5,
        )
    } else {
        let (w5, w6) = (others[0], others[1]);
        let without: Vec<usize> = nbhd.iter().copied().filter(|&x| x != w6).collect();
        Certificate::new(
            Target::Vertices(vec![v]),
            [
                tri(v, w1, w4),
                tri(v, w2, w3),
                tri(v, w5, w6),
                tri(w1, w3, w5),
                tri(w2, w4, w5),
            ],
            g.edges_within(&without).into_iter().chain([e(w5, w6), e(v, w6)]),
            Provenance::ComplementPair6,
        )
    };
    Some(c)
}

/// Vertices of N(a) − N[b].
fn private_neighbors(g: &Graph, a: usize, b: usize) -> Vec<usize> {
    g.neighbors(a).filter(|&x| x != b && !g.has_edge(b, x)).collect()
}

fn at_most_one(list: Vec<usize>, what: &str) -> Result<Option<usize>> {
    match list.len() {
        0 => Ok(None),
        1 => Ok(Some(list[0])),
        _ => Err(Error::Precondition(format!("{what} is not unique: {list:?}"))),
    }
}

/// Certificate for {u, v} when u, v are adjacent 6⁻-vertices of a robust
/// graph and neither neighborhood complement has a vertex of degree two.
/// Which construction applies depends on the number of common neighbors.
pub fn red_pair_certificate(g: &Graph, u: usize, v: usize) -> Result<Option<Certificate>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{u}-{v} is not an edge")));
    }
    if g.degree(u) > 6 || g.degree(v) > 6 {
        return Err(Error::Precondition("both endpoints need degree at most 6".into()));
    }
    if let Err(bad) = is_robust(g) {
        return Err(Error::Precondition(format!(
            "graph is not robust at vertex {}",
            bad.vertex
        )));
    }
    for x in [u, v] {
        let (h, _) = g.induced_subgraph(&g.neighborhood(x))?;
        if h.complement().max_degree() > 1 {
            return Err(Error::Precondition(format!(
                "neighborhood complement of {x} has a vertex of degree 2"
            )));
        }
    }
    let (u, v) = if g.degree(u) <= g.degree(v) { (u, v) } else { (v, u) };
    let common = g.common_neighbors(u, v);
    let p = at_most_one(private_neighbors(g, u, v), "p")?;
    let q = at_most_one(private_neighbors(g, v, u), "q")?;
    let target = Target::Vertices(vec![u, v]);
    let inner = g.edges_within(&common);
    let c = match common.len() {
        3 => {
            let (Some(p), Some(q)) = (p, q) else {
                return Ok(None);
            };
            if inner.len() != 3 {
                return Ok(None);
            }
            let (w1, w2, w3) = (common[0], common[1], common[2]);
            Certificate::new(
                target,
                [tri(u, w1, w2), tri(v, w1, w3), tri(u, p, w3), tri(v, q, w2)],
                inner.into_iter().chain([e(u, v), e(v, q), e(u, p), e(p, w3), e(q, w2)]),
                Provenance::LowPair3,
            )
        }
        4 => {
            let Some(&w1) = common
                .iter()
                .find(|&&x| common.iter().filter(|&&y| g.has_edge(x, y)).count() >= 2)
            else {
                return Ok(None);
            };
            let nb: Vec<usize> = common.iter().copied().filter(|&y| g.has_edge(w1, y)).collect();
            let (w2, w3) = (nb[0], nb[1]);
            let w4 = common.iter().copied().find(|x| ![w1, w2, w3].contains(x)).unwrap();
            let complete = inner.len() == 6;
            let mut s = vec![tri(u, w1, w2), tri(v, w1, w3), tri(u, v, w4)];
            let mut x: Vec<Edge> = inner;
            x.push(e(u, v));
            if let Some(p) = p {
                s.push(tri(u, p, w3));
                x.extend([e(p, u), e(p, w3)]);
            }
            if let Some(q) = q {
                s.push(tri(v, q, w2));
                x.extend([e(q, v), e(q, w2)]);
            }
            if complete {
                s.push(tri(w2, w3, w4));
            }
            Certificate::new(target, s, x, Provenance::LowPair4)
        }
        5 => {
            let Some((cycle, w)) = four_cycle_plus_one(g, &common) else {
                return Ok(None);
            };
            let [a, b, c, d] = cycle;
            Certificate::new(
                target,
                [tri(u, a, b), tri(u, c, d), tri(v, b, c), tri(v, a, d), tri(u, v, w)],
                [
                    e(u, w),
                    e(v, w),
                    e(u, a),
                    e(u, b),
                    e(v, c),
                    e(v, d),
                    e(a, b),
                    e(b, c),
                    e(c, d),
                    e(d, a),
                ],
                Provenance::LowPair5,
            )
        }
        _ => return Ok(None),
    };
    Ok(Some(c))
}

/// A 4-cycle a-b-c-d inside `set` (five vertices) and the leftover vertex.
fn four_cycle_plus_one(g: &Graph, set: &[usize]) -> Option<([usize; 4], usize)> {
    for &w in set {
        let rest: Vec<usize> = set.iter().copied().filter(|&x| x != w).collect();
        let a = rest[0];
        for &b in &rest[1..] {
            for &d in &rest[1..] {
                if b == d {
                    continue;
                }
                let c = rest.iter().copied().find(|x| ![a, b, d].contains(x)).unwrap();
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a) {
                    return Some(([a, b, c, d], w));
                }
            }
        }
    }
    None
}

/// Vertices of `set` in a 4-cycle order when G[set] is a 4-cycle.
pub(super) fn cycle_order(g: &Graph, set: &[usize]) -> Option<[usize; 4]> {
    if set.len() != 4 || g.edges_within(set).len() != 4 {
        return None;
    }
    let members: BTreeSet<usize> = set.iter().copied().collect();
    let a = set[0];
    let nb: Vec<usize> = g.neighbors(a).filter(|x| members.contains(x)).collect();
    if nb.len() != 2 {
        return None;
    }
    let (b, d) = (nb[0], nb[1]);
    let c = set.iter().copied().find(|x| ![a, b, d].contains(x))?;
    (g.has_edge(b, c) && g.has_edge(c, d)).then_some([a, b, c, d])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::verify_certificate;
    use crate::graph::families::*;

    /// K_n with the given vertex pairs removed.
    fn complete_minus(n: usize, missing: &[(usize, usize)]) -> Graph {
        let gone: Vec<Edge> = missing.iter().map(|&(a, b)| e(a, b)).collect();
        complete(n).without_edges(&gone)
    }

    #[test]
    fn complement_pair_degree_five() {
        // v = 0, N(v) = 1..=5 missing 12 and 34
        let g = complete_minus(6, &[(1, 2), (3, 4)]);
        let c = comp_matching_certificate(&g, 0).unwrap();
        assert_eq!(c.provenance, Provenance::ComplementPair5);
        assert_eq!(c.triangles.len(), 4);
        assert_eq!(c.deleted.len(), 8);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn complement_pair_degree_six() {
        let g = complete_minus(7, &[(1, 2), (3, 4)]);
        let c = comp_matching_certificate(&g, 0).unwrap();
        assert_eq!(c.provenance, Provenance::ComplementPair6);
        assert_eq!(c.triangles.len(), 5);
        assert_eq!(c.deleted.len(), 10);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn complete_neighborhood_gives_nothing() {
        assert!(comp_matching_certificate(&complete(6), 0).is_none());
    }

    #[test]
    fn complement_degree_two_lifts_a_witness() {
        let g = complete_minus(6, &[(1, 2), (1, 3)]);
        let c = comp_matching_certificate(&g, 0).unwrap();
        assert_eq!(c.provenance, Provenance::NeighborhoodWke);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn low_pair_with_five_common_neighbors() {
        // K7: u = 0 and v = 1 share 2..=6
        let g = complete(7);
        let c = red_pair_certificate(&g, 0, 1).unwrap().unwrap();
        assert_eq!(c.provenance, Provenance::LowPair5);
        assert_eq!(c.triangles.len(), 5);
        assert_eq!(c.deleted.len(), 10);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn low_pair_with_three_common_neighbors() {
        // u = 0, v = 1 share 2, 3, 4; p = 5 and q = 6
        let g = complete_minus(7, &[(0, 6), (1, 5)]);
        let c = red_pair_certificate(&g, 0, 1).unwrap().unwrap();
        assert_eq!(c.provenance, Provenance::LowPair3);
        assert_eq!(c.triangles.len(), 4);
        assert_eq!(c.deleted.len(), 8);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn low_pair_with_four_common_neighbors() {
        // H = K4 on 2..=5 and q = 6
        let g = complete_minus(7, &[(0, 6)]);
        let c = red_pair_certificate(&g, 0, 1).unwrap().unwrap();
        assert_eq!(c.provenance, Provenance::LowPair4);
        assert_eq!(c.triangles.len(), 5);
        assert_eq!(verify_certificate(&g, &c), Ok(()));

        // H = K4 minus 23 with no private neighbors; a K5 on 6..=10 joined to
        // H keeps the graph robust
        let mut edges = vec![(0, 1)];
        for w in 2..6 {
            edges.extend([(0, w), (1, w)]);
            edges.extend((6..11).map(|x| (w, x)));
        }
        edges.extend([(2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
        for a in 6..11 {
            edges.extend((a + 1..11).map(|b| (a, b)));
        }
        let g = Graph::from_edges(11, edges).unwrap();
        let c = red_pair_certificate(&g, 0, 1).unwrap().unwrap();
        assert_eq!(c.triangles.len(), 3);
        assert_eq!(c.deleted.len(), 6);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn low_pair_preconditions() {
        assert!(red_pair_certificate(&complete(7), 0, 0).is_err());
        assert!(red_pair_certificate(&complete(4), 0, 1).is_err());
        assert!(red_pair_certificate(&complete(8), 0, 1).is_err());
    }

    #[test]
    fn cycle_order_examples() {
        let c4 = cycle(4);
        assert_eq!(cycle_order(&c4, &[0, 1, 2, 3]), Some([0, 1, 2, 3]));
        assert_eq!(cycle_order(&complete(4), &[0, 1, 2, 3]), None);
    }
}
