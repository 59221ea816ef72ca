//! Reducible sets: the certificate data model, an independent checker, and
//! the constructors that produce certificates for local configurations.
//!
//! A vertex certificate names V₀, a set S of edge-disjoint triangles and an
//! edge set X with |X| ≤ 2|S|, such that G − X has no triangle through V₀
//! and X holds every S-edge with both ends outside V₀. Edge certificates are
//! the same with an edge set E₀ in place of V₀. Either way, a solution of the
//! residual graph extends by S and X to a solution of G.

mod constructors;
mod subsumption;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_robust, Edge, Graph, Triangle};
use crate::wke::{find_wke, verify_wke_witness, WkeMethod, WkeWitness};

pub use constructors::{comp_matching_certificate, red_pair_certificate};
pub use subsumption::subsumption_certificate;

/// The reducible set itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "target")]
pub enum Target {
    #[serde(rename = "vertex")]
    Vertices(Vec<usize>),
    #[serde(rename = "edge")]
    Edges(Vec<Edge>),
}

impl Target {
    pub fn is_empty(&self) -> bool {
        match self {
            Target::Vertices(v) => v.is_empty(),
            Target::Edges(e) => e.is_empty(),
        }
    }
}

/// Which construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A vertex on no triangle; S and X are empty.
    TriangleFreeVertex,
    /// wKE witness for the whole neighborhood, lifted to a vertex set.
    NeighborhoodWke,
    /// wKE witness for some neighborhood components, lifted to an edge set.
    ComponentWke,
    /// 5-vertex whose neighborhood misses exactly two disjoint edges.
    ComplementPair5,
    /// 6-vertex whose neighborhood misses exactly two disjoint edges.
    ComplementPair6,
    /// Adjacent 6⁻-vertices with three common neighbors.
    LowPair3,
    /// Adjacent 6⁻-vertices with four common neighbors.
    LowPair4,
    /// Adjacent 6-vertices with equal closed neighborhoods.
    LowPair5,
    /// 10⁺-vertex subsuming a 6⁻-vertex with many 6⁻-neighbors.
    HubTenPlus,
    /// 9-vertex subsuming three 6⁻-vertices with a fourth 6⁻-neighbor.
    HubNine,
    #[serde(rename = "subsumed-5-1a")]
    Subsumed5Case1a,
    #[serde(rename = "subsumed-5-1b")]
    Subsumed5Case1b,
    #[serde(rename = "subsumed-5-2a")]
    Subsumed5Case2a,
    #[serde(rename = "subsumed-5-2b-i")]
    Subsumed5Case2bi,
    #[serde(rename = "subsumed-5-2b-ii")]
    Subsumed5Case2bii,
    #[serde(rename = "subsumed-5-2c")]
    Subsumed5Case2c,
    /// 7-vertex subsuming a 6-vertex.
    Subsumed6,
    /// 7-vertex next to a thin 6-vertex.
    ThinNeighbor,
    /// 7-, 8- or 9-vertex with more than d − 4 independent 6⁻-neighbors.
    CrowdedHub,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap_or_default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub target: Target,
    pub triangles: Vec<Triangle>,
    pub deleted: Vec<Edge>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wke_method: Option<WkeMethod>,
}

impl Certificate {
    /// Builds a certificate with every part sorted and deduplicated.
    pub fn new(
        target: Target,
        triangles: impl IntoIterator<Item = Triangle>,
        deleted: impl IntoIterator<Item = Edge>,
        provenance: Provenance,
    ) -> Self {
        let target = match target {
            Target::Vertices(v) => Target::Vertices(sorted(v)),
            Target::Edges(e) => Target::Edges(sorted(e)),
        };
        Certificate {
            target,
            triangles: sorted(triangles),
            deleted: sorted(deleted),
            provenance,
            wke_method: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.triangles.is_empty() && self.deleted.is_empty()
    }
}

fn sorted<T: Ord>(items: impl IntoIterator<Item = T>) -> Vec<T> {
    items.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

/// First violated condition found by [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum CertificateFailure {
    #[error("target set is empty")]
    EmptyTarget,
    #[error("target {0} is not in the graph")]
    TargetNotInGraph(String),
    #[error("triangle {0} is not in the graph")]
    TriangleNotInGraph(Triangle),
    #[error("deleted edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),
    #[error("triangles {first} and {second} share edge {edge}")]
    SharedEdge {
        edge: Edge,
        first: Triangle,
        second: Triangle,
    },
    #[error("|X| = {deleted} exceeds 2|S| = {}", 2 * triangles)]
    Cardinality { deleted: usize, triangles: usize },
    #[error("triangle {0} survives in G - X and meets the target")]
    SurvivingTriangle(Triangle),
    #[error("S-edge {0} must be deleted")]
    UncoveredEdge(Edge),
}

/// Checks a certificate against `g` directly from the definitions and
/// reports the first violated condition.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> std::result::Result<(), CertificateFailure> {
    if c.target.is_empty() {
        return Err(CertificateFailure::EmptyTarget);
    }
    match &c.target {
        Target::Vertices(vs) => {
            if let Some(v) = vs.iter().find(|&&v| v >= g.order()) {
                return Err(CertificateFailure::TargetNotInGraph(v.to_string()));
            }
        }
        Target::Edges(es) => {
            if let Some(e) = es.iter().find(|e| !g.contains_edge(**e)) {
                return Err(CertificateFailure::TargetNotInGraph(e.to_string()));
            }
        }
    }
    if let Some(t) = c.triangles.iter().find(|t| !t.is_in(g)) {
        return Err(CertificateFailure::TriangleNotInGraph(*t));
    }
    if let Some(e) = c.deleted.iter().find(|e| !g.contains_edge(**e)) {
        return Err(CertificateFailure::EdgeNotInGraph(*e));
    }
    let mut owner: BTreeMap<Edge, Triangle> = BTreeMap::new();
    for t in &c.triangles {
        for e in t.edges() {
            if let Some(prev) = owner.insert(e, *t) {
                if prev != *t {
                    return Err(CertificateFailure::SharedEdge {
                        edge: e,
                        first: prev,
                        second: *t,
                    });
                }
            }
        }
    }
    let deleted: BTreeSet<Edge> = c.deleted.iter().copied().collect();
    let triangles: BTreeSet<Triangle> = c.triangles.iter().copied().collect();
    if deleted.len() > 2 * triangles.len() {
        return Err(CertificateFailure::Cardinality {
            deleted: deleted.len(),
            triangles: triangles.len(),
        });
    }
    let rest = g.without_edges(&deleted);
    match &c.target {
        Target::Vertices(vs) => {
            for &v in vs {
                if let Some(t) = rest.triangles_at(v).first() {
                    return Err(CertificateFailure::SurvivingTriangle(*t));
                }
            }
            let inside: BTreeSet<usize> = vs.iter().copied().collect();
            for e in owner.keys() {
                if !inside.contains(&e.u()) && !inside.contains(&e.v()) && !deleted.contains(e) {
                    return Err(CertificateFailure::UncoveredEdge(*e));
                }
            }
        }
        Target::Edges(es) => {
            for e in es {
                if let Some(w) = rest.common_neighbors(e.u(), e.v()).first() {
                    return Err(CertificateFailure::SurvivingTriangle(Triangle::new(e.u(), e.v(), *w)));
                }
            }
            let target: BTreeSet<Edge> = es.iter().copied().collect();
            for e in owner.keys() {
                if !target.contains(e) && !deleted.contains(e) {
                    return Err(CertificateFailure::UncoveredEdge(*e));
                }
            }
        }
    }
    Ok(())
}

/// (G − X) − V₀ or (G − X) − E₀. Vertex ids are kept; V₀ becomes isolated.
pub fn residual(g: &Graph, c: &Certificate) -> Graph {
    let rest = g.without_edges(&c.deleted);
    match &c.target {
        Target::Vertices(vs) => rest.isolate(vs),
        Target::Edges(es) => rest.without_edges(es),
    }
}

/// One reduction: a verified certificate and the graph left after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub certificate: Certificate,
    pub residual: Graph,
}

/// Turns a wKE witness of G[G0] into a certificate at `v`. The witness uses
/// ids of `g`. When G0 is all of N(v) the certificate is for {v}, otherwise
/// for the edges from v to G0.
pub fn lift_wke(g: &Graph, v: usize, g0: &[usize], w: &WkeWitness) -> Result<Certificate> {
    g.check_vertex(v)?;
    let g0: BTreeSet<usize> = g0.iter().copied().collect();
    if g0.is_empty() {
        return Err(Error::Precondition("lifted vertex set is empty".into()));
    }
    for &x in &g0 {
        g.check_vertex(x)?;
        if !g.has_edge(v, x) {
            return Err(Error::Precondition(format!("{x} is not a neighbor of {v}")));
        }
        if let Some(y) = g.neighbors(x).find(|y| g.has_edge(v, *y) && !g0.contains(y)) {
            return Err(Error::Precondition(format!(
                "{x}-{y} leaves the chosen neighborhood components"
            )));
        }
    }
    let members: Vec<usize> = g0.iter().copied().collect();
    let (local, map) = g.induced_subgraph(&members)?;
    let index = |x: usize| map.binary_search(&x).ok();
    let local_w = WkeWitness::new(
        w.matching
            .iter()
            .map(|e| match (index(e.u()), index(e.v())) {
                (Some(a), Some(b)) => Ok(Edge::new(a, b)),
                _ => Err(Error::InvalidWitness(format!("matching edge {e} outside G0"))),
            })
            .collect::<Result<Vec<_>>>()?,
        w.cover
            .iter()
            .map(|&x| index(x).ok_or_else(|| Error::InvalidWitness(format!("cover vertex {x} outside G0"))))
            .collect::<Result<Vec<_>>>()?,
    );
    match verify_wke_witness(&local, &local_w) {
        Ok(true) => {}
        Ok(false) => return Err(Error::InvalidWitness("not a wKE witness of G[G0]".into())),
        Err(e) => return Err(Error::InvalidWitness(e.to_string())),
    }
    let triangles = w.matching.iter().map(|e| Triangle::new(v, e.u(), e.v()));
    let deleted = w
        .matching
        .iter()
        .copied()
        .chain(w.cover.iter().map(|&x| Edge::new(v, x)));
    let whole = g0.len() == g.degree(v);
    let (target, provenance) = if whole {
        (Target::Vertices(vec![v]), Provenance::NeighborhoodWke)
    } else {
        (
            Target::Edges(g0.iter().map(|&x| Edge::new(v, x)).collect()),
            Provenance::ComponentWke,
        )
    };
    Ok(Certificate::new(target, triangles, deleted, provenance))
}

/// {v} with empty S and X, valid when v lies on no triangle.
pub fn trivial_certificate(g: &Graph, v: usize) -> Option<Certificate> {
    if v >= g.order() || g.in_triangle(v) {
        return None;
    }
    Some(Certificate::new(
        Target::Vertices(vec![v]),
        [],
        [],
        Provenance::TriangleFreeVertex,
    ))
}

/// Lifts a witness for the whole neighborhood of `v` when one is found.
pub(crate) fn neighborhood_wke(g: &Graph, v: usize) -> Option<Certificate> {
    let nbhd = g.neighborhood(v);
    if nbhd.is_empty() {
        return None;
    }
    let (local, map) = g.induced_subgraph(&nbhd).ok()?;
    let (w, method) = find_wke(&local)?;
    lifted(g, v, &nbhd, &w, &map, method)
}

fn lifted(
    g: &Graph,
    v: usize,
    g0: &[usize],
    w: &WkeWitness,
    map: &[usize],
    method: WkeMethod,
) -> Option<Certificate> {
    let host = WkeWitness::new(
        w.matching.iter().map(|e| e.map(|x| map[x])),
        w.cover.iter().map(|&x| map[x]),
    );
    let mut c = lift_wke(g, v, g0, &host).expect("witness was found for this subgraph");
    c.wke_method = Some(method);
    Some(c)
}

/// Edge certificates from the neighborhood components of `v` that have
/// witnesses, merged into one.
fn component_wke(g: &Graph, v: usize) -> Option<Certificate> {
    let nbhd = g.neighborhood(v);
    let (local, map) = g.induced_subgraph(&nbhd).ok()?;
    let mut chosen = Vec::new();
    let mut matching = Vec::new();
    let mut cover = Vec::new();
    for comp in local.components() {
        let (sub, sub_map) = local.induced_subgraph(&comp).ok()?;
        if let Some((w, _)) = find_wke(&sub) {
            let to_host = |x: usize| map[sub_map[x]];
            chosen.extend(comp.iter().map(|&x| map[x]));
            matching.extend(w.matching.iter().map(|e| e.map(to_host)));
            cover.extend(w.cover.iter().map(|&x| to_host(x)));
        }
    }
    if chosen.is_empty() {
        return None;
    }
    let w = WkeWitness::new(matching, cover);
    let c = lift_wke(g, v, &chosen, &w).expect("component witnesses combine");
    Some(c)
}

fn checked(g: &Graph, c: Certificate) -> Result<Certificate> {
    match verify_certificate(g, &c) {
        Ok(()) => Ok(c),
        Err(failure) => Err(Error::InvalidCertificate {
            provenance: c.provenance.to_string(),
            failure,
        }),
    }
}

fn step(g: &Graph, c: Certificate) -> Result<Option<ReductionStep>> {
    let certificate = checked(g, c)?;
    let residual = residual(g, &certificate);
    Ok(Some(ReductionStep {
        certificate,
        residual,
    }))
}

fn low(g: &Graph, v: usize) -> bool {
    g.degree(v) <= 6
}

/// One reduction step on `g`, trying constructors in a fixed order over
/// ascending vertex ids: a vertex on no triangle, a wKE neighborhood (whole,
/// then by components), a 6⁻-vertex with a two-edge complement, a pair of
/// adjacent 6⁻-vertices, and the subsumption configurations. Every
/// certificate is checked before it is returned; a constructor producing an
/// invalid one is reported as [`Error::InvalidCertificate`].
pub fn find_reducible(g: &Graph) -> Result<Option<ReductionStep>> {
    let n = g.order();
    if n == 0 {
        return Ok(None);
    }
    if !g.has_triangle() {
        return step(g, trivial_certificate(g, 0).expect("no triangles"));
    }
    // isolated vertices would give a step that changes nothing
    if let Some(v) = (0..n).find(|&v| g.degree(v) > 0 && !g.in_triangle(v)) {
        return step(g, trivial_certificate(g, v).expect("v is on no triangle"));
    }
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    for &v in &active {
        if let Some(c) = neighborhood_wke(g, v) {
            return step(g, c);
        }
    }
    for &v in &active {
        if let Some(c) = component_wke(g, v) {
            return step(g, c);
        }
    }
    for &v in active.iter().filter(|&&v| low(g, v)) {
        if let Some(c) = comp_matching_certificate(g, v) {
            return step(g, c);
        }
    }
    let robust = is_robust(g).is_ok();
    if robust {
        for e in g.edges() {
            if !(low(g, e.u()) && low(g, e.v())) {
                continue;
            }
            match red_pair_certificate(g, e.u(), e.v()) {
                Ok(Some(c)) => return step(g, c),
                Ok(None) | Err(Error::Precondition(_)) => {}
                Err(other) => return Err(other),
            }
        }
    }
    for &v in &active {
        if let Some(c) = subsumption_certificate(g, v) {
            return step(g, c);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    pub(crate) fn figure_graph() -> Graph {
        // V0 = {0, 1}; w1..w4 = 2..5; z1, z2 = 6, 7
        Graph::from_edges(
            8,
            [
                (0, 1),
                (3, 5),
                (2, 3),
                (3, 4),
                (4, 5),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 6),
                (3, 7),
                (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_vertex_reducible_set() {
        let g = figure_graph();
        let c = Certificate::new(
            Target::Vertices(vec![0, 1]),
            [Triangle::new(0, 3, 4), Triangle::new(1, 4, 5)],
            [Edge::new(3, 4), Edge::new(4, 5), Edge::new(0, 3), Edge::new(1, 4)],
            Provenance::LowPair3,
        );
        assert_eq!(verify_certificate(&g, &c), Ok(()));
        let r = residual(&g, &c);
        assert_eq!(r.size(), 7);
        assert_eq!(r.degree(0) + r.degree(1) + r.degree(4), 0);
    }

    #[test]
    fn checker_reports_first_failure() {
        let k4 = complete(4);
        let c = Certificate::new(
            Target::Vertices(vec![0]),
            [Triangle::new(0, 1, 2)],
            [],
            Provenance::NeighborhoodWke,
        );
        assert!(matches!(
            verify_certificate(&k4, &c),
            Err(CertificateFailure::SurvivingTriangle(_))
        ));

        let empty = Certificate::new(Target::Vertices(vec![]), [], [], Provenance::TriangleFreeVertex);
        assert_eq!(verify_certificate(&k4, &empty), Err(CertificateFailure::EmptyTarget));

        let shared = Certificate::new(
            Target::Vertices(vec![0]),
            [Triangle::new(0, 1, 2), Triangle::new(0, 1, 3)],
            [],
            Provenance::NeighborhoodWke,
        );
        assert!(matches!(
            verify_certificate(&k4, &shared),
            Err(CertificateFailure::SharedEdge { .. })
        ));

        let heavy = Certificate::new(
            Target::Vertices(vec![0]),
            [],
            [Edge::new(0, 1)],
            Provenance::NeighborhoodWke,
        );
        assert!(matches!(
            verify_certificate(&k4, &heavy),
            Err(CertificateFailure::Cardinality { deleted: 1, triangles: 0 })
        ));

        let loose = Certificate::new(
            Target::Vertices(vec![0]),
            [Triangle::new(0, 1, 2)],
            [Edge::new(0, 3)],
            Provenance::NeighborhoodWke,
        );
        assert!(matches!(
            verify_certificate(&k4, &loose),
            Err(CertificateFailure::SurvivingTriangle(_))
        ));
    }

    #[test]
    fn trivial_certificate_on_pendant() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(trivial_certificate(&g, 0).is_none());
        let c = trivial_certificate(&g, 3).unwrap();
        assert_eq!(verify_certificate(&g, &c), Ok(()));
    }

    #[test]
    fn lift_wheel_hub() {
        let w5 = wheel(5);
        let hub = 5;
        let w = WkeWitness::new([Edge::new(0, 1), Edge::new(2, 3)], [1, 4]);
        let c = lift_wke(&w5, hub, &[0, 1, 2, 3, 4], &w).unwrap();
        assert_eq!(c.target, Target::Vertices(vec![hub]));
        assert_eq!(c.triangles, vec![Triangle::new(0, 1, 5), Triangle::new(2, 3, 5)]);
        assert_eq!(
            c.deleted,
            vec![Edge::new(0, 1), Edge::new(1, 5), Edge::new(2, 3), Edge::new(4, 5)]
        );
        assert_eq!(verify_certificate(&w5, &c), Ok(()));
    }

    #[test]
    fn lift_single_edge_component() {
        // v = 0 with neighborhood components {1, 2} (an edge) and {3}
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let w = WkeWitness::new([Edge::new(1, 2)], []);
        let c = lift_wke(&g, 0, &[1, 2], &w).unwrap();
        assert_eq!(c.target, Target::Edges(vec![Edge::new(0, 1), Edge::new(0, 2)]));
        assert_eq!(c.triangles, vec![Triangle::new(0, 1, 2)]);
        assert_eq!(c.deleted, vec![Edge::new(1, 2)]);
        assert_eq!(verify_certificate(&g, &c), Ok(()));
        // not a union of components
        assert!(lift_wke(&g, 0, &[1], &WkeWitness::default()).is_err());
        let bad = WkeWitness::new([], []);
        assert!(matches!(lift_wke(&g, 0, &[1, 2], &bad), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn k4_first_step() {
        let step = find_reducible(&complete(4)).unwrap().unwrap();
        let c = &step.certificate;
        assert_eq!(c.target, Target::Vertices(vec![0]));
        assert_eq!(c.triangles, vec![Triangle::new(0, 1, 2)]);
        assert_eq!(c.deleted, vec![Edge::new(0, 3), Edge::new(1, 2)]);
        assert_eq!(step.residual.edges(), vec![Edge::new(1, 3), Edge::new(2, 3)]);
        assert!(!step.residual.has_triangle());
    }

    #[test]
    fn triangle_free_graph_steps_at_zero() {
        let step = find_reducible(&cycle(5)).unwrap().unwrap();
        assert_eq!(step.certificate.target, Target::Vertices(vec![0]));
        assert!(step.certificate.is_trivial());
        assert!(find_reducible(&Graph::empty(0)).unwrap().is_none());
    }

    #[test]
    fn certificate_json_shape() {
        let c = find_reducible(&complete(4)).unwrap().unwrap().certificate;
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["kind"], "vertex");
        assert_eq!(v["target"], serde_json::json!([0]));
        assert_eq!(v["triangles"], serde_json::json!([[0, 1, 2]]));
        assert_eq!(v["provenance"], "neighborhood-wke");
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
