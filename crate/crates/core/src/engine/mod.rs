//! The reduction loop, independent witness checking and the discharging
//! audit.

mod discharging;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use discharging::{
    discharging_audit, redlem_configuration_scan, Charge, ChargeReport, Clause, ClauseViolation,
    RedlemReport, Rule, Transfer, TransferReason,
};

use crate::certificates::{find_reducible, residual, verify_certificate, Certificate, CertificateFailure};
use crate::graph::{Edge, Graph, Triangle};
use crate::io::emit_graph6;
use crate::oracles;
use crate::Result;

/// Residuals with at most this many triangle-incident vertices fall back to
/// the exact oracles when no reducible set is found.
pub const FALLBACK_THRESHOLD: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub certificate: Certificate,
    pub residual_graph6: String,
    pub residual_sha256: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FallbackKind {
    /// Optimal packing and cover of the last residual.
    Exact,
    /// A maximal packing whose edges are all deleted.
    Greedy,
}

/// What was added to `T` and `Y` after the last reduction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fallback {
    pub kind: FallbackKind,
    pub triangles: Vec<Triangle>,
    pub deleted: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuzaWitness {
    pub triangles: Vec<Triangle>,
    pub deleted: Vec<Edge>,
    /// Set only when `|Y| <= 2|T|` is guaranteed by the construction.
    pub certified: bool,
    pub trace: Vec<TraceStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fallback: Option<Fallback>,
}

pub fn graph_sha256(g: &Graph) -> String {
    let digest = Sha256::digest(emit_graph6(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Peels reducible sets until the residual is triangle-free. If no reducible
/// set exists the rest is handled by the exact oracles (small residuals, still
/// certified when the oracle pair satisfies the bound) or by a greedy
/// maximal packing (uncertified).
///
/// Errors only when a constructor emits a certificate that fails its own
/// check.
pub fn solve(g: &Graph) -> Result<TuzaWitness> {
    let mut current = g.clone();
    let mut trace = Vec::new();
    let mut fallback = None;
    while current.has_triangle() {
        match find_reducible(&current)? {
            Some(step) => {
                assert!(step.residual != current, "reduction step made no progress");
                trace.push(TraceStep {
                    residual_graph6: emit_graph6(&step.residual),
                    residual_sha256: graph_sha256(&step.residual),
                    certificate: step.certificate,
                });
                current = step.residual;
            }
            None => {
                fallback = Some(fallback_for(&current)?);
                break;
            }
        }
    }
    let mut triangles: Vec<Triangle> = Vec::new();
    let mut deleted: Vec<Edge> = Vec::new();
    for s in &trace {
        triangles.extend(&s.certificate.triangles);
        deleted.extend(&s.certificate.deleted);
    }
    let certified = match &fallback {
        None => true,
        Some(f) => f.kind == FallbackKind::Exact && f.deleted.len() <= 2 * f.triangles.len(),
    };
    if let Some(f) = &fallback {
        triangles.extend(&f.triangles);
        deleted.extend(&f.deleted);
    }
    triangles.sort_unstable();
    deleted.sort_unstable();
    deleted.dedup();
    Ok(TuzaWitness { triangles, deleted, certified, trace, fallback })
}

fn fallback_for(g: &Graph) -> Result<Fallback> {
    if g.triangle_support() <= FALLBACK_THRESHOLD {
        let check = oracles::check_tuza(g)?;
        return Ok(Fallback {
            kind: FallbackKind::Exact,
            triangles: check.nu.witness,
            deleted: check.tau.witness,
        });
    }
    let mut used = std::collections::HashSet::new();
    let mut triangles = Vec::new();
    for t in g.triangles() {
        if t.edges().iter().all(|e| !used.contains(e)) {
            used.extend(t.edges());
            triangles.push(t);
        }
    }
    let mut deleted: Vec<Edge> = used.into_iter().collect();
    deleted.sort_unstable();
    Ok(Fallback { kind: FallbackKind::Greedy, triangles, deleted })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "witness_failure", rename_all = "kebab-case")]
pub enum WitnessFailure {
    #[error("{0} is not a triangle of the graph")]
    TriangleNotInGraph(Triangle),
    #[error("{0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("triangles {first} and {second} share edge {edge}")]
    SharedEdge { edge: Edge, first: Triangle, second: Triangle },
    #[error("triangle {0} survives deletion of Y")]
    SurvivingTriangle(Triangle),
    #[error("certified witness has |Y| = {deleted} > 2|T| = {}", 2 * triangles)]
    Cardinality { deleted: usize, triangles: usize },
    #[error("trace step {step}: {failure}")]
    Step { step: usize, failure: CertificateFailure },
    #[error("trace step {step}: residual does not match the recorded {field}")]
    ResidualMismatch { step: usize, field: &'static str },
    #[error("trace leaves a residual with triangle {0} and no fallback")]
    UnfinishedTrace(Triangle),
    #[error("fallback pair does not solve the last residual")]
    BadFallback,
    #[error("{0} of the witness does not equal the union over the trace")]
    TraceMismatch(&'static str),
    #[error("certified flag set on a greedy fallback")]
    UnearnedCertification,
}

/// Checks `T` and `Y` against `g` directly, ignoring the trace.
pub fn verify_witness(g: &Graph, w: &TuzaWitness) -> std::result::Result<(), WitnessFailure> {
    verify_pair(g, &w.triangles, &w.deleted)?;
    if w.certified && w.deleted.len() > 2 * w.triangles.len() {
        return Err(WitnessFailure::Cardinality {
            deleted: w.deleted.len(),
            triangles: w.triangles.len(),
        });
    }
    Ok(())
}

fn verify_pair(g: &Graph, triangles: &[Triangle], deleted: &[Edge]) -> std::result::Result<(), WitnessFailure> {
    if let Some(&t) = triangles.iter().find(|t| !t.is_in(g)) {
        return Err(WitnessFailure::TriangleNotInGraph(t));
    }
    if let Some(&e) = deleted.iter().find(|&&e| !g.contains_edge(e)) {
        return Err(WitnessFailure::EdgeNotInGraph(e));
    }
    let mut owner = std::collections::HashMap::new();
    for &t in triangles {
        for e in t.edges() {
            if let Some(&first) = owner.get(&e) {
                return Err(WitnessFailure::SharedEdge { edge: e, first, second: t });
            }
            owner.insert(e, t);
        }
    }
    if let Some(&t) = g.without_edges(deleted).triangles().first() {
        return Err(WitnessFailure::SurvivingTriangle(t));
    }
    Ok(())
}

/// Replays the trace: every certificate must verify on its input, every
/// residual must match the recorded hash, and `T`, `Y` must be exactly the
/// unions of the step sets and the fallback pair.
pub fn verify_trace(g: &Graph, w: &TuzaWitness) -> std::result::Result<(), WitnessFailure> {
    verify_witness(g, w)?;
    let mut current = g.clone();
    let mut triangles = Vec::new();
    let mut deleted = Vec::new();
    for (i, s) in w.trace.iter().enumerate() {
        verify_certificate(&current, &s.certificate)
            .map_err(|failure| WitnessFailure::Step { step: i, failure })?;
        current = residual(&current, &s.certificate);
        if emit_graph6(&current) != s.residual_graph6 {
            return Err(WitnessFailure::ResidualMismatch { step: i, field: "graph6" });
        }
        if graph_sha256(&current) != s.residual_sha256 {
            return Err(WitnessFailure::ResidualMismatch { step: i, field: "sha256" });
        }
        triangles.extend(&s.certificate.triangles);
        deleted.extend(&s.certificate.deleted);
    }
    match &w.fallback {
        None => {
            if let Some(&t) = current.triangles().first() {
                return Err(WitnessFailure::UnfinishedTrace(t));
            }
        }
        Some(f) => {
            verify_pair(&current, &f.triangles, &f.deleted).map_err(|_| WitnessFailure::BadFallback)?;
            if w.certified
                && (f.kind == FallbackKind::Greedy || f.deleted.len() > 2 * f.triangles.len())
            {
                return Err(WitnessFailure::UnearnedCertification);
            }
            triangles.extend(&f.triangles);
            deleted.extend(&f.deleted);
        }
    }
    triangles.sort_unstable();
    deleted.sort_unstable();
    deleted.dedup();
    let mut claimed_t = w.triangles.clone();
    claimed_t.sort_unstable();
    let mut claimed_y = w.deleted.clone();
    claimed_y.sort_unstable();
    if claimed_t != triangles {
        return Err(WitnessFailure::TraceMismatch("T"));
    }
    if claimed_y != deleted {
        return Err(WitnessFailure::TraceMismatch("Y"));
    }
    Ok(())
}
