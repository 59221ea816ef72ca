use thiserror::Error;

use crate::certificates::CertificateFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("{0} is not an edge of the graph")]
    MissingEdge(String),

    #[error("{0} is not a triangle of the graph")]
    MissingTriangle(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("{what} limited to {limit} vertices, got {got}")]
    TooLarge { what: &'static str, limit: usize, got: usize },

    #[error("oracle refused: {triangles} triangles exceeds bound {bound}")]
    OracleRefused { triangles: usize, bound: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("witness does not verify: {0}")]
    InvalidWitness(String),

    #[error("constructor {provenance} emitted an invalid certificate: {failure}")]
    InvalidCertificate {
        provenance: String,
        failure: CertificateFailure,
    },

    #[error("parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("line {line}: {error}")]
    AtLine { line: usize, error: Box<Error> },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
