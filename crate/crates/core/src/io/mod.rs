//! Graph formats and the JSON envelope shared by every serialized report.

pub mod edgelist;
pub mod graph6;

use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

use crate::graph::Graph;
use crate::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            _ => Err(format!("unknown format {s:?} (expected graph6 or edgelist)")),
        }
    }
}

/// An edge list starts, after comments, with a line of two integers; anything
/// else is read as graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() == 2
            && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
        {
            Format::Edgelist
        }
        _ => Format::Graph6,
    }
}

/// Parses every graph in `text`: one per non-empty line for graph6, a single
/// graph for edge lists.
pub fn parse_graphs(text: &str, format: Option<Format>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Edgelist => Ok(vec![parse_edge_list(text)?]),
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.trim_end().as_bytes())
                    .map_err(|e| Error::AtLine { line: i + 1, error: Box::new(e) })
            })
            .collect(),
    }
}

/// Like [`parse_graphs`] but requires exactly one graph.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    let mut graphs = parse_graphs(text, format)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        k => Err(Error::Precondition(format!("expected one graph, found {k}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub schema_version: String,
    #[serde(flatten)]
    pub body: T,
}

pub fn to_json<T: Serialize>(body: &T) -> Result<String> {
    let doc = Document { schema_version: SCHEMA_VERSION.to_string(), body };
    Ok(serde_json::to_string_pretty(&doc)?)
}

/// Single-line form for streams of documents.
pub fn to_json_line<T: Serialize>(body: &T) -> Result<String> {
    let doc = Document { schema_version: SCHEMA_VERSION.to_string(), body };
    Ok(serde_json::to_string(&doc)?)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let doc: Document<T> = serde_json::from_str(text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Precondition(format!(
            "unsupported schema version {:?}",
            doc.schema_version
        )));
    }
    Ok(doc.body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn detection() {
        assert_eq!(detect_format("C~\nBw\n"), Format::Graph6);
        assert_eq!(detect_format("# k3\n3 3\n0 1\n"), Format::Edgelist);
        assert_eq!(detect_format(">>graph6<<C~"), Format::Graph6);
        assert_eq!("g6".parse::<Format>(), Ok(Format::Graph6));
        assert!("dot".parse::<Format>().is_err());
    }

    #[test]
    fn multi_record_streams() {
        let gs = parse_graphs("Bw\n\nC~\r\nDhc\n", None).unwrap();
        assert_eq!(gs, vec![complete(3), complete(4), cycle(5)]);
        match parse_graphs("Bw\nC\n", Some(Format::Graph6)) {
            Err(Error::AtLine { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_graph("Bw\nC~\n", None).is_err());
        assert_eq!(parse_graph("3 3\n0 1\n1 2\n0 2\n", None).unwrap(), complete(3));
    }

    #[test]
    fn envelope() {
        #[derive(Debug, PartialEq, Serialize, Deserialize)]
        struct Body {
            value: u32,
        }
        let text = to_json(&Body { value: 3 }).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["value"], 3);
        assert_eq!(from_json::<Body>(&text).unwrap(), Body { value: 3 });
        assert!(from_json::<Body>(r#"{"schema_version":"2","value":3}"#).is_err());
    }
}
