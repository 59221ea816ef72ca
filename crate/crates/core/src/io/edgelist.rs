//! Plain edge lists: an `n m` header line then `m` lines `u v`. Blank lines
//! and `#` comments are ignored.

use std::collections::HashSet;
use std::fmt::Write;

use crate::graph::Graph;
use crate::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList { line, message: message.into() }
}

fn pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| err(line, format!("expected a non-negative integer, got {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(err(line, "expected two integers")),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = pair(first, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = first;
    let mut seen = HashSet::new();
    for (line, l) in lines {
        let (a, b) = pair(line, l)?;
        if a >= n || b >= n {
            return Err(err(line, format!("vertex out of range for n = {n}")));
        }
        if edges.len() == m {
            return Err(err(line, format!("more than the {m} declared edges")));
        }
        if a == b {
            return Err(err(line, format!("self-loop at {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(err(line, format!("duplicate edge {a} {b}")));
        }
        edges.push((a, b));
        last = line;
    }
    if edges.len() != m {
        return Err(err(last, format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).expect("writing to a String");
    }
    out
}
