//! graph6: a size prefix followed by the upper-triangle adjacency bits
//! x(0,1), x(0,2), x(1,2), x(0,3), ... packed six to a byte, each byte
//! offset by 63.

use crate::graph::{Edge, Graph};
use crate::{Error, Result};

pub const HEADER: &[u8] = b">>graph6<<";
/// Orders above this are rejected while parsing; the adjacency rows alone
/// would need n^2 bits.
pub const MAX_ORDER: usize = 10_000;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one record. A leading header and trailing line ending are
/// accepted; byte offsets in errors are relative to `line`.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut end = line.len();
    while end > 0 && matches!(line[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = &line[start..end];
    let at = |i: usize| start + i;
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(at(i), format!("byte {} outside 63..=126", body[i])));
    }
    let (n, mut pos) = match body {
        [] => return Err(err(at(0), "empty record")),
        [126, 126, rest @ ..] => (read_size(rest, 6).ok_or_else(|| err(at(body.len()), "truncated size"))?, 8),
        [126, rest @ ..] => (read_size(rest, 3).ok_or_else(|| err(at(body.len()), "truncated size"))?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(err(at(0), format!("order {n} exceeds limit {MAX_ORDER}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let len = bits.div_ceil(6);
    if body.len() < pos + len {
        return Err(err(at(body.len()), format!("truncated: expected {} bytes", pos + len)));
    }
    if body.len() > pos + len {
        return Err(err(at(pos + len), "trailing bytes after record"));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0, 1);
    for k in 0..bits {
        let byte = body[pos + k / 6] - 63;
        if byte >> (5 - k % 6) & 1 == 1 {
            edges.push(Edge::new(i, j));
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    if bits % 6 != 0 {
        pos += len - 1;
        let pad = (body[pos] - 63) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(err(at(pos), "nonzero padding bits"));
        }
    }
    Ok(Graph::from_edge_set(n, edges))
}

fn read_size(rest: &[u8], count: usize) -> Option<usize> {
    let digits = rest.get(..count)?;
    Some(digits.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
}

/// Encodes `g` without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        let count = if n <= 258_047 { 3 } else { 6 };
        out.extend(std::iter::repeat_n(126, if count == 3 { 1 } else { 2 }));
        out.extend((0..count).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn hand_encoded_fixtures() {
        assert_eq!(parse_graph6(b"Bw").unwrap(), complete(3));
        assert_eq!(parse_graph6(b"C~").unwrap(), complete(4));
        assert_eq!(parse_graph6(b"Dhc").unwrap(), cycle(5));
        assert_eq!(parse_graph6(b"D??").unwrap(), Graph::empty(5));
        assert_eq!(emit_graph6(&complete(3)), "Bw");
        assert_eq!(emit_graph6(&complete(4)), "C~");
        assert_eq!(emit_graph6(&cycle(5)), "Dhc");
        assert_eq!(emit_graph6(&Graph::empty(5)), "D??");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&petersen()), "IheA@GUAo");
    }

    #[test]
    fn header_and_line_endings() {
        assert_eq!(parse_graph6(b">>graph6<<C~\r\n").unwrap(), complete(4));
    }

    #[test]
    fn long_sizes() {
        let g = path(63);
        let s = emit_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        // 8-byte form of order 5 is accepted though not canonical
        let mut long = vec![126, 126, 63, 63, 63, 63, 63, 68];
        long.extend_from_slice(b"hc");
        assert_eq!(parse_graph6(&long).unwrap(), cycle(5));
    }

    #[test]
    fn errors_carry_offsets() {
        let offset = |s: &[u8]| match parse_graph6(s) {
            Err(Error::Graph6 { offset, .. }) => offset,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(offset(b"D?"), 2);
        assert_eq!(offset(b"D???"), 3);
        assert_eq!(offset(b"D? ?"), 2);
        assert_eq!(offset(b""), 0);
        assert_eq!(offset(b"Bx"), 1); // padding bit set
        assert_eq!(offset(b"~?"), 2);
        assert_eq!(offset(b"~~~~~~~~"), 0);
        assert_eq!(offset(b">>graph6<<D?"), 12);
    }
}
