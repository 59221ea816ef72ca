use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Unordered vertex triple, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 3]", into = "[usize; 3]")]
pub struct Triangle([usize; 3]);

impl Triangle {
    /// Panics on repeated vertices.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(v[0] != v[1] && v[1] != v[2], "triangle needs three distinct vertices");
        Triangle(v)
    }

    pub(crate) fn from_sorted(v: [usize; 3]) -> Self {
        debug_assert!(v[0] < v[1] && v[1] < v[2]);
        Triangle(v)
    }

    /// Checked constructor: the three vertices must be pairwise adjacent in `g`.
    pub fn in_graph(g: &Graph, a: usize, b: usize, c: usize) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::MissingTriangle(format!("{a}{b}{c}")));
        }
        let t = Triangle::new(a, b, c);
        if !t.is_in(g) {
            return Err(Error::MissingTriangle(t.to_string()));
        }
        Ok(t)
    }

    pub fn vertices(self) -> [usize; 3] {
        self.0
    }

    pub fn edges(self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)]
    }

    pub fn contains(self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn is_in(self, g: &Graph) -> bool {
        self.edges().iter().all(|&e| g.contains_edge(e))
    }

    pub fn map(self, f: impl Fn(usize) -> usize) -> Triangle {
        let [a, b, c] = self.0;
        Triangle::new(f(a), f(b), f(c))
    }
}

impl TryFrom<[usize; 3]> for Triangle {
    type Error = String;

    fn try_from([a, b, c]: [usize; 3]) -> std::result::Result<Self, Self::Error> {
        if a == b || b == c || a == c {
            Err(format!("degenerate triangle [{a}, {b}, {c}]"))
        } else {
            Ok(Triangle::new(a, b, c))
        }
    }
}

impl From<Triangle> for [usize; 3] {
    fn from(t: Triangle) -> Self {
        t.0
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a}-{b}-{c}")
    }
}
