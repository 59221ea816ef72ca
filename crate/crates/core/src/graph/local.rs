use serde::{Deserialize, Serialize};

use super::{maximum_matching, Graph};

/// A vertex whose neighborhood has a component of order at most four.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustnessViolation {
    pub vertex: usize,
    pub component: Vec<usize>,
}

/// Every component of every G[N(v)] must have order at least five.
/// Returns the first violation in vertex order, with the component's
/// vertices given as ids of `g`.
pub fn is_robust(g: &Graph) -> Result<(), RobustnessViolation> {
    for v in 0..g.order() {
        let nbhd = g.neighborhood(v);
        let (local, map) = g.induced_subgraph(&nbhd).expect("neighborhood is in range");
        if let Some(c) = local.components().into_iter().find(|c| c.len() < 5) {
            return Err(RobustnessViolation {
                vertex: v,
                component: c.into_iter().map(|x| map[x]).collect(),
            });
        }
    }
    Ok(())
}

/// N[u] ⊇ N[v].
pub fn subsumes(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let cu = g.closed_row(u);
    g.closed_row(v).is_subset(&cu)
}

/// A 6-vertex whose neighborhood complement has a matching of size three.
pub fn is_thin(g: &Graph, v: usize) -> bool {
    if g.degree(v) != 6 {
        return false;
    }
    let (local, _) = g.induced_subgraph(&g.neighborhood(v)).expect("in range");
    maximum_matching(&local.complement()).len() >= 3
}
