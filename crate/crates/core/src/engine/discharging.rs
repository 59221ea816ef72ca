use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{is_robust, is_thin, subsumes, Graph, RobustnessViolation};

/// Exact charge, serialized as `"p/q"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(pub Ratio<i64>);

impl Charge {
    pub fn integer(k: i64) -> Self {
        Charge(Ratio::from_integer(k))
    }

    pub fn new(p: i64, q: i64) -> Self {
        Charge(Ratio::new(p, q))
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Charge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let bad = || serde::de::Error::custom(format!("expected p/q, got {text:?}"));
        let (p, q) = text.split_once('/').ok_or_else(bad)?;
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Charge::new(p, q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// 5-vertices take 2/3 from each subsuming vertex, thin 6-vertices 1/6
    /// from each neighbor, other 6-vertices 1/4 from each subsuming vertex.
    Subsumption,
    /// Every 6⁻-vertex takes 1/4 from every neighbor.
    LowDegree,
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "subsumption" => Ok(Rule::Subsumption),
            "low-degree" => Ok(Rule::LowDegree),
            _ => Err(format!("unknown rule {s:?} (expected subsumption or low-degree)")),
        }
    }
}

impl Rule {
    /// The bound every final charge meets when the audited graph is robust
    /// and satisfies the clauses the rule depends on.
    pub fn target(self) -> Charge {
        match self {
            Rule::Subsumption => Charge::integer(7),
            Rule::LowDegree => Charge::new(25, 4),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransferReason {
    #[serde(rename = "subsumes-5")]
    Subsumes5,
    #[serde(rename = "thin-6")]
    Thin6,
    #[serde(rename = "subsumes-nonthin-6")]
    SubsumesNonthin6,
    #[serde(rename = "neighbor-6-minus")]
    Neighbor6Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    pub amount: Charge,
    pub reason: TransferReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeReport {
    pub rule: Rule,
    pub initial: Vec<Charge>,
    #[serde(rename = "final")]
    pub final_charge: Vec<Charge>,
    pub transfers: Vec<Transfer>,
    pub total_initial: Charge,
    pub total_final: Charge,
    pub min_final: Option<Charge>,
    pub redlem: RedlemReport,
}

impl ChargeReport {
    pub fn conserved(&self) -> bool {
        self.total_initial == self.total_final
    }
}

pub fn discharging_audit(g: &Graph, rule: Rule) -> ChargeReport {
    let n = g.order();
    let initial: Vec<Charge> = (0..n).map(|v| Charge::integer(g.degree(v) as i64)).collect();
    let mut transfers = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        let mut take = |from: usize, amount: Charge, reason| {
            transfers.push(Transfer { from, to: v, amount, reason })
        };
        match rule {
            Rule::LowDegree if d <= 6 => {
                for u in g.neighbors(v) {
                    take(u, Charge::new(1, 4), TransferReason::Neighbor6Minus);
                }
            }
            Rule::Subsumption if d == 5 => {
                for u in g.neighbors(v).filter(|&u| subsumes(g, u, v)) {
                    take(u, Charge::new(2, 3), TransferReason::Subsumes5);
                }
            }
            Rule::Subsumption if d == 6 && is_thin(g, v) => {
                for u in g.neighbors(v) {
                    take(u, Charge::new(1, 6), TransferReason::Thin6);
                }
            }
            Rule::Subsumption if d == 6 => {
                for u in g.neighbors(v).filter(|&u| subsumes(g, u, v)) {
                    take(u, Charge::new(1, 4), TransferReason::SubsumesNonthin6);
                }
            }
            _ => {}
        }
    }
    let mut final_charge = initial.clone();
    for t in &transfers {
        final_charge[t.from].0 -= t.amount.0;
        final_charge[t.to].0 += t.amount.0;
    }
    let sum = |cs: &[Charge]| Charge(cs.iter().map(|c| c.0).sum());
    ChargeReport {
        rule,
        total_initial: sum(&initial),
        total_final: sum(&final_charge),
        min_final: final_charge.iter().copied().min(),
        initial,
        final_charge,
        transfers,
        redlem: redlem_configuration_scan(g),
    }
}

/// The forbidden configurations for a robust graph with no reducible set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Clause {
    /// A 6⁻-vertex whose neighborhood complement has a vertex of degree
    /// above 1, or exactly two edges.
    A,
    /// Two adjacent 6⁻-vertices.
    B,
    /// A 7-vertex subsuming a 6-vertex.
    C,
    /// A 7-vertex adjacent to a thin 6-vertex.
    D,
    /// An 8⁻-vertex subsuming a 5-vertex.
    E,
    /// A 9-vertex subsuming four 6⁻-vertices, or three while having another
    /// 6⁻-neighbor.
    F,
    /// A 10⁺-vertex subsuming a 6⁻-vertex with more than d − 6 6⁻-neighbors.
    G,
    /// A 7-, 8- or 9-vertex with more than d − 4 6⁻-neighbors.
    H,
}

impl Clause {
    pub const ALL: [Clause; 8] =
        [Clause::A, Clause::B, Clause::C, Clause::D, Clause::E, Clause::F, Clause::G, Clause::H];
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = b"abcdefgh"[*self as usize] as char;
        write!(f, "{c}")
    }
}

impl FromStr for Clause {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Clause::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| format!("unknown clause {s:?} (expected a..h)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseViolation {
    pub clause: Clause,
    /// The offending vertex first, then the vertices it is paired with.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RedlemReport {
    pub robust: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub robustness_violation: Option<RobustnessViolation>,
    pub violations: Vec<ClauseViolation>,
}

impl RedlemReport {
    pub fn violates(&self, clause: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }

    /// Robust with every clause holding.
    pub fn clean(&self) -> bool {
        self.robust && self.violations.is_empty()
    }
}

/// Evaluates every clause; the clauses presuppose robustness, which is
/// reported separately.
pub fn redlem_configuration_scan(g: &Graph) -> RedlemReport {
    let n = g.order();
    let low = |v: usize| g.degree(v) <= 6;
    let mut violations = Vec::new();
    let mut push = |clause, vertices| violations.push(ClauseViolation { clause, vertices });
    for v in (0..n).filter(|&v| low(v)) {
        let (local, _) = g.induced_subgraph(&g.neighborhood(v)).expect("in range");
        let comp = local.complement();
        if comp.max_degree() > 1 || comp.size() == 2 {
            push(Clause::A, vec![v]);
        }
    }
    for e in g.edges() {
        if low(e.u()) && low(e.v()) {
            push(Clause::B, vec![e.u(), e.v()]);
        }
    }
    for u in 0..n {
        let d = g.degree(u);
        let subsumed: Vec<usize> = g.neighbors(u).filter(|&v| low(v) && subsumes(g, u, v)).collect();
        let low_count = g.neighbors(u).filter(|&v| low(v)).count();
        if d == 7 {
            for &v in subsumed.iter().filter(|&&v| g.degree(v) == 6) {
                push(Clause::C, vec![u, v]);
            }
            for v in g.neighbors(u).filter(|&v| is_thin(g, v)) {
                push(Clause::D, vec![u, v]);
            }
        }
        if d <= 8 {
            for &v in subsumed.iter().filter(|&&v| g.degree(v) == 5) {
                push(Clause::E, vec![u, v]);
            }
        }
        if d == 9 && (subsumed.len() >= 4 || (subsumed.len() == 3 && low_count > 3)) {
            push(Clause::F, std::iter::once(u).chain(subsumed.iter().copied()).collect());
        }
        if d >= 10 && !subsumed.is_empty() && low_count > d - 6 {
            push(Clause::G, vec![u]);
        }
        if (7..=9).contains(&d) && low_count > d - 4 {
            push(Clause::H, vec![u]);
        }
    }
    violations.sort_by_key(|v| v.clause);
    let robustness_violation = is_robust(g).err();
    RedlemReport { robust: robustness_violation.is_none(), robustness_violation, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k6_subsumption_rule() {
        let r = discharging_audit(&complete(6), Rule::Subsumption);
        assert!(r.final_charge.iter().all(|&c| c == Charge::integer(5)));
        assert_eq!(r.transfers.len(), 30);
        assert_eq!(r.total_final, Charge::integer(30));
        assert!(r.conserved());
        assert!(r.redlem.violates(Clause::B));
    }

    #[test]
    fn low_degree_rule() {
        let g = wheel(7);
        let r = discharging_audit(&g, Rule::LowDegree);
        assert!(r.conserved());
        // the hub gives 1/4 to each of its seven 3-neighbors
        assert_eq!(r.final_charge[7], Charge::new(28 - 7, 4));
    }

    #[test]
    fn charge_strings() {
        let c = Charge::new(10, 4);
        assert_eq!(serde_json::to_string(&c).unwrap(), "\"5/2\"");
        assert_eq!(serde_json::from_str::<Charge>("\"7/1\"").unwrap(), Charge::integer(7));
        assert!(serde_json::from_str::<Charge>("\"7\"").is_err());
        assert!(serde_json::from_str::<Charge>("\"1/0\"").is_err());
    }

    #[test]
    fn clauses() {
        let r = redlem_configuration_scan(&cycle(6));
        assert!(!r.robust);
        assert!(r.robustness_violation.is_some());
        let r = redlem_configuration_scan(&complete(9));
        assert!(r.clean());
        assert_eq!("f".parse::<Clause>(), Ok(Clause::F));
        assert_eq!(Clause::H.to_string(), "h");
        assert!("i".parse::<Clause>().is_err());
        // a 5-vertex whose neighborhood misses two disjoint edges
        let mut k = complete(6);
        k = k.without_edges(&[crate::Edge::new(1, 2), crate::Edge::new(3, 4)]);
        assert!(redlem_configuration_scan(&k).violations.iter().any(|v| v.clause == Clause::A && v.vertices == vec![0]));
    }
}
