//! Prune-and-verify over a stream of graph6 records: graphs showing a
//! forbidden configuration are dropped (optionally after confirming that a
//! reducible set really exists), survivors are checked by the exact oracles.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::certificates::{find_reducible, verify_certificate};
use crate::engine::{redlem_configuration_scan, Clause};
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::oracles::check_tuza;
use crate::par::Execution;
use crate::{Error, Result};

/// A reason to drop a graph before running the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PruneKey {
    Clause(Clause),
    NotRobust,
}

impl std::fmt::Display for PruneKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PruneKey::Clause(c) => write!(f, "{c}"),
            PruneKey::NotRobust => write!(f, "robust"),
        }
    }
}

/// Parses a comma-separated list of clause letters, `robust`, or `all`
/// (every clause, not robustness).
pub fn parse_prune_list(s: &str) -> Result<Vec<PruneKey>, String> {
    let mut keys = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "all" => keys.extend(Clause::ALL.map(PruneKey::Clause)),
            "robust" => keys.push(PruneKey::NotRobust),
            _ => keys.push(PruneKey::Clause(Clause::from_str(part)?)),
        }
    }
    keys.sort_unstable();
    keys.dedup();
    Ok(keys)
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub prune: Vec<PruneKey>,
    pub verify_pruned: bool,
    pub exec: Execution,
    /// Records processed per parallel batch.
    pub batch: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { prune: Vec::new(), verify_pruned: false, exec: Execution::default(), batch: 1024 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    /// 1-based input line.
    pub line: usize,
    pub graph6: String,
    pub nu: usize,
    pub tau: usize,
    pub holds: bool,
    /// SHA-256 of the oracle packing and cover as JSON.
    pub witness_sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanIssue {
    pub line: usize,
    pub graph6: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub total: usize,
    pub pruned: usize,
    /// Per key; a graph matching several keys counts under each.
    pub pruned_by: BTreeMap<String, usize>,
    pub verified_prunes: usize,
    pub unproven_prunes: Vec<ScanIssue>,
    pub survivors: Vec<Survivor>,
    /// Survivors where the oracle pair breaks the bound.
    pub failures: Vec<ScanIssue>,
    /// Survivors too large for the oracles.
    pub refused: Vec<ScanIssue>,
}

enum Outcome {
    Pruned { keys: Vec<PruneKey>, unproven: Option<String> },
    Survived(std::result::Result<Survivor, String>),
}

fn classify(line: usize, graph6: &str, g: &Graph, options: &ScanOptions) -> Outcome {
    let report = redlem_configuration_scan(g);
    let keys: Vec<PruneKey> = options
        .prune
        .iter()
        .copied()
        .filter(|k| match k {
            PruneKey::Clause(c) => report.violates(*c),
            PruneKey::NotRobust => !report.robust,
        })
        .collect();
    if !keys.is_empty() {
        let unproven = if options.verify_pruned {
            match find_reducible(g) {
                Ok(Some(step)) => verify_certificate(g, &step.certificate).err().map(|f| f.to_string()),
                Ok(None) => Some("no reducible set found".to_string()),
                Err(e) => Some(e.to_string()),
            }
        } else {
            None
        };
        return Outcome::Pruned { keys, unproven };
    }
    Outcome::Survived(match check_tuza(g) {
        Ok(c) => {
            let json = serde_json::to_vec(&(&c.nu.witness, &c.tau.witness)).expect("serializable");
            let digest = Sha256::digest(json);
            Ok(Survivor {
                line,
                graph6: graph6.to_string(),
                nu: c.nu.value,
                tau: c.tau.value,
                holds: c.holds,
                witness_sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
            })
        }
        Err(e) => Err(e.to_string()),
    })
}

/// Reads graph6 records line by line; blank lines are skipped. Output is
/// independent of `options.exec` and `options.batch`.
pub fn scan<R: BufRead>(input: R, options: &ScanOptions) -> Result<ScanReport> {
    let mut report = ScanReport::default();
    for key in &options.prune {
        report.pruned_by.insert(key.to_string(), 0);
    }
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(options.batch);
    let mut lines = input.lines().enumerate();
    loop {
        batch.clear();
        for (i, line) in lines.by_ref() {
            let line = line?;
            let record = line.trim();
            if !record.is_empty() {
                batch.push((i + 1, record.to_string()));
                if batch.len() == options.batch.max(1) {
                    break;
                }
            }
        }
        if batch.is_empty() {
            return Ok(report);
        }
        let outcomes: Vec<Result<Outcome>> = options.exec.map(&batch, |(line, record)| {
            let g = parse_graph6(record.as_bytes())
                .map_err(|e| Error::AtLine { line: *line, error: Box::new(e) })?;
            Ok(classify(*line, record, &g, options))
        });
        for ((line, record), outcome) in batch.iter().zip(outcomes) {
            report.total += 1;
            let issue = |message: String| ScanIssue { line: *line, graph6: record.clone(), message };
            match outcome? {
                Outcome::Pruned { keys, unproven } => {
                    report.pruned += 1;
                    for k in keys {
                        *report.pruned_by.entry(k.to_string()).or_default() += 1;
                    }
                    match unproven {
                        Some(message) => report.unproven_prunes.push(issue(message)),
                        None if options.verify_pruned => report.verified_prunes += 1,
                        None => {}
                    }
                }
                Outcome::Survived(Ok(s)) => {
                    if !s.holds {
                        report.failures.push(issue(format!("tau = {} > 2 nu = {}", s.tau, 2 * s.nu)));
                    }
                    report.survivors.push(s);
                }
                Outcome::Survived(Err(message)) => report.refused.push(issue(message)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prune_lists() {
        let ab = parse_prune_list("a,b").unwrap();
        assert_eq!(ab, vec![PruneKey::Clause(Clause::A), PruneKey::Clause(Clause::B)]);
        assert_eq!(parse_prune_list("all,robust").unwrap().len(), 9);
        assert!(parse_prune_list("a,z").is_err());
        assert!(parse_prune_list("").unwrap().is_empty());
    }

    #[test]
    fn small_stream() {
        // K3, K4, C5, empty, K6
        let input = "Bw\nC~\n\nDhc\nD??\nE~~w\n";
        let options = ScanOptions {
            prune: parse_prune_list("a,b").unwrap(),
            verify_pruned: true,
            batch: 2,
            ..ScanOptions::default()
        };
        let r = scan(input.as_bytes(), &options).unwrap();
        assert_eq!(r.total, 5);
        assert_eq!(r.pruned + r.survivors.len() + r.refused.len(), r.total);
        // the edgeless graph has no adjacent pair
        assert_eq!(r.pruned_by["b"], 4);
        assert_eq!(r.survivors.len(), 1);
        assert_eq!((r.survivors[0].line, r.survivors[0].nu), (5, 0));
        assert_eq!(r.verified_prunes, 4);
        assert!(r.unproven_prunes.is_empty());

        let r = scan(input.as_bytes(), &ScanOptions::default()).unwrap();
        assert_eq!(r.survivors.len(), 5);
        assert_eq!(r.survivors[1].line, 2);
        assert_eq!((r.survivors[1].nu, r.survivors[1].tau), (1, 2));
        assert_eq!(r.survivors[2].line, 4);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn batch_size_and_mode_do_not_matter() {
        let input: String = crate::enumerate::graphs_up_to(5, Execution::Sequential)
            .unwrap()
            .iter()
            .map(|g| crate::io::emit_graph6(g) + "\n")
            .collect();
        let mut options = ScanOptions { prune: parse_prune_list("all").unwrap(), ..Default::default() };
        let base = scan(input.as_bytes(), &options).unwrap();
        options.exec = Execution::Sequential;
        options.batch = 7;
        assert_eq!(scan(input.as_bytes(), &options).unwrap(), base);
    }

    #[test]
    fn parse_errors_stop_the_scan() {
        match scan("Bw\nC\n".as_bytes(), &ScanOptions::default()) {
            Err(Error::AtLine { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
