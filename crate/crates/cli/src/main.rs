use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use tuza_core::certificates::{find_reducible, Certificate};
use tuza_core::engine::{discharging_audit, solve, verify_trace, Rule, TuzaWitness};
use tuza_core::enumerate::graphs_on;
use tuza_core::io::{emit_graph6, from_json, parse_graph, parse_graphs, to_json, to_json_line, Format};
use tuza_core::oracles::check_tuza;
use tuza_core::par::Execution;
use tuza_core::scan::{parse_prune_list, scan, ScanOptions};
use tuza_core::sparsity::{mad, mad_bruteforce};
use tuza_core::wke::{anchored_wke, find_wke, find_wke_bruteforce, WkeMethod};
use tuza_core::{Error, Graph};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

/// Certified triangle packings and covers for sparse graphs.
///
/// GRAPH arguments are a file path, `-` for stdin, or a literal graph6
/// record such as `C~`.
#[derive(Parser)]
#[command(name = "tuza", version)]
struct Cli {
    /// Input format; detected from the first line when omitted.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a witness (T, Y) for every input graph. With --json, one
    /// document per line.
    Solve { input: String },
    /// Check a witness, including a replay of its reduction trace.
    Verify { graph: String, witness: String },
    /// Exact packing and covering numbers.
    Oracle { graph: String },
    /// Maximum average degree as an exact fraction.
    Mad {
        graph: String,
        #[arg(long)]
        brute_force: bool,
    },
    /// Weak König-Egerváry witness.
    Wke {
        graph: String,
        /// Require a witness with this vertex covered or unmatched.
        #[arg(long)]
        anchor: Option<usize>,
        /// Skip the structural rules.
        #[arg(long)]
        brute_force: bool,
    },
    /// One reducible set with its certificate.
    Reduce { graph: String },
    /// Discharging charges and the forbidden-configuration report.
    Audit {
        graph: String,
        #[arg(long, default_value = "subsumption")]
        rule: Rule,
    },
    /// Prune-and-verify over a stream of graph6 records.
    Scan {
        stream: String,
        /// Clause letters a-h, `robust`, or `all`, comma separated.
        #[arg(long, default_value = "")]
        prune: String,
        /// Require a verified reducible set for every pruned graph.
        #[arg(long)]
        verify_pruned: bool,
    },
    /// All graphs on N vertices up to isomorphism, as graph6.
    Generate {
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Also emit every smaller order.
        #[arg(long)]
        up_to: bool,
    },
}

fn read_text(arg: &str) -> anyhow::Result<String> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if Path::new(arg).exists() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

fn read_graph(arg: &str, format: Option<Format>) -> anyhow::Result<Graph> {
    Ok(parse_graph(&read_text(arg)?, format)?)
}

fn print_json<T: Serialize>(out: &mut impl Write, body: &T) -> anyhow::Result<()> {
    writeln!(out, "{}", to_json(body)?)?;
    Ok(())
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct SolveRecord<'a> {
    graph6: String,
    #[serde(flatten)]
    witness: &'a TuzaWitness,
}

#[derive(Serialize)]
struct ReduceRecord<'a> {
    graph6: String,
    #[serde(flatten)]
    certificate: &'a Certificate,
    residual_graph6: String,
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Solve { input } => {
            let graphs = parse_graphs(&read_text(&input)?, cli.format)?;
            let results = exec.map(&graphs, solve);
            for (g, w) in graphs.iter().zip(results) {
                let w = w?;
                if cli.json {
                    let record = SolveRecord { graph6: emit_graph6(g), witness: &w };
                    writeln!(out, "{}", to_json_line(&record)?)?;
                } else {
                    let status = if w.certified { "certified" } else { "UNCERTIFIED" };
                    writeln!(
                        out,
                        "{}\t|T|={}\t|Y|={}\t{status}\tsteps={}{}",
                        emit_graph6(g),
                        w.triangles.len(),
                        w.deleted.len(),
                        w.trace.len(),
                        w.fallback.as_ref().map_or(String::new(), |f| format!("\tfallback={:?}", f.kind)),
                    )?;
                }
            }
            Ok(0)
        }
        Command::Verify { graph, witness } => {
            let g = read_graph(&graph, cli.format)?;
            let w: TuzaWitness = from_json(&read_text(&witness)?)?;
            let verdict = verify_trace(&g, &w);
            if cli.json {
                let failure = verdict.as_ref().err().map(|f| f.to_string());
                print_json(&mut out, &json!({ "valid": verdict.is_ok(), "failure": failure, "certified": w.certified }))?;
            } else {
                match &verdict {
                    Ok(()) if w.certified => writeln!(out, "ok: certified, |T|={} |Y|={}", w.triangles.len(), w.deleted.len())?,
                    Ok(()) => writeln!(out, "ok: UNCERTIFIED, |T|={} |Y|={}", w.triangles.len(), w.deleted.len())?,
                    Err(f) => writeln!(out, "rejected: {f}")?,
                }
            }
            Ok(if verdict.is_ok() { 0 } else { EXIT_VERIFY })
        }
        Command::Oracle { graph } => {
            let g = read_graph(&graph, cli.format)?;
            let c = check_tuza(&g)?;
            if cli.json {
                print_json(&mut out, &c)?;
            } else {
                writeln!(out, "nu={} tau={} tuza={}", c.nu.value, c.tau.value, c.holds)?;
                writeln!(out, "packing: {}", list(&c.nu.witness))?;
                writeln!(out, "cover: {}", list(&c.tau.witness))?;
            }
            Ok(if c.holds { 0 } else { EXIT_VERIFY })
        }
        Command::Mad { graph, brute_force } => {
            let g = read_graph(&graph, cli.format)?;
            let d = if brute_force { mad_bruteforce(&g)? } else { mad(&g)? };
            if cli.json {
                print_json(&mut out, &json!({ "mad": d.to_string(), "witness": d.witness }))?;
            } else {
                writeln!(out, "{d}")?;
                writeln!(out, "witness: {}", list(&d.witness))?;
            }
            Ok(0)
        }
        Command::Wke { graph, anchor, brute_force } => {
            let g = read_graph(&graph, cli.format)?;
            let found = match anchor {
                Some(a) => anchored_wke(&g, a)?.map(|w| (w.witness, None)),
                None if brute_force => find_wke_bruteforce(&g)?.map(|w| (w, Some(WkeMethod::BruteForce))),
                None => find_wke(&g).map(|(w, m)| (w, Some(m))),
            };
            if cli.json {
                let body = match &found {
                    Some((w, m)) => json!({ "wke": true, "matching": w.matching, "cover": w.cover, "method": m, "anchor": anchor }),
                    None => json!({ "wke": false }),
                };
                print_json(&mut out, &body)?;
            } else {
                match &found {
                    Some((w, m)) => {
                        let method = m.map_or_else(|| "anchored".to_string(), |m| m.to_string());
                        writeln!(out, "method: {method}")?;
                        writeln!(out, "matching: {}", list(&w.matching))?;
                        writeln!(out, "cover: {}", list(&w.cover))?;
                    }
                    None => writeln!(out, "none")?,
                }
            }
            Ok(0)
        }
        Command::Reduce { graph } => {
            let g = read_graph(&graph, cli.format)?;
            match find_reducible(&g)? {
                Some(step) => print_json(&mut out, &ReduceRecord {
                    graph6: emit_graph6(&g),
                    certificate: &step.certificate,
                    residual_graph6: emit_graph6(&step.residual),
                })?,
                None => {
                    print_json(&mut out, &json!({ "graph6": emit_graph6(&g), "reducible": null }))?;
                    return Ok(EXIT_VERIFY);
                }
            }
            Ok(0)
        }
        Command::Audit { graph, rule } => {
            let g = read_graph(&graph, cli.format)?;
            print_json(&mut out, &discharging_audit(&g, rule))?;
            Ok(0)
        }
        Command::Scan { stream, prune, verify_pruned } => {
            let prune = parse_prune_list(&prune).map_err(anyhow::Error::msg)?;
            let options = ScanOptions { prune, verify_pruned, exec, ..ScanOptions::default() };
            let report = if stream == "-" {
                scan(io::stdin().lock(), &options)?
            } else {
                let file = fs::File::open(&stream).with_context(|| format!("opening {stream}"))?;
                scan(BufReader::new(file), &options)?
            };
            print_json(&mut out, &report)?;
            let clean = report.failures.is_empty() && report.unproven_prunes.is_empty();
            Ok(if clean { 0 } else { EXIT_VERIFY })
        }
        Command::Generate { n, connected, up_to } => {
            let orders = if up_to { 1..=n } else { n..=n };
            for k in orders {
                for g in graphs_on(k, exec)? {
                    if !connected || g.is_connected() {
                        writeln!(out, "{}", emit_graph6(&g))?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::OracleRefused { .. }) => EXIT_REFUSED,
        Some(Error::InvalidCertificate { .. }) => EXIT_VERIFY,
        _ => EXIT_PARSE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let _ = io::stdout().flush();
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
