//! `vcrit`: command-line front end for the vcrit-core library.
//!
//! Exit codes: 0 when every graph passes, 1 when some graph fails the check,
//! 2 for usage errors and unreadable or malformed input.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use vcrit_core::claims::{verify_all, AnchorReport, Hypotheses, Verdict};
use vcrit_core::coloring::{chromatic_number, clique_number, is_k_vertex_critical};
use vcrit_core::decomposition::{decompose, C5Cycle, Decomposition};
use vcrit_core::enumerate::{generate_class, search_critical, GenerationSpec, DEFAULT_ORDER};
use vcrit_core::format::{emit_graph6, read_graphs, SourcedGraph};
use vcrit_core::pattern::{all_induced_c5, find_violation, Pattern};
use vcrit_core::{are_isomorphic, Graph};

#[derive(Parser)]
#[command(
    name = "vcrit",
    version,
    about = "Exact tools for small vertex-critical graphs"
)]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether each graph avoids the forbidden induced subgraphs.
    Check {
        input: String,
        #[arg(long, default_value = "p5,chair")]
        forbid: String,
    },
    /// Print order, clique number and chromatic number of each graph.
    Chi { input: String },
    /// Report whether each graph is k-vertex-critical.
    Critical {
        input: String,
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// Print the S-class table for one anchor cycle or for all of them.
    Decompose {
        input: String,
        /// Five comma-separated vertices forming an induced 5-cycle in order.
        #[arg(long)]
        cycle: Option<String>,
    },
    /// Evaluate every structural claim on every induced 5-cycle.
    Claims {
        input: String,
        #[arg(long)]
        bypass_hypotheses: bool,
        /// One JSON object per (graph, anchor, claim).
        #[arg(long)]
        json: bool,
    },
    /// Emit one graph6 line per isomorphism class in the requested class.
    Gen {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n: usize,
        #[arg(long, default_value = "none")]
        forbid: String,
        #[arg(long)]
        connected: bool,
        /// Only emit k-vertex-critical graphs.
        #[arg(long)]
        critical: Option<usize>,
        /// Permit n = 10 and 11.
        #[arg(long)]
        allow_large: bool,
    },
    /// Decide whether the first graphs of two inputs are isomorphic.
    Iso { first: String, second: String },
}

/// Input and usage problems, reported with exit code 2.
#[derive(Debug)]
struct UsageError(anyhow::Error);

fn usage<E: Into<anyhow::Error>>(e: E) -> anyhow::Error {
    let e: anyhow::Error = e.into();
    anyhow!(UsageError(e))
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    if lock
        .write_all(out.as_bytes())
        .and_then(|_| lock.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &str) -> Result<Vec<SourcedGraph>> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text).map_err(usage)?;
    } else {
        text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {path}"))
            .map_err(usage)?;
    }
    read_graphs(&text).map_err(|e| usage(anyhow!("{path}: {e}")))
}

fn patterns(list: &str) -> Result<Vec<Pattern>> {
    Pattern::parse_list(list).map_err(|e| usage(anyhow!(e)))
}

/// `graph 3 (line 7): ` when the input holds several graphs, nothing otherwise.
fn prefix(graphs: &[SourcedGraph], i: usize) -> String {
    if graphs.len() == 1 {
        String::new()
    } else {
        format!("graph {} (line {}): ", i + 1, graphs[i].line)
    }
}

fn list(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(command: Command, out: &mut String) -> Result<bool> {
    match command {
        Command::Check { input, forbid } => {
            let pats = patterns(&forbid)?;
            let graphs = load(&input)?;
            let lines: Vec<(bool, String)> = graphs
                .par_iter()
                .map(|sg| match find_violation(&sg.graph, &pats) {
                    None => (true, "free".to_string()),
                    Some(v) => (
                        false,
                        format!(
                            "contains {} at ({})",
                            v.pattern.name(),
                            list(&v.embedding.map)
                        ),
                    ),
                })
                .collect();
            for (i, (_, line)) in lines.iter().enumerate() {
                writeln!(out, "{}{line}", prefix(&graphs, i))?;
            }
            Ok(lines.iter().all(|(ok, _)| *ok))
        }
        Command::Chi { input } => {
            let graphs = load(&input)?;
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|sg| {
                    let g = &sg.graph;
                    format!(
                        "n={} omega={} chi={}",
                        g.order(),
                        clique_number(g),
                        chromatic_number(g)
                    )
                })
                .collect();
            for (i, line) in lines.iter().enumerate() {
                writeln!(out, "{}{line}", prefix(&graphs, i))?;
            }
            Ok(true)
        }
        Command::Critical { input, k } => {
            let graphs = load(&input)?;
            let reports: Vec<_> = graphs
                .par_iter()
                .map(|sg| is_k_vertex_critical(&sg.graph, k))
                .collect();
            for (i, r) in reports.iter().enumerate() {
                let verdict = if r.vertex_critical { "yes" } else { "no" };
                let per = match r.per_vertex.first() {
                    Some(&c) if r.per_vertex.iter().all(|&x| x == c) => {
                        format!("chi(G-v)={c} for all {} vertices", r.per_vertex.len())
                    }
                    Some(_) => format!("chi(G-v)=({})", list(&r.per_vertex)),
                    None => "no vertices".to_string(),
                };
                writeln!(
                    out,
                    "{}vertex-critical: {verdict}; chi={}; {per}",
                    prefix(&graphs, i),
                    r.chi
                )?;
            }
            Ok(reports.iter().all(|r| r.vertex_critical))
        }
        Command::Decompose { input, cycle } => {
            let graphs = load(&input)?;
            let fixed = cycle.as_deref().map(parse_cycle).transpose()?;
            for (i, sg) in graphs.iter().enumerate() {
                let g = &sg.graph;
                let anchors = match fixed {
                    Some(c) => vec![C5Cycle::new(g, c)
                        .with_context(|| format!("line {}", sg.line))
                        .map_err(usage)?],
                    None => all_induced_c5(g),
                };
                if anchors.is_empty() {
                    writeln!(out, "{}no induced C5", prefix(&graphs, i))?;
                }
                for c in anchors {
                    let d = decompose(g, c).expect("validated anchor");
                    write_table(out, &prefix(&graphs, i), &d)?;
                }
            }
            Ok(true)
        }
        Command::Claims {
            input,
            bypass_hypotheses,
            json,
        } => {
            let graphs = load(&input)?;
            let results: Vec<(Hypotheses, Vec<AnchorReport>)> = graphs
                .par_iter()
                .map(|sg| {
                    let h = if bypass_hypotheses {
                        Hypotheses::evaluate_all(&sg.graph)
                    } else {
                        Hypotheses::evaluate(&sg.graph)
                    };
                    (h, verify_all(&sg.graph, bypass_hypotheses))
                })
                .collect();
            let mut ok = true;
            for (i, (h, anchors)) in results.iter().enumerate() {
                ok &= anchors.iter().all(AnchorReport::passes);
                if json {
                    write_json(out, i, anchors)?;
                } else {
                    write_claims(out, &prefix(&graphs, i), h, anchors)?;
                }
            }
            Ok(ok)
        }
        Command::Gen {
            n,
            forbid,
            connected,
            critical,
            allow_large,
        } => {
            if n > DEFAULT_ORDER && !allow_large {
                bail!(UsageError(anyhow!(
                    "--n {n} exceeds {DEFAULT_ORDER}; pass --allow-large to run it anyway"
                )));
            }
            if n > DEFAULT_ORDER {
                eprintln!("warning: generation with n = {n} may take hours");
            }
            let spec = GenerationSpec {
                n_max: n,
                forbidden: patterns(&forbid)?,
                connected_only: connected,
                k: critical.unwrap_or(5),
            };
            spec.validate().map_err(usage)?;
            match critical {
                Some(_) => {
                    let found = search_critical(&spec).map_err(usage)?;
                    for g in found.graphs() {
                        writeln!(out, "{}", emit_graph6(g))?;
                    }
                }
                None => {
                    for g in generate_class(&spec).map_err(usage)? {
                        writeln!(out, "{}", emit_graph6(&g))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Iso { first, second } => {
            let a = first_graph(&first)?;
            let b = first_graph(&second)?;
            let iso = are_isomorphic(&a, &b);
            writeln!(out, "{}", if iso { "isomorphic" } else { "not isomorphic" })?;
            Ok(iso)
        }
    }
}

fn first_graph(path: &str) -> Result<Graph> {
    load(path)?
        .into_iter()
        .next()
        .map(|sg| sg.graph)
        .ok_or_else(|| usage(anyhow!("{path}: no graph found")))
}

fn parse_cycle(text: &str) -> Result<[usize; 5]> {
    let parts: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| usage(anyhow!("--cycle: {e}")))?;
    parts
        .try_into()
        .map_err(|v: Vec<usize>| usage(anyhow!("--cycle needs 5 vertices, got {}", v.len())))
}

fn write_table(out: &mut String, prefix: &str, d: &Decomposition) -> Result<()> {
    writeln!(out, "{prefix}cycle ({})", d.cycle())?;
    let classes = d.nonempty_classes();
    if classes.is_empty() {
        writeln!(out, "  (no vertices off the cycle)")?;
    }
    for (class, members) in classes {
        writeln!(out, "  {class}: {}", list(&members.to_vec()))?;
    }
    Ok(())
}

fn write_claims(
    out: &mut String,
    prefix: &str,
    h: &Hypotheses,
    anchors: &[AnchorReport],
) -> Result<()> {
    let flags: Vec<String> = h
        .flags()
        .iter()
        .map(|(name, v)| {
            let v = match v {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            };
            format!("{name}={v}")
        })
        .collect();
    writeln!(out, "{prefix}hypotheses: {}", flags.join(" "))?;
    if anchors.is_empty() {
        writeln!(out, "  no induced C5")?;
    }
    for a in anchors {
        writeln!(out, "  cycle ({})", a.cycle)?;
        for r in &a.reports {
            write!(out, "    {:<3} [{}] {}", r.claim.label(), r.tier, r.verdict)?;
            if r.verdict == Verdict::Fails {
                if let Some(i) = r.index {
                    write!(out, " at i={}", i + 1)?;
                }
                write!(out, "; witness ({})", list(&r.witness))?;
            }
            writeln!(out)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ClaimRecord<'a> {
    graph_index: usize,
    cycle: [usize; 5],
    claim: &'a str,
    tier: String,
    verdict: String,
    witness: &'a [usize],
}

fn write_json(out: &mut String, graph_index: usize, anchors: &[AnchorReport]) -> Result<()> {
    for a in anchors {
        for r in &a.reports {
            let rec = ClaimRecord {
                graph_index,
                cycle: a.cycle.vertices(),
                claim: r.claim.label(),
                tier: r.tier.to_string(),
                verdict: r.verdict.to_string(),
                witness: &r.witness,
            };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
    }
    Ok(())
}
