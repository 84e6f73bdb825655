//! The `normal7` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 search budget exhausted without
//! an answer, 4 internal verification failure.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use normal7_core::certify::{self, named, Certificate, Verdict};
use normal7_core::coloring::{exact_chi_n, UNLIMITED};
use normal7_core::pipeline::normal7_coloring;
use normal7_core::{Error, PseudoGraph};

use crate::census::{run_census, CensusOptions};
use crate::formats::{parse_graphs, write_dot, write_graph6};
use crate::report::{CertificateReport, ColoringReport, ExactReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "normal7", version, about = "Normal edge-colorings of cubic graphs with at most seven colors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    G6,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Color a simple cubic graph with at most seven colors and verify it.
    Color {
        /// graph6 record or edge-list file; standard input when absent or `-`.
        input: Option<PathBuf>,
        /// Emit DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact normal chromatic index by exhaustive search.
    Exact {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 7)]
        max_k: u8,
        /// Search node limit; unlimited when absent.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// One JSON record per graph6 line; a summary goes to standard error.
    Census {
        input: Option<PathBuf>,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Run the exact solver on graphs with at most this many vertices.
        #[arg(long)]
        exact_up_to: Option<usize>,
        #[arg(long, default_value_t = 7)]
        max_k: u8,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exhaustive certificates for the gadget and the small-graph claims.
    Certify {
        /// One of: gadget-k, k33-three-rich, k4-three-rich, fig6-normal6, fig6-flow-poor.
        claim: Option<String>,
        #[arg(long)]
        all: bool,
        /// Host graph for gadget-k (default: two gadgets joined by a bridge).
        #[arg(long)]
        host: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

pub const CLAIMS: [&str; 5] = ["gadget-k", "k33-three-rich", "k4-three-rich", "fig6-normal6", "fig6-flow-poor"];

/// Claims whose verdict is reported but not asserted.
const EXPLORATORY: [&str; 1] = ["k4-three-rich"];

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Verification { .. } => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure { code, message: err.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::input(err.to_string())
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn one_graph(text: &str) -> Result<PseudoGraph, Failure> {
    let mut graphs = parse_graphs(text).map_err(|e| Failure::input(e.to_string()))?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => Err(Failure::input("no graph in input")),
        k => Err(Failure::input(format!("expected one graph, found {k}"))),
    }
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn color(input: &Option<PathBuf>, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = one_graph(&read_input(input)?)?;
    let result = normal7_coloring(&g)?;
    match format {
        Format::Json => json_line(out, &ColoringReport::new(&g, &result.coloring, &result.trace))?,
        Format::Dot => out.write_all(write_dot(&g, Some(&result.coloring)).as_bytes())?,
        Format::G6 => {
            let g6 = write_graph6(&g).map_err(|e| Failure::input(e.to_string()))?;
            let colors: Vec<String> = result.coloring.colors.iter().map(u8::to_string).collect();
            writeln!(out, "{g6} {}", colors.join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn exact(input: &Option<PathBuf>, max_k: u8, budget: Option<u64>, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = one_graph(&read_input(input)?)?;
    let r = exact_chi_n(&g, max_k, budget.unwrap_or(UNLIMITED))?;
    json_line(out, &ExactReport::new(&r, max_k))?;
    Ok(if r.timed_out { EXIT_INCONCLUSIVE } else { EXIT_OK })
}

fn census(
    input: &Option<PathBuf>,
    jobs: usize,
    opts: CensusOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let text = read_input(input)?;
    let summary = run_census(&text, &opts, jobs, out)?;
    serde_json::to_writer(&mut *err, &summary).map_err(io::Error::from)?;
    writeln!(err)?;
    Ok(if summary.verified + summary.errors < summary.graphs { EXIT_INTERNAL } else { EXIT_OK })
}

pub fn run_claim(claim: &str, host: Option<&PseudoGraph>, budget: u64) -> Result<Certificate, Error> {
    match claim {
        "gadget-k" => certify::certify_gadget_k(host.unwrap_or(&named::double_k()), budget),
        "k33-three-rich" => Ok(certify::certify_k33_three_rich()),
        "k4-three-rich" => Ok(certify::certify_three_rich_at_vertex(&named::k4(), "k4-three-rich")),
        "fig6-normal6" => certify::certify_fig6_normal6(budget),
        "fig6-flow-poor" => Ok(certify::certify_fig6_flow_poor()),
        _ => Err(Error::Precondition("unknown claim")),
    }
}

fn certify_cmd(
    claim: &Option<String>,
    all: bool,
    host: &Option<PathBuf>,
    budget: Option<u64>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let claims: Vec<&str> = match (claim, all) {
        (_, true) => CLAIMS.to_vec(),
        (Some(c), false) if CLAIMS.contains(&c.as_str()) => vec![c.as_str()],
        (Some(c), false) => return Err(Failure::input(format!("unknown claim {c}; known: {}", CLAIMS.join(", ")))),
        (None, false) => return Err(Failure::input("name a claim or pass --all")),
    };
    let host = match host {
        Some(_) => Some(one_graph(&read_input(host)?)?),
        None => None,
    };
    let mut reports = Vec::new();
    let mut code = EXIT_OK;
    for c in claims {
        let cert = run_claim(c, host.as_ref(), budget.unwrap_or(UNLIMITED))?;
        if !EXPLORATORY.contains(&c) {
            code = code.max(match cert.verdict {
                Verdict::Holds => EXIT_OK,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
                Verdict::Fails => EXIT_INTERNAL,
            });
        }
        reports.push(CertificateReport::from(&cert));
    }
    json_line(out, &reports)?;
    Ok(code)
}

/// Runs a parsed command line; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Color { input, dot, format } => color(input, if *dot { Format::Dot } else { *format }, out),
        Command::Exact { input, max_k, budget } => exact(input, *max_k, *budget, out),
        Command::Census { input, jobs, exact_up_to, max_k, budget } => {
            let opts = CensusOptions { exact_up_to: *exact_up_to, max_k: *max_k, budget: budget.unwrap_or(UNLIMITED) };
            census(input, *jobs, opts, out, err)
        }
        Command::Certify { claim, all, host, budget } => certify_cmd(claim, *all, host, *budget, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "normal7: {}", f.message);
            f.code
        }
    }
}
