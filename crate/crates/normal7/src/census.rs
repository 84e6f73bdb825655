//! Corpus census: one record per graph6 line, computed in parallel and
//! written in input order.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Instant;

use normal7_core::coloring::{exact_chi_n, is_normal};
use normal7_core::cuts::find_bridges;
use normal7_core::pipeline::normal7_coloring;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::formats::parse_graph6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    /// 1-based line number in the input.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub bridges: usize,
    pub colors_used: Option<usize>,
    /// The pipeline output passed the independent check.
    pub verified: bool,
    pub exact_chi: Option<u8>,
    pub exact_timed_out: bool,
    pub solver_nodes: u64,
    pub elapsed_ms: u64,
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    /// Exact solver on graphs with at most this many vertices.
    pub exact_up_to: Option<usize>,
    pub max_k: u8,
    pub budget: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub graphs: u64,
    pub verified: u64,
    pub errors: u64,
    /// Pipeline colors used, by count.
    pub colors_used: BTreeMap<usize, u64>,
    /// Exact values, by count.
    pub exact_chi: BTreeMap<u8, u64>,
    pub exact_inconclusive: u64,
}

impl CensusSummary {
    pub fn add(&mut self, r: &CensusRecord) {
        self.graphs += 1;
        self.verified += r.verified as u64;
        self.errors += r.error.is_some() as u64;
        if let Some(k) = r.colors_used {
            *self.colors_used.entry(k).or_default() += 1;
        }
        if let Some(k) = r.exact_chi {
            *self.exact_chi.entry(k).or_default() += 1;
        }
        self.exact_inconclusive += r.exact_timed_out as u64;
    }
}

pub fn census_line(line: usize, text: &str, opts: &CensusOptions) -> CensusRecord {
    let start = Instant::now();
    let mut rec = CensusRecord {
        line,
        graph6: text.to_string(),
        n: 0,
        bridges: 0,
        colors_used: None,
        verified: false,
        exact_chi: None,
        exact_timed_out: false,
        solver_nodes: 0,
        elapsed_ms: 0,
        error: None,
    };
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(err) => {
            rec.error = Some(err.to_string());
            return rec;
        }
    };
    rec.n = g.vertex_count();
    rec.bridges = find_bridges(&g).len();
    match normal7_coloring(&g) {
        Ok(out) => {
            rec.colors_used = Some(out.coloring.colors_used());
            rec.verified = is_normal(&g, &out.coloring).is_ok_and(|r| r.normal)
                && out.coloring.exempt.is_empty()
                && out.coloring.colors_used() <= 7;
        }
        Err(err) => rec.error = Some(err.to_string()),
    }
    if opts.exact_up_to.is_some_and(|n| rec.n <= n) {
        match exact_chi_n(&g, opts.max_k, opts.budget) {
            Ok(r) => {
                rec.exact_chi = r.chi;
                rec.exact_timed_out = r.timed_out;
                rec.solver_nodes = r.nodes_explored;
            }
            Err(err) => rec.error = Some(err.to_string()),
        }
    }
    rec.elapsed_ms = start.elapsed().as_millis() as u64;
    rec
}

/// Records for every non-empty line of `text`, one JSON object per line on
/// `out`, in input order. `jobs = 0` uses one worker per core.
pub fn run_census(text: &str, opts: &CensusOptions, jobs: usize, out: &mut dyn Write) -> io::Result<CensusSummary> {
    const CHUNK: usize = 256;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(io::Error::other)?;
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()).collect();
    let mut summary = CensusSummary::default();
    for chunk in lines.chunks(CHUNK) {
        let records: Vec<CensusRecord> =
            pool.install(|| chunk.par_iter().map(|&(i, l)| census_line(i, l, opts)).collect());
        for r in &records {
            summary.add(r);
            serde_json::to_writer(&mut *out, r)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    const OPTS: CensusOptions = CensusOptions { exact_up_to: Some(10), max_k: 7, budget: u64::MAX };

    #[test]
    fn records_in_input_order() {
        let text = "C~\n\nE]ow\nnot-a-graph\n";
        let mut out = Vec::new();
        let s = run_census(text, &OPTS, 1, &mut out).unwrap();
        let recs: Vec<CensusRecord> =
            String::from_utf8(out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(recs.iter().map(|r| r.line).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(recs[0].exact_chi, Some(3));
        assert!(recs[0].verified);
        assert!(recs[2].error.is_some());
        assert_eq!((s.graphs, s.errors), (3, 1));
    }

    #[test]
    fn empty_input() {
        let mut out = Vec::new();
        let s = run_census("", &OPTS, 0, &mut out).unwrap();
        assert!(out.is_empty());
        assert_eq!(s, CensusSummary::default());
    }
}
