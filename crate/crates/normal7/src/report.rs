//! JSON documents for colorings, exact runs and certificates.

use std::collections::BTreeMap;

use normal7_core::certify::Certificate;
use normal7_core::coloring::{is_normal, status_string, EdgeColoring, SolverResult};
use normal7_core::pipeline::TraceStep;
use normal7_core::PseudoGraph;
use serde::{Deserialize, Serialize};

use crate::formats::write_graph6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub tag: String,
    /// 64-bit instance fingerprint as 16 hex digits.
    pub fingerprint: String,
    pub permutation: [u8; 7],
}

impl From<&TraceStep> for TraceRecord {
    fn from(s: &TraceStep) -> Self {
        TraceRecord {
            tag: s.tag.name().to_string(),
            fingerprint: format!("{:016x}", s.fingerprint),
            permutation: s.permutation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub graph6: Option<String>,
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
    pub colors: Vec<u8>,
    pub colors_used: usize,
    /// One `P`/`R`/`-` per edge.
    pub statuses: String,
    pub verified: bool,
    pub trace: Vec<TraceRecord>,
}

impl ColoringReport {
    pub fn new(g: &PseudoGraph, c: &EdgeColoring, trace: &[TraceStep]) -> Self {
        let report = is_normal(g, c).ok();
        ColoringReport {
            graph6: write_graph6(g).ok(),
            n: g.vertex_count(),
            edges: g
                .edges()
                .map(|e| {
                    let (a, b) = g.ends(e);
                    [a.0, b.0]
                })
                .collect(),
            colors: c.colors.clone(),
            colors_used: c.colors_used(),
            statuses: report.as_ref().map(|r| status_string(&r.statuses)).unwrap_or_default(),
            verified: report.is_some_and(|r| r.normal),
            trace: trace.iter().map(TraceRecord::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactReport {
    pub chi_n: Option<u8>,
    pub max_k: u8,
    pub nodes_explored: u64,
    pub timed_out: bool,
    pub witness: Option<Vec<u8>>,
}

impl ExactReport {
    pub fn new(r: &SolverResult, max_k: u8) -> Self {
        ExactReport {
            chi_n: r.chi,
            max_k,
            nodes_explored: r.nodes_explored,
            timed_out: r.timed_out,
            witness: r.witness.as_ref().map(|w| w.colors.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub claim: String,
    pub universe: u64,
    pub verdict: String,
    pub counterexample: Option<Vec<u8>>,
    pub counts: BTreeMap<String, u64>,
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        CertificateReport {
            claim: c.claim.to_string(),
            universe: c.universe,
            verdict: c.verdict.name().to_string(),
            counterexample: c.counterexample.clone(),
            counts: c.counts.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}
