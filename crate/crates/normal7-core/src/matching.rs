//! Perfect matchings through a given edge, the complementary 2-factor, and
//! lifting a GF(2)^2 flow of `G / 2-factor` back to a GF(2)^3 flow of `G`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flow::{Gf2, GroupFlow};
use crate::graph::{EdgeId, PseudoGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectMatching {
    /// Ascending.
    pub edges: Vec<EdgeId>,
}

impl PerfectMatching {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// A perfect matching containing `e`, by branch and bound on the vertex
/// with the fewest remaining options.
pub fn perfect_matching_through(g: &PseudoGraph, e: EdgeId) -> Result<PerfectMatching> {
    g.check_edge(e)?;
    if g.has_loop() || g.vertex_count() % 2 == 1 || g.is_loop(e) {
        return Err(Error::NoPerfectMatching(e));
    }
    let mut covered = vec![false; g.vertex_count()];
    let (a, b) = g.ends(e);
    covered[a.index()] = true;
    covered[b.index()] = true;
    let mut chosen = vec![e];
    if extend_matching(g, &mut covered, &mut chosen) {
        chosen.sort();
        Ok(PerfectMatching { edges: chosen })
    } else {
        Err(Error::NoPerfectMatching(e))
    }
}

fn extend_matching(g: &PseudoGraph, covered: &mut [bool], chosen: &mut Vec<EdgeId>) -> bool {
    let mut best: Option<(usize, VertexId)> = None;
    for v in g.vertices() {
        if covered[v.index()] {
            continue;
        }
        let options = g.incident(v).iter().filter(|&&f| !covered[g.other_end(f, v).index()]).count();
        if options == 0 {
            return false;
        }
        if best.is_none_or(|(o, _)| options < o) {
            best = Some((options, v));
        }
    }
    let Some((_, v)) = best else {
        return true;
    };
    let mut tried: Vec<VertexId> = Vec::new();
    for &f in g.incident(v) {
        let w = g.other_end(f, v);
        if covered[w.index()] || tried.contains(&w) {
            continue;
        }
        tried.push(w);
        covered[v.index()] = true;
        covered[w.index()] = true;
        chosen.push(f);
        if extend_matching(g, covered, chosen) {
            return true;
        }
        chosen.pop();
        covered[v.index()] = false;
        covered[w.index()] = false;
    }
    false
}

pub fn is_perfect_matching(g: &PseudoGraph, m: &[EdgeId]) -> bool {
    let mut hits = vec![0u8; g.vertex_count()];
    for &e in m {
        if !g.has_edge(e) || g.is_loop(e) {
            return false;
        }
        let (a, b) = g.ends(e);
        hits[a.index()] += 1;
        hits[b.index()] += 1;
    }
    hits.iter().all(|&h| h == 1)
}

/// A cycle of the 2-factor: `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Cycles of `E \ M`. Each starts at its lowest edge, leaving from the
/// higher end towards the lower one.
pub fn complementary_two_factor(g: &PseudoGraph, m: &PerfectMatching) -> Result<Vec<FactorCycle>> {
    if !g.is_cubic() || g.has_loop() || !is_perfect_matching(g, &m.edges) {
        return Err(Error::Precondition("perfect matching of a loopless cubic graph"));
    }
    let mut used = vec![false; g.edge_count()];
    for &e in &m.edges {
        used[e.index()] = true;
    }
    let mut cycles = Vec::new();
    for start in g.edges() {
        if used[start.index()] {
            continue;
        }
        let (a, b) = g.ends(start);
        let (from, mut at) = if a < b { (b, a) } else { (a, b) };
        let mut vertices = vec![from];
        let mut edges = vec![start];
        used[start.index()] = true;
        while at != from {
            vertices.push(at);
            let next = g
                .incident(at)
                .iter()
                .copied()
                .find(|&f| !used[f.index()])
                .expect("2-factor vertex has a second factor edge");
            used[next.index()] = true;
            edges.push(next);
            at = g.other_end(next, at);
        }
        cycles.push(FactorCycle { vertices, edges });
    }
    Ok(cycles)
}

/// `H = G / (2-factor)` together with what is needed to lift flows of `H`.
#[derive(Clone, Debug)]
pub struct TwoFactorLift {
    pub h: PseudoGraph,
    pub matching: PerfectMatching,
    pub cycles: Vec<FactorCycle>,
    /// For every edge of `G`: its image in `H` (matching edges only).
    pub image: Vec<Option<EdgeId>>,
    /// The matching edge at every vertex of `G`.
    matching_at: Vec<EdgeId>,
    edge_count: usize,
}

pub fn contract_two_factor(g: &PseudoGraph, m: &PerfectMatching) -> Result<TwoFactorLift> {
    let cycles = complementary_two_factor(g, m)?;
    let factor: Vec<EdgeId> = g.edges().filter(|&e| !m.contains(e)).collect();
    let (h, image) = g.contract_edge_set(&factor)?;
    let mut matching_at = vec![EdgeId(0); g.vertex_count()];
    for &e in &m.edges {
        let (a, b) = g.ends(e);
        matching_at[a.index()] = e;
        matching_at[b.index()] = e;
    }
    Ok(TwoFactorLift { h, matching: m.clone(), cycles, image, matching_at, edge_count: g.edge_count() })
}

impl TwoFactorLift {
    /// Image in `H` of the matching edge `e`.
    pub fn image_of(&self, e: EdgeId) -> Option<EdgeId> {
        self.image.get(e.index()).copied().flatten()
    }
}

/// Lifts a nowhere-zero GF(2)^2 flow `theta` of `H` to `G`: matching edges
/// keep `theta` (top coordinate 0); each cycle starts from its seed and is
/// completed by conservation, so every cycle edge has top coordinate 1.
pub fn lift_flow(lift: &TwoFactorLift, theta: &GroupFlow, seeds: &[Gf2]) -> Result<GroupFlow> {
    if seeds.len() != lift.cycles.len() {
        return Err(Error::Precondition("one seed per 2-factor cycle"));
    }
    if seeds.iter().any(|s| !s.leading()) {
        return Err(Error::SeedLeadingZero);
    }
    if theta.values.len() != lift.h.edge_count() || theta.values.iter().any(|v| v.is_zero() || v.0 > 3) {
        return Err(Error::Precondition("nowhere-zero GF(2)^2 flow of H"));
    }
    let mut mu = GroupFlow { k: 3, values: vec![Gf2(0); lift.edge_count] };
    for &e in &lift.matching.edges {
        let he = lift.image_of(e).expect("matching edges survive contraction");
        mu.set(e, theta.value(he));
    }
    for (cycle, &seed) in lift.cycles.iter().zip(seeds) {
        let len = cycle.edges.len();
        let mut cur = seed;
        mu.set(cycle.edges[0], cur);
        for i in 1..len {
            cur += mu.value(lift.matching_at[cycle.vertices[i].index()]);
            mu.set(cycle.edges[i], cur);
        }
        let closing = cur + mu.value(lift.matching_at[cycle.vertices[0].index()]);
        if closing != seed {
            return Err(Error::Verification {
                stage: "lift-flow",
                detail: alloc::format!("cycle through {} does not close", cycle.vertices[0]),
            });
        }
    }
    Ok(mu)
}
