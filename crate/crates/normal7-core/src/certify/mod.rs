//! Exhaustive certifiers and the built-in graph registry.
//!
//! A certificate reports `Holds` only after the whole universe has been
//! enumerated without a counterexample. A search cut short by its budget
//! reports `Inconclusive`.

pub mod named;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{enumerate_normal_colorings, flow_status, status_of_union, EdgeStatus};
use crate::error::{Error, Result};
use crate::flow::{Gf2, GroupFlow};
use crate::graph::{EdgeId, PseudoGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub claim: &'static str,
    /// Objects enumerated: flows, or colorings plus search nodes.
    pub universe: u64,
    pub verdict: Verdict,
    /// Edge colors or flow values (as bit patterns) of the first violation.
    pub counterexample: Option<Vec<u8>>,
    /// Named tallies gathered during the enumeration.
    pub counts: Vec<(&'static str, u64)>,
}

impl Certificate {
    fn new(claim: &'static str, universe: u64, exhausted: bool, counterexample: Option<Vec<u8>>) -> Self {
        let verdict = match (&counterexample, exhausted) {
            (Some(_), _) => Verdict::Fails,
            (None, true) => Verdict::Holds,
            (None, false) => Verdict::Inconclusive,
        };
        Certificate { claim, universe, verdict, counterexample, counts: Vec::new() }
    }

    pub fn count(&self, key: &str) -> Option<u64> {
        self.counts.iter().find(|c| c.0 == key).map(|c| c.1)
    }
}

/// Fundamental cycles of a breadth-first spanning forest, in ascending
/// order of their closing edge. They form a basis of the cycle space.
pub fn cycle_space_basis(g: &PseudoGraph) -> Vec<Vec<EdgeId>> {
    let mut in_tree = vec![false; g.edge_count()];
    let mut parent: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut depth = vec![usize::MAX; g.vertex_count()];
    for root in g.vertices() {
        if depth[root.index()] != usize::MAX {
            continue;
        }
        depth[root.index()] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident(v) {
                let w = g.other_end(e, v);
                if depth[w.index()] == usize::MAX {
                    depth[w.index()] = depth[v.index()] + 1;
                    parent[w.index()] = Some(e);
                    in_tree[e.index()] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let up = |v: VertexId| -> (EdgeId, VertexId) {
        let e = parent[v.index()].expect("non-root vertex");
        (e, g.other_end(e, v))
    };
    g.edges()
        .filter(|e| !in_tree[e.index()])
        .map(|e| {
            let (mut a, mut b) = g.ends(e);
            let mut cycle = vec![e];
            while a != b {
                if depth[a.index()] >= depth[b.index()] {
                    let (t, p) = up(a);
                    cycle.push(t);
                    a = p;
                } else {
                    let (t, p) = up(b);
                    cycle.push(t);
                    b = p;
                }
            }
            cycle
        })
        .collect()
}

/// Visits every GF(2)^3 flow of `g` (zero values included), coefficients
/// of the basis cycles running in lexicographic order. Returns the number
/// visited; `visit` returning `false` stops early.
pub fn for_each_z23_flow(g: &PseudoGraph, mut visit: impl FnMut(&GroupFlow) -> bool) -> u64 {
    let basis = cycle_space_basis(g);
    let mut digits = vec![0u8; basis.len()];
    let mut flow = GroupFlow::zero(g, 3);
    let mut visited = 0u64;
    loop {
        visited += 1;
        if !visit(&flow) {
            return visited;
        }
        // odometer step, last digit fastest
        let mut i = basis.len();
        loop {
            if i == 0 {
                return visited;
            }
            i -= 1;
            let old = digits[i];
            let new = (old + 1) % 8;
            digits[i] = new;
            flow.add_on(&basis[i], Gf2(old ^ new));
            if new != 0 {
                break;
            }
        }
    }
}

fn flow_bits(f: &GroupFlow) -> Vec<u8> {
    f.values.iter().map(|v| v.0).collect()
}

/// Whether no nowhere-zero GF(2)^3 flow of `g` makes all three edges at
/// some vertex rich.
pub fn certify_three_rich_at_vertex(g: &PseudoGraph, claim: &'static str) -> Certificate {
    let mut nowhere_zero = 0u64;
    let mut two_rich = 0u64;
    let mut counterexample = None;
    let universe = for_each_z23_flow(g, |f| {
        if !f.is_nowhere_zero() {
            return true;
        }
        nowhere_zero += 1;
        let mut most = 0;
        for v in g.vertices() {
            let rich = g.incident(v).iter().filter(|&&e| flow_status(g, f, e) == EdgeStatus::Rich).count();
            most = most.max(rich);
        }
        if most >= 2 {
            two_rich += 1;
        }
        if most == 3 && counterexample.is_none() {
            counterexample = Some(flow_bits(f));
        }
        true
    });
    let mut cert = Certificate::new(claim, universe, true, counterexample);
    cert.counts = vec![("nowhere_zero", nowhere_zero), ("two_rich_at_a_vertex", two_rich)];
    cert
}

pub fn certify_k33_three_rich() -> Certificate {
    certify_three_rich_at_vertex(&named::k33(), "k33-three-rich")
}

/// The vertical edge `v2v7` of the ladder example is poor in every
/// nowhere-zero GF(2)^3 flow, and every flow agrees on the 2-cut
/// `{v1v2, v6v7}`.
pub fn certify_fig6_flow_poor() -> Certificate {
    let g = named::fig6();
    let vertical = named::edge(&g, 2, 7);
    let (c1, c2) = (named::edge(&g, 1, 2), named::edge(&g, 6, 7));
    let mut nowhere_zero = 0u64;
    let mut cut_agrees = 0u64;
    let mut counterexample = None;
    let universe = for_each_z23_flow(&g, |f| {
        if f.value(c1) == f.value(c2) {
            cut_agrees += 1;
        } else if counterexample.is_none() {
            counterexample = Some(flow_bits(f));
        }
        if f.is_nowhere_zero() {
            nowhere_zero += 1;
            if flow_status(&g, f, vertical) != EdgeStatus::Poor && counterexample.is_none() {
                counterexample = Some(flow_bits(f));
            }
        }
        true
    });
    let mut cert = Certificate::new("fig6-flow-poor", universe, true, counterexample);
    cert.counts = vec![("nowhere_zero", nowhere_zero), ("two_cut_agrees", cut_agrees)];
    cert
}

fn status_in(g: &PseudoGraph, colors: &[u8], e: EdgeId) -> EdgeStatus {
    let (u, v) = g.ends(e);
    let mask = g.incident(u).iter().chain(g.incident(v)).fold(0u32, |m, &h| m | 1 << colors[h.index()]);
    status_of_union(mask)
}

/// The vertical edge `v2v7` of the ladder example is poor in every normal
/// 6-coloring. The number of 6-colorings is reported, since the claim is
/// empty without them, together with whether some normal 7-coloring makes
/// the edge rich.
pub fn certify_fig6_normal6(budget: u64) -> Result<Certificate> {
    let g = named::fig6();
    let vertical = named::edge(&g, 2, 7);
    let mut counterexample = None;
    let six = enumerate_normal_colorings(&g, 6, budget, |colors| {
        if status_in(&g, colors, vertical) != EdgeStatus::Poor {
            counterexample = Some(colors.to_vec());
            return false;
        }
        true
    })?;
    let three = enumerate_normal_colorings(&g, 3, budget, |_| false)?;
    let mut rich7 = false;
    let seven = enumerate_normal_colorings(&g, 7, budget, |colors| {
        rich7 = status_in(&g, colors, vertical) == EdgeStatus::Rich;
        !rich7
    })?;
    let mut cert = Certificate::new("fig6-normal6", six.count + six.nodes_explored, six.exhausted, counterexample);
    cert.counts = vec![
        ("normal_6_colorings", six.count),
        ("search_nodes", six.nodes_explored),
        ("three_edge_colorable", three.count.min(1)),
        ("rich_vertical_with_7_colors", rich7 as u64),
        ("seven_color_search_exhausted", (rich7 || seven.exhausted) as u64),
    ];
    Ok(cert)
}

/// A copy of the gadget `K` inside a cubic graph: `v[0]` carries the only
/// edge leaving the copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCopy {
    pub v: [VertexId; 5],
    pub edges: [EdgeId; 7],
    pub bridge: EdgeId,
    /// `v4v5`, the edge whose color the bridge repeats.
    pub opposite: EdgeId,
}

fn single_edge(g: &PseudoGraph, a: VertexId, b: VertexId) -> Option<EdgeId> {
    match g.edges_between(a, b).as_slice() {
        [e] => Some(*e),
        _ => None,
    }
}

/// Every copy of `K` in a loopless cubic graph.
pub fn locate_gadgets(g: &PseudoGraph) -> Vec<GadgetCopy> {
    let mut found = Vec::new();
    for v1 in g.vertices() {
        for &b in g.incident(v1) {
            let ns: Vec<VertexId> = g.incident(v1).iter().filter(|&&e| e != b).map(|&e| g.other_end(e, v1)).collect();
            let (v2, v3) = (ns[0], ns[1]);
            if v2 == v3 || v2 == v1 || v3 == v1 || g.adjacent(v2, v3) {
                continue;
            }
            let rest = |x: VertexId| -> Vec<VertexId> {
                let mut r: Vec<VertexId> = g.incident(x).iter().map(|&e| g.other_end(e, x)).filter(|&y| y != v1).collect();
                r.sort();
                r
            };
            let (r2, r3) = (rest(v2), rest(v3));
            if r2 != r3 || r2.len() != 2 || r2[0] == r2[1] {
                continue;
            }
            let (v4, v5) = (r2[0], r2[1]);
            let v = [v1, v2, v3, v4, v5];
            let pairs = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (1, 4), (3, 4)];
            let edges: Option<Vec<EdgeId>> = pairs.iter().map(|&(i, j)| single_edge(g, v[i], v[j])).collect();
            let Some(edges) = edges else { continue };
            if g.other_end(b, v1) == v4 || g.other_end(b, v1) == v5 {
                continue;
            }
            found.push(GadgetCopy { v, edges: edges.clone().try_into().expect("seven"), bridge: b, opposite: edges[6] });
        }
    }
    found
}

/// Checks, over every normal 7-coloring of `host`, that each copy of `K`
/// has all seven edges rich and pairwise distinctly colored and that its
/// `v4v5` edge repeats the bridge color, and that no normal 6-coloring
/// exists.
pub fn certify_gadget_k(host: &PseudoGraph, budget: u64) -> Result<Certificate> {
    if let Some(v) = host.vertices().find(|&v| host.deg(v) != 3) {
        return Err(Error::Degree { vertex: v, degree: host.deg(v), expected: "3" });
    }
    if host.has_loop() {
        return Err(Error::Precondition("loopless host required"));
    }
    let copies = locate_gadgets(host);
    if copies.is_empty() {
        return Err(Error::Precondition("host contains no copy of the gadget K"));
    }
    let mut counterexample = None;
    let (mut rich, mut distinct, mut repeat) = (0u64, 0u64, 0u64);
    let seven = enumerate_normal_colorings(host, 7, budget, |colors| {
        let mut ok = true;
        for k in &copies {
            let all_rich = k.edges.iter().all(|&e| status_in(host, colors, e) == EdgeStatus::Rich);
            let mask = k.edges.iter().fold(0u32, |m, &e| m | 1 << colors[e.index()]);
            let all_distinct = mask.count_ones() == 7;
            let repeats = colors[k.opposite.index()] == colors[k.bridge.index()];
            rich += all_rich as u64;
            distinct += all_distinct as u64;
            repeat += repeats as u64;
            ok &= all_rich && all_distinct && repeats;
        }
        if !ok {
            counterexample = Some(colors.to_vec());
        }
        ok
    })?;
    let six = enumerate_normal_colorings(host, 6, budget, |colors| {
        counterexample.get_or_insert_with(|| colors.to_vec());
        false
    })?;
    let exhausted = seven.exhausted && six.exhausted;
    let universe = seven.count + six.count + seven.nodes_explored + six.nodes_explored;
    let mut cert = Certificate::new("gadget-k", universe, exhausted, counterexample);
    cert.counts = vec![
        ("gadget_copies", copies.len() as u64),
        ("normal_7_colorings", seven.count),
        ("all_rich", rich),
        ("pairwise_distinct", distinct),
        ("bridge_repeats_v4v5", repeat),
        ("normal_6_colorings", six.count),
    ];
    Ok(cert)
}
