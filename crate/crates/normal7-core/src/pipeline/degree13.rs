//! Graphs with degrees 1 and 3 whose bridges are all pendant, by induction
//! on the number `t` of pendant edges of each component.
//!
//! - `t = 0`: a flow coloring.
//! - `t = 1`: the pendant block construction.
//! - `t = 2`: leaves removed and their two vertices joined; the pendant
//!   edges take the color of the new edge.
//! - `t >= 3`: a triangle with three pendant edges gets three colors;
//!   otherwise two nonadjacent pendant-bearing vertices are merged the same
//!   way and the rest is colored recursively.

use alloc::vec;
use alloc::vec::Vec;

use super::pendant::color_pendant_traced;
use super::{check_shrinks, trace_tags, CaseTag, PendantBlockInput, TraceStep};
use crate::coloring::{check_normal, coloring_from_flow, EdgeColoring};
use crate::cuts::find_bridges;
use crate::error::{Error, Result};
use crate::flow::nz_z23_flow;
use crate::graph::{induced_subgraph, EdgeId, Mapped, PseudoGraph, VertexId};

#[derive(Clone, Debug)]
pub struct Degree13Coloring {
    pub coloring: EdgeColoring,
    pub trace: Vec<TraceStep>,
}

fn validate(g: &PseudoGraph) -> Result<()> {
    if let Some(v) = g.vertices().find(|&v| g.deg(v) != 1 && g.deg(v) != 3) {
        return Err(Error::Degree { vertex: v, degree: g.deg(v), expected: "1 or 3" });
    }
    if !g.is_simple() {
        return Err(Error::Precondition("simple graph required"));
    }
    for b in find_bridges(g) {
        let (x, y) = g.ends(b);
        match (g.deg(x), g.deg(y)) {
            (1, 1) => return Err(Error::Precondition("an edge between two leaves is neither poor nor rich")),
            (1, _) | (_, 1) => {}
            _ => return Err(Error::Bridge(b)),
        }
    }
    Ok(())
}

/// A normal 7-coloring of a simple graph with all degrees 1 or 3 and every
/// bridge incident to a leaf.
pub fn color_degree13_graph(g: &PseudoGraph) -> Result<Degree13Coloring> {
    validate(g)?;
    let mut trace = Vec::new();
    let mut colors = vec![0u8; g.edge_count()];
    let (count, label) = g.component_labels(&[]);
    for c in 0..count as u32 {
        let keep: Vec<bool> = label.iter().map(|&l| l == c).collect();
        let piece = induced_subgraph(g, &keep);
        if piece.graph.edge_count() == 0 {
            continue;
        }
        let pc = component(&piece.graph, &mut trace)?;
        for pe in piece.graph.edges() {
            let orig = piece.edge_origin[pe.index()].expect("induced edges have origins");
            colors[orig.index()] = pc[pe.index()];
        }
    }
    let coloring = EdgeColoring::new(7, colors);
    gate(g, &coloring, &trace)?;
    Ok(Degree13Coloring { coloring, trace })
}

fn gate(g: &PseudoGraph, c: &EdgeColoring, trace: &[TraceStep]) -> Result<()> {
    check_normal(g, c, "degree 1/3 graph").map_err(|err| match err {
        Error::Verification { stage, detail } => {
            Error::Verification { stage, detail: alloc::format!("{detail} [{}]", trace_tags(trace)) }
        }
        other => other,
    })
}

/// The leaf and its neighbor, for every pendant edge.
fn pendants(g: &PseudoGraph) -> Vec<(VertexId, VertexId, EdgeId)> {
    g.vertices()
        .filter(|&v| g.deg(v) == 1)
        .map(|leaf| {
            let e = g.incident(leaf)[0];
            (leaf, g.other_end(e, leaf), e)
        })
        .collect()
}

/// `g` without the given leaves, plus an edge joining `a` and `b`.
fn merged(g: &PseudoGraph, leaves: [VertexId; 2], a: VertexId, b: VertexId) -> Result<(Mapped, EdgeId)> {
    let keep: Vec<bool> = g.vertices().map(|v| !leaves.contains(&v)).collect();
    let mut h = induced_subgraph(g, &keep);
    let (ha, hb) = (h.image_of_vertex(a).expect("kept"), h.image_of_vertex(b).expect("kept"));
    let id = h.graph.add_edge(ha, hb)?;
    h.edge_origin.push(None);
    Ok((h, id))
}

/// Colors of a connected component, indexed by its edges.
fn component(g: &PseudoGraph, trace: &mut Vec<TraceStep>) -> Result<Vec<u8>> {
    let pend = pendants(g);
    let colors = match pend.len() {
        0 => {
            trace.push(TraceStep::new(CaseTag::ManyPendantT0, g));
            coloring_from_flow(g, &nz_z23_flow(g)?)?.colors
        }
        1 => one_pendant(g, pend[0], trace)?,
        2 => {
            trace.push(TraceStep::new(CaseTag::ManyPendantT2, g));
            let [(l1, u, _), (l2, v, _)] = [pend[0], pend[1]];
            let (h, uv) = merged(g, [l1, l2], u, v)?;
            check_shrinks(g, &h.graph, "two pendant edges")?;
            let hc = coloring_from_flow(&h.graph, &nz_z23_flow(&h.graph)?)?;
            lift_merge(g, &h, &hc.colors, uv, &pend)
        }
        _ => many_pendants(g, &pend, trace)?,
    };
    let c = EdgeColoring::new(7, colors);
    gate(g, &c, trace)?;
    Ok(c.colors)
}

/// Colors of `g` from those of a merge `h`, pendant edges taking the color
/// of the merge edge.
fn lift_merge(g: &PseudoGraph, h: &Mapped, hc: &[u8], merge: EdgeId, pend: &[(VertexId, VertexId, EdgeId)]) -> Vec<u8> {
    let mut colors = vec![0u8; g.edge_count()];
    for he in h.graph.edges() {
        if let Some(orig) = h.edge_origin[he.index()] {
            colors[orig.index()] = hc[he.index()];
        }
    }
    for &(_, _, e) in pend {
        if colors[e.index()] == 0 {
            colors[e.index()] = hc[merge.index()];
        }
    }
    colors
}

fn one_pendant(g: &PseudoGraph, (leaf, ve, bridge): (VertexId, VertexId, EdgeId), trace: &mut Vec<TraceStep>) -> Result<Vec<u8>> {
    trace.push(TraceStep::new(CaseTag::ManyPendantT1, g));
    let halves: Vec<EdgeId> = g.incident(ve).iter().copied().filter(|&h| h != bridge).collect();
    let (u, w) = (g.other_end(halves[0], ve), g.other_end(halves[1], ve));
    let keep: Vec<bool> = g.vertices().map(|v| v != leaf && v != ve).collect();
    let mut h = induced_subgraph(g, &keep);
    let (hu, hw) = (h.image_of_vertex(u).expect("kept"), h.image_of_vertex(w).expect("kept"));
    let e = h.graph.add_edge(hu, hw)?;
    h.edge_origin.push(None);
    check_shrinks(g, &h.graph, "one pendant edge")?;
    let out = color_pendant_traced(PendantBlockInput { graph: &h.graph, e }, trace)?;
    let mut colors = vec![0u8; g.edge_count()];
    for he in h.graph.edges() {
        if let Some(orig) = h.edge_origin[he.index()] {
            colors[orig.index()] = out.coloring.color(he);
        }
    }
    colors[halves[0].index()] = out.coloring.color(out.half_at(hu).expect("end of e"));
    colors[halves[1].index()] = out.coloring.color(out.half_at(hw).expect("end of e"));
    colors[bridge.index()] = out.coloring.color(out.bridge);
    Ok(colors)
}

fn many_pendants(g: &PseudoGraph, pend: &[(VertexId, VertexId, EdgeId)], trace: &mut Vec<TraceStep>) -> Result<Vec<u8>> {
    let mut bearers: Vec<VertexId> = pend.iter().map(|p| p.1).collect();
    bearers.dedup();
    if bearers.len() == 1 {
        // one vertex with three leaves
        trace.push(TraceStep::new(CaseTag::Claw, g));
        let mut colors = vec![0u8; g.edge_count()];
        for (i, p) in pend.iter().enumerate() {
            colors[p.2.index()] = i as u8 + 1;
        }
        return Ok(colors);
    }
    let mut distinct: Vec<VertexId> = Vec::new();
    for &(_, b, _) in pend {
        if !distinct.contains(&b) {
            distinct.push(b);
        }
    }
    if distinct.len() < 3 {
        return Err(Error::Precondition("a vertex with exactly two leaves sits on a non-pendant bridge"));
    }
    let (u, v, w) = (distinct[0], distinct[1], distinct[2]);
    if g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w) {
        if g.vertex_count() != 6 {
            return Err(Error::Verification {
                stage: "triangle",
                detail: alloc::format!("{} vertices around a pendant triangle", g.vertex_count()),
            });
        }
        trace.push(TraceStep::new(CaseTag::Triangle, g));
        // each pendant edge repeats the color of the opposite triangle edge
        let mut colors = vec![0u8; g.edge_count()];
        let tri = [(u, v, 1u8), (v, w, 2), (u, w, 3)];
        for &(a, b, c) in &tri {
            colors[g.edges_between(a, b)[0].index()] = c;
        }
        for &(_, x, e) in pend {
            let opposite = tri.iter().find(|&&(a, b, _)| a != x && b != x).expect("triangle edge").2;
            colors[e.index()] = opposite;
        }
        return Ok(colors);
    }
    let (a, b) = [(u, v), (v, w), (u, w)]
        .into_iter()
        .find(|&(a, b)| !g.adjacent(a, b))
        .expect("some pair is nonadjacent");
    trace.push(TraceStep::new(CaseTag::Merge, g));
    let leaf_at = |x: VertexId| pend.iter().find(|p| p.1 == x).expect("pendant-bearing vertex").0;
    let (h, ab) = merged(g, [leaf_at(a), leaf_at(b)], a, b)?;
    check_shrinks(g, &h.graph, "merge")?;
    let hc = component(&h.graph, trace)?;
    let merged_pend: Vec<(VertexId, VertexId, EdgeId)> = pend.iter().copied().filter(|p| p.1 == a || p.1 == b).collect();
    Ok(lift_merge(g, &h, &hc, ab, &merged_pend))
}
