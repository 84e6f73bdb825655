//! Normal 7-colorings of simple cubic graphs, by coloring the pieces left
//! after removing all bridges and renaming each piece's palette so that
//! every bridge is poor.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::degree13::color_degree13_graph;
use super::{palette_from_pairs, rename, trace_tags, CaseTag, Palette, TraceStep, IDENTITY_PALETTE};
use crate::coloring::{check_normal, EdgeColoring};
use crate::cuts::find_bridges;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, EdgeId, PseudoGraph, VertexId};

/// One component of the graph with its bridges removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueNode {
    pub vertices: Vec<VertexId>,
    /// The bridge to the parent node; `None` at a root.
    pub parent_bridge: Option<EdgeId>,
}

impl GlueNode {
    pub fn is_isolated(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// The bridge-block forest: components of `G` minus its bridges as nodes,
/// bridges as tree edges, one root per component of `G`. Nodes are listed
/// in BFS order, so every parent precedes its children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueForest {
    pub nodes: Vec<GlueNode>,
    /// Node index of every vertex.
    pub node_of: Vec<usize>,
    pub bridges: Vec<EdgeId>,
}

impl GlueForest {
    /// Requires a cubic graph.
    pub fn build(g: &PseudoGraph) -> Result<GlueForest> {
        let bridges = find_bridges(g);
        let mut is_bridge = vec![false; g.edge_count()];
        for &b in &bridges {
            is_bridge[b.index()] = true;
        }
        for v in g.vertices() {
            let on = g.incident(v).iter().filter(|e| is_bridge[e.index()]).count();
            if on == 2 {
                return Err(Error::Verification {
                    stage: "glue forest",
                    detail: alloc::format!("vertex {v} lies on exactly two bridges"),
                });
            }
        }
        let (count, label) = g.component_labels(&is_bridge);
        let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); count];
        for v in g.vertices() {
            members[label[v.index()] as usize].push(v);
        }

        // roots first at nontrivial blocks, then at whatever is left
        let mut order: Vec<(usize, Option<EdgeId>)> = Vec::with_capacity(count);
        let mut seen = vec![false; count];
        let candidates = (0..count).filter(|&c| members[c].len() > 1).chain(0..count);
        for root in candidates.collect::<Vec<_>>() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([(root, None)]);
            while let Some((c, via)) = queue.pop_front() {
                order.push((c, via));
                for &v in &members[c] {
                    for &b in g.incident(v) {
                        if !is_bridge[b.index()] {
                            continue;
                        }
                        let d = label[g.other_end(b, v).index()] as usize;
                        if !seen[d] {
                            seen[d] = true;
                            queue.push_back((d, Some(b)));
                        }
                    }
                }
            }
        }

        let mut index = vec![0usize; count];
        for (i, &(c, _)) in order.iter().enumerate() {
            index[c] = i;
        }
        let nodes = order
            .iter()
            .map(|&(c, via)| GlueNode { vertices: core::mem::take(&mut members[c]), parent_bridge: via })
            .collect();
        let node_of = g.vertices().map(|v| index[label[v.index()] as usize]).collect();
        Ok(GlueForest { nodes, node_of, bridges })
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].parent_bridge.is_none())
    }
}

#[derive(Clone, Debug)]
pub struct Normal7Coloring {
    pub coloring: EdgeColoring,
    pub trace: Vec<TraceStep>,
    pub forest: GlueForest,
}

fn validate(g: &PseudoGraph) -> Result<()> {
    if let Some(v) = g.vertices().find(|&v| g.deg(v) != 3) {
        return Err(Error::Degree { vertex: v, degree: g.deg(v), expected: "3" });
    }
    if !g.is_simple() {
        return Err(Error::Precondition("simple graph required"));
    }
    Ok(())
}

/// A normal coloring of a simple cubic graph with at most seven colors and
/// no exempt edges. Every bridge is poor.
pub fn normal7_coloring(g: &PseudoGraph) -> Result<Normal7Coloring> {
    validate(g)?;
    let forest = GlueForest::build(g)?;
    let mut trace = Vec::new();
    let mut colors = vec![0u8; g.edge_count()];

    for node in &forest.nodes {
        if node.is_isolated() {
            let v = node.vertices[0];
            let edges = g.incident(v);
            match node.parent_bridge {
                None => {
                    for (i, &b) in edges.iter().enumerate() {
                        colors[b.index()] = i as u8 + 1;
                    }
                }
                Some(pb) => {
                    // the two remaining colors at the parent side of `pb`
                    let p = g.other_end(pb, v);
                    let rest: Vec<u8> =
                        g.incident(p).iter().filter(|&&h| h != pb).map(|h| colors[h.index()]).collect();
                    let mut it = rest.into_iter();
                    for &b in edges.iter().filter(|&&b| b != pb) {
                        colors[b.index()] = it.next().expect("two other edges");
                    }
                }
            }
            continue;
        }
        glue_block(g, node, &mut colors, &mut trace)?;
    }

    let coloring = EdgeColoring::new(7, colors);
    check_normal(g, &coloring, "glue").map_err(|err| match err {
        Error::Verification { stage, detail } => {
            Error::Verification { stage, detail: alloc::format!("{detail} [{}]", trace_tags(&trace)) }
        }
        other => other,
    })?;
    if coloring.colors_used() > 7 {
        return Err(Error::Verification { stage: "glue", detail: alloc::format!("{} colors", coloring.colors_used()) });
    }
    Ok(Normal7Coloring { coloring, trace, forest })
}

/// Colors a nontrivial block with a pendant edge standing in for each of its
/// bridges, renamed to agree with the already colored parent side.
fn glue_block(g: &PseudoGraph, node: &GlueNode, colors: &mut [u8], trace: &mut Vec<TraceStep>) -> Result<()> {
    let mut keep = vec![false; g.vertex_count()];
    for &v in &node.vertices {
        keep[v.index()] = true;
    }
    let mut h = induced_subgraph(g, &keep);
    // pendant edge in `h` for every bridge leaving the block
    let mut stand_in: Vec<(EdgeId, EdgeId)> = Vec::new();
    for &v in &node.vertices {
        for &b in g.incident(v) {
            let (x, y) = g.ends(b);
            if keep[x.index()] && keep[y.index()] {
                continue;
            }
            let hv = h.image_of_vertex(v).expect("kept");
            let leaf = h.graph.add_vertex();
            h.vertex_origin.push(None);
            let pe = h.graph.add_edge(hv, leaf)?;
            h.edge_origin.push(None);
            stand_in.push((b, pe));
        }
    }
    let sub = color_degree13_graph(&h.graph)?;
    trace.extend(sub.trace);
    let hc = &sub.coloring;

    let perm: Palette = match node.parent_bridge {
        None => IDENTITY_PALETTE,
        Some(pb) => {
            let q = if keep[g.ends(pb).0.index()] { g.ends(pb).0 } else { g.ends(pb).1 };
            let p = g.other_end(pb, q);
            let hq = h.image_of_vertex(q).expect("kept");
            let pendant = stand_in.iter().find(|s| s.0 == pb).expect("stand-in for the parent bridge").1;
            let beta = colors[pb.index()];
            let mut pairs = vec![(hc.color(pendant), beta)];
            let ours = h.graph.incident(hq).iter().filter(|&&x| x != pendant).map(|&x| hc.color(x));
            let theirs = g.incident(p).iter().filter(|&&x| x != pb).map(|&x| colors[x.index()]);
            pairs.extend(ours.zip(theirs));
            palette_from_pairs(&pairs)?
        }
    };
    trace.push(TraceStep::renamed(CaseTag::Glue, &h.graph, perm));

    for he in h.graph.edges() {
        if let Some(orig) = h.edge_origin[he.index()] {
            colors[orig.index()] = rename(&perm, hc.color(he));
        }
    }
    for &(b, pe) in &stand_in {
        if Some(b) != node.parent_bridge {
            colors[b.index()] = rename(&perm, hc.color(pe));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::named;
    use crate::coloring::{edge_status, is_normal, EdgeStatus};

    fn check(g: &PseudoGraph) -> Normal7Coloring {
        let out = normal7_coloring(g).unwrap();
        let report = is_normal(g, &out.coloring).unwrap();
        assert!(report.normal && out.coloring.exempt.is_empty());
        assert!(out.coloring.colors_used() <= 7);
        for &b in &out.forest.bridges {
            assert_eq!(edge_status(g, &out.coloring, b).unwrap(), EdgeStatus::Poor);
        }
        out
    }

    /// `K` with its degree-2 vertex joined to a new vertex carrying two more
    /// copies of `K`: a vertex on three bridges.
    fn claw_of_gadgets() -> PseudoGraph {
        let mut edges = Vec::new();
        for i in 0..3u32 {
            edges.extend(named::K_EDGES.iter().map(|&(a, b)| (a + 5 * i, b + 5 * i)));
            edges.push((5 * i, 15));
        }
        PseudoGraph::from_edges(16, &edges).unwrap()
    }

    #[test]
    fn bridgeless_graphs_are_one_flow() {
        for g in [named::k4(), named::k33(), named::petersen(), named::prism()] {
            let out = check(&g);
            assert_eq!(out.forest.nodes.len(), 1);
            assert_eq!(out.trace[0].tag, CaseTag::ManyPendantT0);
        }
    }

    #[test]
    fn double_k_bridge_matches_opposite_edge() {
        let g = named::double_k();
        let out = check(&g);
        let bridge = named::edge(&g, 0, 5);
        // v4v5 of each copy carries the bridge color
        assert_eq!(out.coloring.color(named::edge(&g, 3, 4)), out.coloring.color(bridge));
        assert_eq!(out.coloring.color(named::edge(&g, 8, 9)), out.coloring.color(bridge));
        assert_eq!(out.forest.nodes.len(), 2);
    }

    #[test]
    fn isolated_vertex_on_three_bridges() {
        let g = claw_of_gadgets();
        let out = check(&g);
        assert_eq!(out.forest.nodes.len(), 4);
        assert!(out.forest.nodes.iter().filter(|n| n.is_isolated()).count() == 1);
        assert_eq!(out.forest.roots().count(), 1);
        assert!(!out.forest.nodes[0].is_isolated());
    }

    #[test]
    fn disconnected_input() {
        let mut edges: Vec<(u32, u32)> = named::K_EDGES.to_vec();
        edges.extend(named::K_EDGES.iter().map(|&(a, b)| (a + 5, b + 5)));
        edges.push((0, 5));
        edges.extend([(10, 11), (10, 12), (10, 13), (11, 12), (11, 13), (12, 13)]);
        let g = PseudoGraph::from_edges(14, &edges).unwrap();
        let out = check(&g);
        assert_eq!(out.forest.roots().count(), 2);
    }

    #[test]
    fn forest_parents_precede_children() {
        let g = claw_of_gadgets();
        let f = GlueForest::build(&g).unwrap();
        for (i, n) in f.nodes.iter().enumerate() {
            if let Some(b) = n.parent_bridge {
                let (x, y) = g.ends(b);
                let other = if f.node_of[x.index()] == i { y } else { x };
                assert!(f.node_of[other.index()] < i);
            }
        }
    }

    #[test]
    fn rejects_non_cubic() {
        assert!(matches!(normal7_coloring(&named::k_gadget()), Err(Error::Degree { vertex: VertexId(0), .. })));
        assert!(normal7_coloring(&named::theta()).is_err());
    }
}
