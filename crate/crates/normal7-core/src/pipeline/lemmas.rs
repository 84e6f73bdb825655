//! GF(2)^3 flows with one poor edge, or two adjacent rich edges.
//!
//! Both constructions recurse on cuts. Flows of the two pieces are combined
//! after renaming one of them by an automorphism of GF(2)^3 so that the
//! pieces agree on the edges arising from the cut. A cyclically
//! 4-edge-connected graph is the base: a perfect matching `M` through a
//! chosen edge is fixed, the complementary 2-factor is contracted, and a
//! GF(2)^2 flow of the contraction with a prescribed equality or inequality
//! is lifted.

use alloc::vec::Vec;

use super::check_shrinks;
use crate::coloring::{flow_status, EdgeStatus};
use crate::cuts::{find_bridges, find_nontrivial_3_edge_cuts, first_2_edge_cut, three_cut_reduction, two_cut_reduction, ReductionKind, ReductionTrace};
use crate::error::{Error, Result};
use crate::flow::{check_nz, nz_z23_flow, flow_three_edges_distinct, flow_two_edges_equal, Automorphism, Gf2, GroupFlow, Z};
use crate::graph::{EdgeId, PseudoGraph, VertexId};
use crate::matching::{contract_two_factor, lift_flow, perfect_matching_through, PerfectMatching};

fn require_bridgeless_cubic(g: &PseudoGraph) -> Result<()> {
    if let Some(v) = g.vertices().find(|&v| g.deg(v) != 3) {
        return Err(Error::Degree { vertex: v, degree: g.deg(v), expected: "3" });
    }
    if g.has_loop() {
        return Err(Error::Precondition("cubic graph without loops"));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected"));
    }
    match find_bridges(g).first() {
        Some(&b) => Err(Error::Bridge(b)),
        None => Ok(()),
    }
}

fn status_gate(g: &PseudoGraph, f: &GroupFlow, e: EdgeId, want: EdgeStatus, stage: &'static str) -> Result<()> {
    check_nz(g, f, stage)?;
    let got = flow_status(g, f, e);
    if got == want {
        Ok(())
    } else {
        Err(Error::Verification { stage, detail: alloc::format!("{e} is {got:?}, wanted {want:?}") })
    }
}

/// Combines flows of the two pieces, already agreeing on the arising edges.
fn combine(g: &PseudoGraph, trace: &ReductionTrace, flows: [&GroupFlow; 2]) -> GroupFlow {
    let mut flow = GroupFlow::zero(g, 3);
    for (piece, pf) in trace.pieces.iter().zip(flows) {
        for pe in piece.graph.edges() {
            if let Some(orig) = piece.edge_origin[pe.index()] {
                flow.set(orig, pf.value(pe));
            }
        }
    }
    for &(pe, ref cut_edges) in &trace.arising[0] {
        for &c in cut_edges {
            flow.set(c, flows[0].value(pe));
        }
    }
    flow
}

/// Renames `f1` (on piece 1) to agree with `f0` (on piece 0) on the arising
/// edges, plus any extra `(piece-1 value, piece-0 value)` pairs.
fn align_pieces(trace: &ReductionTrace, f0: &GroupFlow, f1: &GroupFlow, extra: &[(Gf2, Gf2)]) -> Result<GroupFlow> {
    let mut pairs: Vec<(Gf2, Gf2)> = match trace.kind {
        ReductionKind::TwoCut => vec_pair(f1.value(trace.arising[1][0].0), f0.value(trace.arising[0][0].0)),
        ReductionKind::ThreeCut => trace.arising[1]
            .iter()
            .zip(&trace.arising[0])
            .take(2)
            .map(|(&(p1, _), &(p0, _))| (f1.value(p1), f0.value(p0)))
            .collect(),
    };
    pairs.extend_from_slice(extra);
    let a = Automorphism::align(&pairs).ok_or(Error::Verification {
        stage: "align",
        detail: alloc::string::String::from("no automorphism matches the cut values"),
    })?;
    Ok(f1.apply(&a))
}

fn vec_pair(a: Gf2, b: Gf2) -> Vec<(Gf2, Gf2)> {
    alloc::vec![(a, b)]
}

fn piece_edge(trace: &ReductionTrace, s: usize, e: EdgeId) -> EdgeId {
    trace.pieces[s].image_of_edge(e).expect("edge lies in this piece")
}

/// Piece edge standing for the cut edge `c` on side `s`.
fn arising_for(trace: &ReductionTrace, s: usize, c: EdgeId) -> EdgeId {
    trace.arising[s]
        .iter()
        .find(|(_, cs)| cs.contains(&c))
        .map(|&(pe, _)| pe)
        .expect("every cut edge arises on both sides")
}

fn first_nontrivial_3_cut(g: &PseudoGraph) -> Option<Vec<EdgeId>> {
    find_nontrivial_3_edge_cuts(g).into_iter().next().map(|c| c.edges)
}

/// A nowhere-zero GF(2)^3 flow of a bridgeless cubic graph in which `e` is
/// poor.
pub fn flow_edge_poor(g: &PseudoGraph, e: EdgeId) -> Result<GroupFlow> {
    g.check_edge(e)?;
    require_bridgeless_cubic(g)?;
    let flow = poor_rec(g, e)?;
    status_gate(g, &flow, e, EdgeStatus::Poor, "poor-edge flow")?;
    Ok(flow)
}

fn poor_rec(g: &PseudoGraph, e: EdgeId) -> Result<GroupFlow> {
    let (u, v) = g.ends(e);
    if g.edges_between(u, v).len() >= 2 {
        // conservation forces the third edges at u and v to agree
        return nz_z23_flow(g);
    }
    if let Some(cut) = first_2_edge_cut(g) {
        let trace = two_cut_reduction(g, &cut)?;
        return poor_across(g, e, &trace);
    }
    if let Some(cut) = first_nontrivial_3_cut(g) {
        let trace = three_cut_reduction(g, &cut)?;
        return poor_across(g, e, &trace);
    }
    // cyclically 4-edge-connected: g' at u, M through g', g_e the M-edge at v
    let g_prime = *g.incident(u).iter().find(|&&f| f != e).expect("cubic vertex");
    let m = perfect_matching_through(g, g_prime)?;
    let g_e = matching_edge_at(g, &m, v);
    let lift = contract_two_factor(g, &m)?;
    let (a, b) = (lift.image_of(g_prime).expect("matching edge"), lift.image_of(g_e).expect("matching edge"));
    let theta = flow_two_edges_equal(&lift.h, a, b)?;
    let seeds = alloc::vec![Z; lift.cycles.len()];
    lift_flow(&lift, &theta, &seeds)
}

fn matching_edge_at(g: &PseudoGraph, m: &PerfectMatching, v: VertexId) -> EdgeId {
    *g.incident(v).iter().find(|&&f| m.contains(f)).expect("perfect matching covers every vertex")
}

fn poor_across(g: &PseudoGraph, e: EdgeId, trace: &ReductionTrace) -> Result<GroupFlow> {
    for piece in &trace.pieces {
        check_shrinks(g, &piece.graph, "poor-edge flow")?;
    }
    if let Some(s) = trace.piece_with_edge(e) {
        // e inside one piece: any flow on the other
        let fs = poor_rec(&trace.pieces[s].graph, piece_edge(trace, s, e))?;
        let fo = nz_z23_flow(&trace.pieces[1 - s].graph)?;
        let (f0, f1) = if s == 0 { (fs, fo) } else { (fo, fs) };
        let f1 = align_pieces(trace, &f0, &f1, &[])?;
        return Ok(combine(g, trace, [&f0, &f1]));
    }
    // e in the cut: poor on both sides, matched around its two ends
    let a0 = arising_for(trace, 0, e);
    let a1 = arising_for(trace, 1, e);
    let f0 = poor_rec(&trace.pieces[0].graph, a0)?;
    let f1 = poor_rec(&trace.pieces[1].graph, a1)?;
    let extra = match trace.kind {
        ReductionKind::TwoCut => {
            let end0 = piece_end(trace, 0, e, g);
            let end1 = piece_end(trace, 1, e, g);
            let p0 = &trace.pieces[0].graph;
            let p1 = &trace.pieces[1].graph;
            vec_pair(f1.others_at(p1, end1, a1)[0], f0.others_at(p0, end0, a0)[0])
        }
        ReductionKind::ThreeCut => Vec::new(),
    };
    let f1 = align_pieces(trace, &f0, &f1, &extra)?;
    Ok(combine(g, trace, [&f0, &f1]))
}

/// Image in piece `s` of the endpoint of cut edge `c` on side `s`.
fn piece_end(trace: &ReductionTrace, s: usize, c: EdgeId, g: &PseudoGraph) -> VertexId {
    let end = trace.cut.end_on(g, c, s as u8);
    trace.pieces[s].image_of_vertex(end).expect("cut endpoint kept on its side")
}

fn require_three_connected_simple(g: &PseudoGraph) -> Result<()> {
    require_bridgeless_cubic(g)?;
    if !g.is_simple() {
        return Err(Error::Precondition("simple graph required"));
    }
    if first_2_edge_cut(g).is_some() {
        return Err(Error::Precondition("3-edge-connected graph required"));
    }
    Ok(())
}

/// A nowhere-zero GF(2)^3 flow of a simple 3-edge-connected cubic graph in
/// which the adjacent edges `e` and `f` are both rich.
pub fn flow_two_adjacent_rich(g: &PseudoGraph, e: EdgeId, f: EdgeId) -> Result<GroupFlow> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    require_three_connected_simple(g)?;
    if e == f || shared_vertex(g, e, f).is_none() {
        return Err(Error::Precondition("e and f must be distinct adjacent edges"));
    }
    let flow = rich_rec(g, e, f)?;
    status_gate(g, &flow, e, EdgeStatus::Rich, "rich-pair flow")?;
    status_gate(g, &flow, f, EdgeStatus::Rich, "rich-pair flow")?;
    Ok(flow)
}

/// A nowhere-zero GF(2)^3 flow of a simple 3-edge-connected cubic graph in
/// which `e` is rich.
pub fn flow_edge_rich(g: &PseudoGraph, e: EdgeId) -> Result<GroupFlow> {
    g.check_edge(e)?;
    let (u, _) = g.ends(e);
    let f = *g
        .incident(u)
        .iter()
        .find(|&&f| f != e)
        .ok_or(Error::Precondition("e must have a neighbor"))?;
    flow_two_adjacent_rich(g, e, f)
}

fn shared_vertex(g: &PseudoGraph, e: EdgeId, f: EdgeId) -> Option<VertexId> {
    let (a, b) = g.ends(e);
    let (c, d) = g.ends(f);
    [a, b].into_iter().find(|&x| x == c || x == d)
}

fn rich_rec(g: &PseudoGraph, e: EdgeId, f: EdgeId) -> Result<GroupFlow> {
    if let Some(cut) = first_nontrivial_3_cut(g) {
        let trace = three_cut_reduction(g, &cut)?;
        for piece in &trace.pieces {
            check_shrinks(g, &piece.graph, "rich-pair flow")?;
        }
        // a nontrivial 3-cut of a 3-edge-connected cubic graph is a matching,
        // so at most one of the adjacent edges e, f is cut
        let (e, f) = if trace.cut.contains(f) { (f, e) } else { (e, f) };
        let s = trace.piece_with_edge(f).expect("f is not a cut edge");
        let ps = &trace.pieces[s].graph;
        let (fs, fo) = if trace.cut.contains(e) {
            let fs = rich_rec(ps, arising_for(&trace, s, e), piece_edge(&trace, s, f))?;
            let fo = poor_rec(&trace.pieces[1 - s].graph, arising_for(&trace, 1 - s, e))?;
            (fs, fo)
        } else {
            let fs = rich_rec(ps, piece_edge(&trace, s, e), piece_edge(&trace, s, f))?;
            (fs, nz_z23_flow(&trace.pieces[1 - s].graph)?)
        };
        let (f0, f1) = if s == 0 { (fs, fo) } else { (fo, fs) };
        let f1 = align_pieces(&trace, &f0, &f1, &[])?;
        return Ok(combine(g, &trace, [&f0, &f1]));
    }
    // cyclically 4-edge-connected: M through the third edge at the shared
    // vertex, the matching edges at the far ends kept off its value
    let w = shared_vertex(g, e, f).expect("adjacent");
    let third = *g.incident(w).iter().find(|&&h| h != e && h != f).expect("cubic vertex");
    let m = perfect_matching_through(g, third)?;
    let g_e = matching_edge_at(g, &m, g.other_end(e, w));
    let g_f = matching_edge_at(g, &m, g.other_end(f, w));
    let lift = contract_two_factor(g, &m)?;
    let image = |x: EdgeId| lift.image_of(x).expect("matching edge");
    let theta = flow_three_edges_distinct(&lift.h, image(third), image(g_e), image(g_f))?;
    let seeds = alloc::vec![Z; lift.cycles.len()];
    lift_flow(&lift, &theta, &seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::named;
    use crate::cuts::is_3_edge_connected;

    fn all_poor(g: &PseudoGraph) {
        for e in g.edges() {
            let f = flow_edge_poor(g, e).unwrap();
            assert_eq!(flow_status(g, &f, e), EdgeStatus::Poor, "{e}");
        }
    }

    #[test]
    fn poor_everywhere_on_named_graphs() {
        for g in [named::k4(), named::k33(), named::petersen(), named::prism(), named::fig6(), named::theta()] {
            all_poor(&g);
        }
    }

    #[test]
    fn rich_pairs_on_three_connected_graphs() {
        for g in [named::k4(), named::k33(), named::petersen(), named::prism()] {
            assert!(is_3_edge_connected(&g));
            for w in g.vertices() {
                let inc = g.incident(w);
                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                    let f = flow_two_adjacent_rich(&g, inc[i], inc[j]).unwrap();
                    assert_eq!(flow_status(&g, &f, inc[i]), EdgeStatus::Rich);
                    assert_eq!(flow_status(&g, &f, inc[j]), EdgeStatus::Rich);
                }
            }
        }
    }

    #[test]
    fn k4_rich_pair_feasible_by_brute_force() {
        // oracle: the cycle space of K4 has dimension 3, so 8^3 GF(2)^3 flows
        let g = named::k4();
        let tree = [EdgeId(0), EdgeId(1), EdgeId(2)]; // star at vertex 0
        let chords: Vec<EdgeId> = g.edges().filter(|e| !tree.contains(e)).collect();
        let mut feasible = false;
        for code in 0..512u32 {
            let mut f = GroupFlow::zero(&g, 3);
            for (i, &c) in chords.iter().enumerate() {
                let val = Gf2(((code >> (3 * i)) & 7) as u8);
                f.add_on(&crate::flow::fundamental_cycle(&g, &tree, c), val);
            }
            if f.is_nowhere_zero()
                && flow_status(&g, &f, EdgeId(0)) == EdgeStatus::Rich
                && flow_status(&g, &f, EdgeId(1)) == EdgeStatus::Rich
            {
                feasible = true;
            }
        }
        assert!(feasible);
        assert!(flow_two_adjacent_rich(&g, EdgeId(0), EdgeId(1)).is_ok());
    }

    #[test]
    fn rich_edge_flow() {
        let p = named::petersen();
        for e in p.edges() {
            let f = flow_edge_rich(&p, e).unwrap();
            assert_eq!(flow_status(&p, &f, e), EdgeStatus::Rich);
        }
    }

    #[test]
    fn preconditions() {
        let theta = named::theta();
        assert!(flow_edge_rich(&theta, EdgeId(0)).is_err());
        let fig6 = named::fig6();
        assert!(flow_two_adjacent_rich(&fig6, EdgeId(0), EdgeId(1)).is_err());
        let k4 = named::k4();
        // edges 0 = 01 and 5 = 23 are disjoint
        assert!(flow_two_adjacent_rich(&k4, EdgeId(0), EdgeId(5)).is_err());
        assert!(matches!(flow_edge_poor(&named::double_k(), EdgeId(0)), Err(Error::Bridge(_))));
    }
}
