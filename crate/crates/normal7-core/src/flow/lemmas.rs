//! Constructive nowhere-zero flows: from tree pairs, from even subgraphs,
//! with prescribed equal or distinct values, and over GF(2)^3.

use alloc::vec;
use alloc::vec::Vec;

use super::trees::{fundamental_cycle, pack_spanning_trees, pack_spanning_trees_avoiding, parity_subgraph_in_tree, TreePair};
use super::{check_nz, Automorphism, Gf2, GroupFlow, X, Y, Z};
use crate::cuts::{find_bridges, first_2_edge_cut, two_cut_reduction};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, EdgeId, PseudoGraph};

/// Adds `x` around the fundamental cycle of every edge outside `t1` and `y`
/// around that of every edge outside `t2`.
pub fn nz_flow_from_tree_pair(g: &PseudoGraph, tp: &TreePair) -> Result<GroupFlow> {
    for t in [&tp.t1, &tp.t2] {
        if !super::is_spanning_tree(g, t) {
            return Err(Error::Precondition("tree pair must consist of spanning trees"));
        }
    }
    if tp.t1.iter().any(|e| tp.t2.contains(e)) {
        return Err(Error::Precondition("trees must be edge-disjoint"));
    }
    let mut f = GroupFlow::zero(g, 2);
    for (tree, value) in [(&tp.t1, X), (&tp.t2, Y)] {
        let mut inside = vec![false; g.edge_count()];
        for &t in tree.iter() {
            inside[t.index()] = true;
        }
        for e in g.edges() {
            if !inside[e.index()] {
                f.add_on(&fundamental_cycle(g, tree, e), value);
            }
        }
    }
    check_nz(g, &f, "tree-pair flow")?;
    Ok(f)
}

fn even(g: &PseudoGraph, set: &[bool]) -> bool {
    g.vertices()
        .all(|v| g.incident(v).iter().filter(|e| set[e.index()]).count() % 2 == 0)
}

/// `x` on `p1`, `y` on `p2`, summed on the overlap.
pub fn flow_from_even_subgraphs(g: &PseudoGraph, p1: &[EdgeId], p2: &[EdgeId]) -> Result<GroupFlow> {
    let mut in1 = vec![false; g.edge_count()];
    let mut in2 = vec![false; g.edge_count()];
    for &e in p1 {
        g.check_edge(e)?;
        in1[e.index()] = true;
    }
    for &e in p2 {
        g.check_edge(e)?;
        in2[e.index()] = true;
    }
    if !even(g, &in1) || !even(g, &in2) {
        return Err(Error::Precondition("subgraphs must be even"));
    }
    if let Some(e) = g.edges().find(|e| !in1[e.index()] && !in2[e.index()]) {
        return Err(Error::ZeroFlow(e));
    }
    let values = g
        .edges()
        .map(|e| {
            let mut v = Gf2(0);
            if in1[e.index()] {
                v += X;
            }
            if in2[e.index()] {
                v += Y;
            }
            v
        })
        .collect();
    Ok(GroupFlow { k: 2, values })
}

/// A nowhere-zero GF(2)^2 flow with `θ(e) = θ(f)`, for `g` 4-edge-connected.
pub fn flow_two_edges_equal(g: &PseudoGraph, e: EdgeId, f: EdgeId) -> Result<GroupFlow> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    let mut trees = pack_spanning_trees_avoiding(g, 2, &[e, f])?;
    let t2 = trees.pop().expect("two trees");
    let t1 = trees.pop().expect("two trees");
    let flow = nz_flow_from_tree_pair(g, &TreePair { t1, t2 })?;
    if flow.value(e) != flow.value(f) {
        return Err(Error::Verification { stage: "two-edges-equal", detail: alloc::format!("{e} and {f} differ") });
    }
    Ok(flow)
}

/// A nowhere-zero GF(2)^2 flow with `θ(e) ≠ θ(f)` and `θ(e) ≠ θ(gg)`, for
/// `g` 4-edge-connected and `e` distinct from `f` and `gg`.
pub fn flow_three_edges_distinct(g: &PseudoGraph, e: EdgeId, f: EdgeId, gg: EdgeId) -> Result<GroupFlow> {
    for x in [e, f, gg] {
        g.check_edge(x)?;
    }
    if e == f || e == gg {
        return Err(Error::Precondition("e must differ from f and g"));
    }
    let mut flow = if g.is_loop(e) {
        // any flow; the loop value is fixed below
        let avoid: Vec<EdgeId> = [f, gg].into_iter().filter(|&x| !g.is_loop(x)).collect();
        let mut trees = pack_spanning_trees_avoiding(g, 2, &avoid)?;
        let t2 = trees.pop().expect("two trees");
        let t1 = trees.pop().expect("two trees");
        nz_flow_from_tree_pair(g, &TreePair { t1, t2 })?
    } else {
        three_distinct_core(g, e, f, gg)?
    };
    // loops take any nonzero value
    if g.is_loop(e) {
        let v = Gf2::nonzero(2)
            .find(|&v| v != flow.value(f) && v != flow.value(gg))
            .expect("three nonzero values, two excluded");
        flow.set(e, v);
    } else {
        for other in [f, gg] {
            if g.is_loop(other) && flow.value(other) == flow.value(e) {
                let v = Gf2::nonzero(2).find(|&v| v != flow.value(e)).expect("nonzero value");
                flow.set(other, v);
            }
        }
    }
    check_nz(g, &flow, "three-edges-distinct")?;
    if flow.value(e) == flow.value(f) || flow.value(e) == flow.value(gg) {
        return Err(Error::Verification {
            stage: "three-edges-distinct",
            detail: alloc::format!("value of {e} repeats on {f} or {gg}"),
        });
    }
    Ok(flow)
}

fn three_distinct_core(g: &PseudoGraph, e: EdgeId, f: EdgeId, gg: EdgeId) -> Result<GroupFlow> {
    let mut trees = pack_spanning_trees_avoiding(g, 2, &[e, f])?;
    let mut t2 = trees.pop().expect("two trees");
    let mut t1 = trees.pop().expect("two trees");
    if t2.contains(&gg) {
        core::mem::swap(&mut t1, &mut t2);
    }
    let a1 = parity_subgraph_in_tree(g, &t1);
    let a2 = parity_subgraph_in_tree(g, &t2);
    let c = fundamental_cycle(g, &t2, e);
    let mut in_a1 = vec![false; g.edge_count()];
    let mut in_a2c = vec![false; g.edge_count()];
    for &x in &a1 {
        in_a1[x.index()] = true;
    }
    for &x in a2.iter().chain(&c) {
        in_a2c[x.index()] = !in_a2c[x.index()];
    }
    let p1: Vec<EdgeId> = g.edges().filter(|x| !in_a1[x.index()]).collect();
    let p2: Vec<EdgeId> = g.edges().filter(|x| !in_a2c[x.index()]).collect();
    flow_from_even_subgraphs(g, &p1, &p2)
}

/// A nowhere-zero GF(2)^2 flow with `θ(e) ≠ θ(f)`.
pub fn flow_two_adjacent_distinct(g: &PseudoGraph, e: EdgeId, f: EdgeId) -> Result<GroupFlow> {
    flow_three_edges_distinct(g, e, f, f)
}

/// A nowhere-zero GF(2)^3 flow on a bridgeless graph.
pub fn nz_z23_flow(g: &PseudoGraph) -> Result<GroupFlow> {
    if let Some(&b) = find_bridges(g).first() {
        return Err(Error::Bridge(b));
    }
    let (count, label) = g.component_labels(&[]);
    let flow = if count <= 1 {
        connected_flow(g)?
    } else {
        let mut flow = GroupFlow::zero(g, 3);
        for c in 0..count as u32 {
            let keep: Vec<bool> = label.iter().map(|&l| l == c).collect();
            let piece = induced_subgraph(g, &keep);
            let pf = connected_flow(&piece.graph)?;
            for pe in piece.graph.edges() {
                let orig = piece.edge_origin[pe.index()].expect("induced edges have origins");
                flow.set(orig, pf.value(pe));
            }
        }
        flow
    };
    check_nz(g, &flow, "z2^3 flow")?;
    Ok(flow)
}

/// Connected, bridgeless `g`.
fn connected_flow(g: &PseudoGraph) -> Result<GroupFlow> {
    if let Some(cut) = first_2_edge_cut(g) {
        let trace = two_cut_reduction(g, &cut)?;
        let f0 = connected_flow(&trace.pieces[0].graph)?;
        let f1 = connected_flow(&trace.pieces[1].graph)?;
        let a0 = trace.arising[0][0].0;
        let a1 = trace.arising[1][0].0;
        let rename = Automorphism::align(&[(f1.value(a1), f0.value(a0))]).expect("nonzero values align");
        let f1 = f1.apply(&rename);
        let mut flow = GroupFlow::zero(g, 3);
        for (piece, pf) in trace.pieces.iter().zip([&f0, &f1]) {
            for pe in piece.graph.edges() {
                if let Some(orig) = piece.edge_origin[pe.index()] {
                    flow.set(orig, pf.value(pe));
                }
            }
        }
        for &c in &trace.cut.edges {
            flow.set(c, f0.value(a0));
        }
        return Ok(flow);
    }
    // 3-edge-connected: three disjoint spanning trees of the doubled graph
    let mut doubled = PseudoGraph::new(g.vertex_count());
    for e in g.edges() {
        let (a, b) = g.ends(e);
        doubled.add_edge(a, b)?;
        doubled.add_edge(a, b)?;
    }
    let trees = pack_spanning_trees(&doubled, 3)?;
    let mut flow = GroupFlow::zero(g, 3);
    for (tree, bit) in trees.iter().zip([X, Y, Z]) {
        let tree: Vec<EdgeId> = tree.iter().map(|d| EdgeId(d.0 / 2)).collect();
        let a = parity_subgraph_in_tree(g, &tree);
        for e in g.edges() {
            if a.binary_search(&e).is_err() {
                flow.values[e.index()] += bit;
            }
        }
    }
    Ok(flow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::named;
    use crate::flow::verify_flow;

    fn quad() -> PseudoGraph {
        PseudoGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn tree_pair_flow_quad() {
        let g = quad();
        let tp = TreePair { t1: vec![EdgeId(0)], t2: vec![EdgeId(1)] };
        let f = nz_flow_from_tree_pair(&g, &tp).unwrap();
        assert_eq!(f.value(EdgeId(2)), X + Y);
        assert_eq!(f.value(EdgeId(3)), X + Y);
        assert!(verify_flow(&g, &f).ok());
        let single = TreePair { t1: vec![EdgeId(0)], t2: vec![EdgeId(0)] };
        assert!(nz_flow_from_tree_pair(&g, &single).is_err());
    }

    #[test]
    fn tree_pair_flow_k4_outside_edges() {
        let g = named::k4();
        let tp = crate::flow::pack_two_spanning_trees(&g).unwrap();
        let f = nz_flow_from_tree_pair(&g, &tp).unwrap();
        assert!(verify_flow(&g, &f).ok());
        for e in g.edges() {
            if !tp.t1.contains(&e) && !tp.t2.contains(&e) {
                assert_eq!(f.value(e), X + Y);
            }
        }
    }

    #[test]
    fn equal_pair_on_quad_and_loops() {
        let g = quad();
        for e in g.edges() {
            for f in g.edges() {
                let fl = flow_two_edges_equal(&g, e, f).unwrap();
                assert_eq!(fl.value(e), fl.value(f));
                assert!(verify_flow(&g, &fl).ok());
            }
        }
        let looped = PseudoGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1), (0, 1), (0, 0)]).unwrap();
        let fl = flow_two_edges_equal(&looped, EdgeId(4), EdgeId(1)).unwrap();
        assert_eq!(fl.value(EdgeId(4)), fl.value(EdgeId(1)));
    }

    #[test]
    fn even_subgraph_flows() {
        let c4 = PseudoGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let all: Vec<EdgeId> = c4.edges().collect();
        let f = flow_from_even_subgraphs(&c4, &all, &all).unwrap();
        assert!(f.values.iter().all(|&v| v == X + Y));
        let f = flow_from_even_subgraphs(&c4, &all, &[]).unwrap();
        assert!(f.values.iter().all(|&v| v == X));
        assert!(flow_from_even_subgraphs(&c4, &[], &[]).is_err());

        // prism: the two triangles, and the 4-cycle 0-1-4-3 plus ... found by search
        let prism = named::prism();
        let m = prism.edge_count();
        let mut found = false;
        'outer: for s1 in 1u32..(1 << m) {
            for s2 in s1..(1 << m) {
                let p1: Vec<EdgeId> = prism.edges().filter(|e| s1 >> e.0 & 1 == 1).collect();
                let p2: Vec<EdgeId> = prism.edges().filter(|e| s2 >> e.0 & 1 == 1).collect();
                if let Ok(f) = flow_from_even_subgraphs(&prism, &p1, &p2) {
                    assert!(verify_flow(&prism, &f).ok());
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn three_distinct_k5_every_vertex() {
        let g = named::k5();
        for v in g.vertices() {
            let inc = g.incident(v);
            for &e in inc {
                for &f in inc {
                    for &h in inc {
                        if e == f || e == h {
                            continue;
                        }
                        let fl = flow_three_edges_distinct(&g, e, f, h).unwrap();
                        assert!(verify_flow(&g, &fl).ok());
                        assert_ne!(fl.value(e), fl.value(f));
                        assert_ne!(fl.value(e), fl.value(h));
                    }
                }
            }
        }
    }

    #[test]
    fn three_distinct_quad_and_loop() {
        let g = quad();
        let fl = flow_three_edges_distinct(&g, EdgeId(0), EdgeId(1), EdgeId(2)).unwrap();
        assert_ne!(fl.value(EdgeId(0)), fl.value(EdgeId(1)));
        assert_ne!(fl.value(EdgeId(0)), fl.value(EdgeId(2)));
        let looped = PseudoGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1), (0, 1), (0, 0)]).unwrap();
        for (e, f, h) in [(4, 0, 1), (0, 4, 1), (0, 1, 4)] {
            let fl = flow_three_edges_distinct(&looped, EdgeId(e), EdgeId(f), EdgeId(h)).unwrap();
            assert_ne!(fl.value(EdgeId(e)), fl.value(EdgeId(f)));
            assert_ne!(fl.value(EdgeId(e)), fl.value(EdgeId(h)));
        }
    }

    #[test]
    fn adjacent_distinct() {
        let g = named::k5();
        let fl = flow_two_adjacent_distinct(&g, EdgeId(0), EdgeId(1)).unwrap();
        assert_ne!(fl.value(EdgeId(0)), fl.value(EdgeId(1)));
    }

    #[test]
    fn z23_examples() {
        for g in [named::petersen(), named::fig6(), named::k33(), named::prism(), named::k5()] {
            let f = nz_z23_flow(&g).unwrap();
            assert!(verify_flow(&g, &f).ok());
        }
        let theta = named::theta();
        let f = nz_z23_flow(&theta).unwrap();
        let mut vals = f.values.clone();
        vals.sort();
        vals.dedup();
        assert_eq!(vals.len(), 3);
        assert_eq!(vals[0] + vals[1], vals[2]);
        assert_eq!(nz_z23_flow(&named::double_k()), Err(Error::Bridge(EdgeId(14))));
    }

    #[test]
    fn z23_cycles_and_components() {
        let two = PseudoGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (3, 4)]).unwrap();
        let f = nz_z23_flow(&two).unwrap();
        assert!(verify_flow(&two, &f).ok());
        let c6 = PseudoGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(verify_flow(&c6, &nz_z23_flow(&c6).unwrap()).ok());
    }
}
