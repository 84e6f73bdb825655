//! Built-in graphs. Vertex `i` of a drawing labeled `v_i` is `VertexId(i)`,
//! except the gadget `K`, whose `v1..v5` are `VertexId(0..5)`.

use alloc::vec::Vec;

use crate::graph::{EdgeId, PseudoGraph, VertexId};

pub struct NamedGraph {
    pub name: &'static str,
    pub graph: PseudoGraph,
    pub note: &'static str,
}

fn build(n: usize, edges: &[(u32, u32)]) -> PseudoGraph {
    PseudoGraph::from_edges(n, edges).expect("registry edge lists are in range")
}

pub fn k4() -> PseudoGraph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k5() -> PseudoGraph {
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            edges.push((a, b));
        }
    }
    build(5, &edges)
}

/// Parts `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> PseudoGraph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    build(6, &edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> PseudoGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, &edges)
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> PseudoGraph {
    build(2, &[(0, 1), (0, 1), (0, 1)])
}

/// Triangles `0,1,2` and `3,4,5` joined by the matching `i -- i+3`.
pub fn prism() -> PseudoGraph {
    build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

pub const FIG6_EDGES: [(u32, u32); 15] = [
    (0, 5),
    (0, 1),
    (0, 6),
    (5, 6),
    (5, 1),
    (1, 2),
    (6, 7),
    (2, 7),
    (2, 3),
    (7, 8),
    (3, 4),
    (3, 9),
    (8, 4),
    (8, 9),
    (4, 9),
];

/// Ten-vertex cubic graph with a 2-ladder whose single rung is `v2v7`.
pub fn fig6() -> PseudoGraph {
    build(10, &FIG6_EDGES)
}

/// `K4` with one edge subdivided: `v1` (index 0) has degree 2.
pub const K_EDGES: [(u32, u32); 7] = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (1, 4), (3, 4)];

pub fn k_gadget() -> PseudoGraph {
    build(5, &K_EDGES)
}

/// Two copies of `K` (indices `0..5` and `5..10`) joined by the bridge
/// `0 -- 5`, which is the last edge.
pub fn double_k() -> PseudoGraph {
    let mut edges: Vec<(u32, u32)> = K_EDGES.to_vec();
    edges.extend(K_EDGES.iter().map(|&(a, b)| (a + 5, b + 5)));
    edges.push((0, 5));
    build(10, &edges)
}

/// `K` bridged to a prism with one subdivided edge; 12 vertices.
pub fn k_with_prism() -> PseudoGraph {
    let mut edges: Vec<(u32, u32)> = K_EDGES.to_vec();
    // prism on 5..11 with the edge 5-6 subdivided by 11
    edges.extend_from_slice(&[(5, 11), (11, 6), (6, 7), (7, 5), (8, 9), (9, 10), (10, 8), (5, 8), (6, 9), (7, 10)]);
    edges.push((0, 11));
    build(12, &edges)
}

pub fn registry() -> Vec<NamedGraph> {
    let entry = |name, graph, note| NamedGraph { name, graph, note };
    alloc::vec![
        entry("k4", k4(), "complete graph on four vertices"),
        entry("k33", k33(), "complete bipartite graph K3,3"),
        entry("petersen", petersen(), "outer 5-cycle 0..4, inner pentagram 5..9"),
        entry("theta", theta(), "two vertices, three parallel edges"),
        entry("prism", prism(), "two triangles joined by a perfect matching"),
        entry("fig6", fig6(), "2-ladder example, vertical edge v2v7"),
        entry("double-k", double_k(), "two K gadgets joined by a bridge"),
        entry("k-prism", k_with_prism(), "K gadget bridged to a subdivided prism"),
    ]
}

pub fn by_name(name: &str) -> Option<PseudoGraph> {
    registry().into_iter().find(|n| n.name == name).map(|n| n.graph)
}

/// The lowest-id edge joining `a` and `b`. Panics when there is none.
pub fn edge(g: &PseudoGraph, a: u32, b: u32) -> EdgeId {
    g.edges_between(VertexId(a), VertexId(b))[0]
}

/// Brute-force isomorphism test for tiny simple graphs.
#[cfg(test)]
pub(crate) fn isomorphic(a: &PseudoGraph, b: &PseudoGraph) -> bool {
    fn extend(a: &PseudoGraph, b: &PseudoGraph, map: &mut Vec<VertexId>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.vertex_count() {
            return true;
        }
        let vi = VertexId(i as u32);
        for t in b.vertices() {
            if used[t.index()] || a.deg(vi) != b.deg(t) {
                continue;
            }
            let ok = (0..i).all(|j| {
                a.edges_between(vi, VertexId(j as u32)).len() == b.edges_between(t, map[j]).len()
            });
            if ok {
                map.push(t);
                used[t.index()] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[t.index()] = false;
                map.pop();
            }
        }
        false
    }
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && extend(a, b, &mut Vec::new(), &mut alloc::vec![false; b.vertex_count()])
}
