#![allow(dead_code)]

//! Random cubic graphs assembled from small pieces so that 2-cuts, ladders,
//! nontrivial 3-cuts and bridges all occur.

use normal7_core::certify::named;
use normal7_core::cuts::find_bridges;
use normal7_core::{EdgeId, PseudoGraph, VertexId};
use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{RngExt, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn edge_list(g: &PseudoGraph) -> Vec<(u32, u32)> {
    g.edges()
        .map(|e| {
            let (a, b) = g.ends(e);
            (a.0, b.0)
        })
        .collect()
}

/// Connected simple cubic graph on `n` (even, >= 4) vertices from the
/// pairing model, retried until simple and connected.
pub fn random_cubic(n: usize, rng: &mut StdRng) -> PseudoGraph {
    loop {
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let edges: Vec<(u32, u32)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        let g = PseudoGraph::from_edges(n, &edges).expect("in range");
        if g.is_simple() && g.is_connected() {
            return g;
        }
    }
}

fn base_piece(rng: &mut StdRng) -> PseudoGraph {
    match rng.random_range(0..5) {
        0 => named::k4(),
        1 => named::k33(),
        2 => named::petersen(),
        3 => named::prism(),
        _ => loop {
            let g = random_cubic(2 * rng.random_range(3..=6), rng);
            if find_bridges(&g).is_empty() {
                break g;
            }
        },
    }
}

/// Disjoint union; vertices of `b` are shifted by `a.vertex_count()`.
fn union(a: &PseudoGraph, b: &PseudoGraph) -> (Vec<(u32, u32)>, u32) {
    let shift = a.vertex_count() as u32;
    let mut edges = edge_list(a);
    edges.extend(edge_list(b).into_iter().map(|(x, y)| (x + shift, y + shift)));
    (edges, shift)
}

fn without(edges: &mut Vec<(u32, u32)>, pick: usize) -> (u32, u32) {
    edges.remove(pick)
}

/// Removes one edge from each graph and reconnects the four ends through a
/// ladder with `rungs` rungs (a plain 2-cut when `rungs == 0`).
pub fn two_cut_join(a: &PseudoGraph, b: &PseudoGraph, rungs: usize, rng: &mut StdRng) -> PseudoGraph {
    let (mut edges, shift) = union(a, b);
    let (a1, b1) = without(&mut edges, rng.random_range(0..a.edge_count()));
    let i2 = a.edge_count() - 1 + rng.random_range(0..b.edge_count());
    let (a2, b2) = without(&mut edges, i2);
    debug_assert!(a2 >= shift && b2 >= shift);
    let mut n = a.vertex_count() + b.vertex_count();
    let (mut u, mut v) = (a1, b1);
    for _ in 0..rungs {
        let (nu, nv) = (n as u32, n as u32 + 1);
        n += 2;
        edges.extend([(u, nu), (v, nv), (nu, nv)]);
        (u, v) = (nu, nv);
    }
    edges.extend([(u, a2), (v, b2)]);
    PseudoGraph::from_edges(n, &edges).expect("in range")
}

/// Star product at a random vertex of each graph.
pub fn three_cut_join(a: &PseudoGraph, b: &PseudoGraph, rng: &mut StdRng) -> PseudoGraph {
    let (edges, shift) = union(a, b);
    let x = rng.random_range(0..a.vertex_count() as u32);
    let y = shift + rng.random_range(0..b.vertex_count() as u32);
    let mut kept = Vec::new();
    let (mut nx, mut ny) = (Vec::new(), Vec::new());
    for (p, q) in edges {
        match (p == x || q == x, p == y || q == y) {
            (true, _) => nx.push(if p == x { q } else { p }),
            (_, true) => ny.push(if p == y { q } else { p }),
            _ => kept.push((p, q)),
        }
    }
    ny.shuffle(rng);
    kept.extend(nx.into_iter().zip(ny));
    // drop the two hub vertices by renumbering
    let n = a.vertex_count() + b.vertex_count();
    let map = |v: u32| v - (v > x) as u32 - (v > y) as u32;
    let kept: Vec<(u32, u32)> = kept.into_iter().map(|(p, q)| (map(p), map(q))).collect();
    PseudoGraph::from_edges(n - 2, &kept).expect("in range")
}

/// A simple bridgeless cubic graph from `pieces` random pieces joined by
/// 2-cuts, ladders and 3-cuts.
pub fn random_bridgeless(pieces: usize, rng: &mut StdRng) -> PseudoGraph {
    let mut g = base_piece(rng);
    for _ in 1..pieces {
        let p = base_piece(rng);
        g = match rng.random_range(0..3) {
            0 => two_cut_join(&g, &p, 0, rng),
            1 => two_cut_join(&g, &p, rng.random_range(1..=4), rng),
            _ => three_cut_join(&g, &p, rng),
        };
    }
    debug_assert!(g.is_simple() && find_bridges(&g).is_empty());
    g
}

/// Subdivides `e` (new vertex `n`) in an edge list.
fn subdivide(edges: &mut [(u32, u32)], e: usize, n: u32) -> (u32, u32) {
    let (a, b) = edges[e];
    edges[e] = (a, n);
    (n, b)
}

/// A simple cubic graph with bridges: bridgeless blocks attached to each
/// other by bridges between subdivision vertices. Subdividing an earlier
/// bridge yields a vertex on three bridges.
pub fn random_bridged(blocks: usize, rng: &mut StdRng) -> PseudoGraph {
    let pieces = rng.random_range(1..=2);
    let mut edges = edge_list(&random_bridgeless(pieces, rng));
    let mut n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().expect("nonempty");
    for _ in 1..blocks {
        let pieces = rng.random_range(1..=2);
        let block = random_bridgeless(pieces, rng);
        let shift = n;
        let mut block_edges: Vec<(u32, u32)> = edge_list(&block).into_iter().map(|(a, b)| (a + shift, b + shift)).collect();
        n += block.vertex_count() as u32;
        let (s, t) = (n, n + 1);
        n += 2;
        let pick = rng.random_range(0..edges.len());
        let extra = subdivide(&mut edges, pick, s);
        edges.push(extra);
        let pick = rng.random_range(0..block_edges.len());
        let extra = subdivide(&mut block_edges, pick, t);
        block_edges.push(extra);
        edges.extend(block_edges);
        edges.push((s, t));
    }
    PseudoGraph::from_edges(n as usize, &edges).expect("in range")
}

/// A random pseudograph: loops and parallel edges allowed.
pub fn random_pseudo(n: usize, m: usize, rng: &mut StdRng) -> PseudoGraph {
    let mut g = PseudoGraph::new(n);
    if n == 0 {
        return g;
    }
    for _ in 0..m {
        let a = rng.random_range(0..n as u32);
        let b = rng.random_range(0..n as u32);
        g.add_edge(VertexId(a), VertexId(b)).expect("in range");
    }
    g
}

pub fn random_edge(g: &PseudoGraph, rng: &mut StdRng) -> EdgeId {
    *g.edges().collect::<Vec<_>>().choose(rng).expect("has edges")
}
