#![allow(dead_code)]

use normal7::formats::parse_graph6;
use normal7_core::{PseudoGraph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, RngExt};

pub const CORPUS: &str = include_str!("../data/cubic_connected_le14.g6");

/// Connected simple cubic graphs on 4..=14 vertices, one per isomorphism
/// class, by order.
pub fn corpus() -> Vec<PseudoGraph> {
    CORPUS.lines().map(|l| parse_graph6(l).expect("corpus record")).collect()
}

/// `g` with vertices and edges renumbered at random.
pub fn relabel(g: &PseudoGraph, rng: &mut impl Rng) -> PseudoGraph {
    let mut perm: Vec<u32> = (0..g.vertex_count() as u32).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .map(|e| {
            let (a, b) = g.ends(e);
            let (a, b) = (perm[a.index()], perm[b.index()]);
            if rng.random_bool(0.5) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.shuffle(rng);
    PseudoGraph::from_edges(g.vertex_count(), &edges).expect("in range")
}

/// A simple graph on `n` vertices with each pair present with probability `p`.
pub fn random_simple(n: usize, p: f64, rng: &mut impl Rng) -> PseudoGraph {
    let mut g = PseudoGraph::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                g.add_edge(VertexId(i as u32), VertexId(j as u32)).expect("in range");
            }
        }
    }
    g
}
