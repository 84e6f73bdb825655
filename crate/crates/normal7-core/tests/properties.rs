//! Property tests over random graphs built from pieces.

mod common;

use normal7_core::coloring::{coloring_from_flow, edge_status, is_normal, EdgeStatus};
use normal7_core::cuts::{
    check_ladder, find_2_edge_cuts, find_bridges, find_nontrivial_3_edge_cuts, is_3_edge_connected, ladder_containing,
    three_cut_reduction, two_cut_reduction,
};
use normal7_core::flow::{nz_z23_flow, parity_subgraph_in_tree, pack_spanning_trees, verify_flow, Automorphism, Gf2, GroupFlow};
use normal7_core::pipeline::{color_degree13_graph, color_pendant_block, flow_edge_poor, flow_two_adjacent_rich, normal7_coloring, PendantBlockInput};
use normal7_core::{EdgeId, PseudoGraph};
use proptest::prelude::*;

fn status(g: &PseudoGraph, f: &GroupFlow, e: EdgeId) -> EdgeStatus {
    assert!(verify_flow(g, f).ok() && f.is_nowhere_zero());
    edge_status(g, &coloring_from_flow(g, f).unwrap(), e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn splice_restores_the_graph(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_bridgeless(2, &mut rng);
        let cuts = find_2_edge_cuts(&g).unwrap();
        for cut in &cuts {
            prop_assert_eq!(two_cut_reduction(&g, &cut.edges).unwrap().splice(), g.clone());
        }
        for cut in find_nontrivial_3_edge_cuts(&g) {
            let t = three_cut_reduction(&g, &cut.edges).unwrap();
            prop_assert!(t.pieces.iter().all(|p| p.graph.vertex_count() < g.vertex_count()));
            prop_assert_eq!(t.splice(), g.clone());
        }
    }

    #[test]
    fn ladders_satisfy_their_definition(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let a = common::random_bridgeless(1, &mut rng);
        let b = common::random_bridgeless(1, &mut rng);
        let rungs = (seed % 5) as usize;
        let g = common::two_cut_join(&a, &b, rungs, &mut rng);
        let cuts = find_2_edge_cuts(&g).unwrap();
        prop_assert!(!cuts.is_empty());
        let mut longest = 0;
        for cut in &cuts {
            let l = ladder_containing(&g, &cut.edges).unwrap();
            prop_assert_eq!(check_ladder(&g, &l), Ok(()));
            prop_assert!(cut.edges.iter().all(|&e| l.contains(e)));
            longest = longest.max(l.m());
        }
        prop_assert!(longest > rungs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn handshake_and_subdivision(n in 1usize..9, m in 0usize..20, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_pseudo(n, m, &mut rng);
        let total: usize = g.vertices().map(|v| g.deg(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        let proper = g.edges().find(|&e| !g.is_loop(e));
        if let Some(e) = proper {
            let (h, w, _, _) = g.subdivide_edge(e).unwrap();
            prop_assert_eq!(h.deg(w), 2);
            prop_assert!(g.vertices().all(|v| g.deg(v) == h.deg(v)));
            prop_assert_eq!(h.edge_count(), g.edge_count() + 1);
        }
    }

    #[test]
    fn contraction_keeps_other_edges(n in 1usize..9, m in 0usize..20, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_pseudo(n, m, &mut rng);
        let f: Vec<EdgeId> = g.edges().filter(|e| (seed >> (e.0 % 64)) & 1 == 1).collect();
        let (h, map) = g.contract_edge_set(&f).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count() - f.len());
        let mut images: Vec<EdgeId> = map.iter().flatten().copied().collect();
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), h.edge_count());
        for e in g.edges() {
            prop_assert_eq!(map[e.index()].is_none(), f.contains(&e));
        }
    }

    #[test]
    fn parity_subgraph_complement_is_even(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_bridgeless(2, &mut rng);
        let doubled = {
            let mut d = g.clone();
            for e in g.edges() {
                let (a, b) = g.ends(e);
                d.add_edge(a, b).unwrap();
            }
            d
        };
        let trees = pack_spanning_trees(&doubled, 2).unwrap();
        let a = parity_subgraph_in_tree(&doubled, &trees[0]);
        for v in doubled.vertices() {
            let in_a = doubled.incident(v).iter().filter(|e| a.contains(e)).count();
            prop_assert_eq!((doubled.deg(v) - in_a) % 2, 0);
        }
    }

    #[test]
    fn nowhere_zero_flows_color_normally(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_bridgeless(3, &mut rng);
        let f = nz_z23_flow(&g).unwrap();
        prop_assert!(verify_flow(&g, &f).ok() && f.is_nowhere_zero());
        prop_assert!(is_normal(&g, &coloring_from_flow(&g, &f).unwrap()).unwrap().normal);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn poor_edge_flows(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_bridgeless(3, &mut rng);
        for e in g.edges() {
            let f = flow_edge_poor(&g, e).unwrap();
            prop_assert_eq!(status(&g, &f, e), EdgeStatus::Poor);
        }
    }

    #[test]
    fn rich_pair_flows(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        // star products of 3-edge-connected pieces stay 3-edge-connected
        let mut g = common::random_cubic(2 * (3 + (seed % 6) as usize), &mut rng);
        while !is_3_edge_connected(&g) {
            g = common::random_cubic(g.vertex_count(), &mut rng);
        }
        let mut h = common::random_cubic(8, &mut rng);
        while !is_3_edge_connected(&h) {
            h = common::random_cubic(8, &mut rng);
        }
        let g = common::three_cut_join(&g, &h, &mut rng);
        prop_assert!(is_3_edge_connected(&g));
        for v in g.vertices() {
            let at = g.incident(v);
            for (i, &e) in at.iter().enumerate() {
                for &f in &at[i + 1..] {
                    let fl = flow_two_adjacent_rich(&g, e, f).unwrap();
                    prop_assert_eq!(status(&g, &fl, e), EdgeStatus::Rich);
                    prop_assert_eq!(status(&g, &fl, f), EdgeStatus::Rich);
                }
            }
        }
    }

    #[test]
    fn pendant_block_every_edge(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_bridgeless(3, &mut rng);
        for e in g.edges() {
            let out = color_pendant_block(PendantBlockInput { graph: &g, e }).unwrap();
            let r = is_normal(&out.graph, &out.coloring).unwrap();
            prop_assert!(r.normal);
            prop_assert_eq!(out.coloring.exempt.clone(), vec![out.bridge]);
            prop_assert!(out.coloring.colors_used() <= 7);
        }
    }

    #[test]
    fn normal7_on_bridged_graphs(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_bridged(1 + (seed % 5) as usize, &mut rng);
        let out = normal7_coloring(&g).unwrap();
        prop_assert!(out.coloring.exempt.is_empty() && out.coloring.colors_used() <= 7);
        prop_assert!(is_normal(&g, &out.coloring).unwrap().normal);
        for b in find_bridges(&g) {
            prop_assert_eq!(edge_status(&g, &out.coloring, b).unwrap(), EdgeStatus::Poor);
        }
    }
}

#[test]
fn automorphisms_are_additive() {
    let all = Automorphism::all();
    assert_eq!(all.len(), 168);
    for a in &all {
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(a.apply(Gf2(x) + Gf2(y)), a.apply(Gf2(x)) + a.apply(Gf2(y)));
            }
        }
    }
}

#[test]
fn every_case_is_reached() {
    use normal7_core::pipeline::CaseTag;
    use std::collections::BTreeSet;
    let mut seen = BTreeSet::new();
    for seed in 0..400u64 {
        let mut rng = common::rng(seed);
        let g = common::random_bridged(1 + (seed % 4) as usize, &mut rng);
        seen.extend(normal7_coloring(&g).unwrap().trace.iter().map(|s| s.tag));
        let g = common::random_bridgeless(3, &mut rng);
        let e = common::random_edge(&g, &mut rng);
        seen.extend(color_pendant_block(PendantBlockInput { graph: &g, e }).unwrap().trace.iter().map(|s| s.tag));
    }
    // the two degree-1-or-3 base shapes that never arise inside a bridged cubic graph
    let claw = PseudoGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let triangle = PseudoGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
    for g in [claw, triangle] {
        seen.extend(color_degree13_graph(&g).unwrap().trace.iter().map(|s| s.tag));
    }
    let missing: Vec<&str> = CaseTag::ALL.iter().filter(|t| !seen.contains(t)).map(|t| t.name()).collect();
    assert!(missing.is_empty(), "never reached: {missing:?}");
}
