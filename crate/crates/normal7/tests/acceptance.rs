//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances and time limits are fixed per criterion.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use normal7::formats::{parse_graph6, write_graph6};
use normal7_core::certify::{self, named, cycle_space_basis, Verdict};
use normal7_core::coloring::{coloring_from_flow, edge_status, exact_chi_n, is_normal, EdgeStatus, UNLIMITED};
use normal7_core::cuts::{
    check_ladder, edge_connectivity, find_2_edge_cuts, find_bridges, find_nontrivial_3_edge_cuts, is_3_edge_connected,
    ladder_containing, three_cut_reduction, two_cut_reduction,
};
use normal7_core::flow::{flow_three_edges_distinct, flow_two_edges_equal, verify_flow, Gf2, GroupFlow};
use normal7_core::pipeline::{flow_edge_poor, flow_two_adjacent_rich, normal7_coloring};
use normal7_core::{EdgeId, PseudoGraph, VertexId};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

/// Every corpus graph gets a verified coloring with at most seven colors
/// and no exempt edge, within 30 minutes.
fn criterion_1(corpus: &[PseudoGraph]) -> Outcome {
    let start = Instant::now();
    let mut by_order = [0usize; 15];
    let mut ok = 0;
    let mut first_bad = None;
    for (i, g) in corpus.iter().enumerate() {
        by_order[g.vertex_count()] += 1;
        let good = normal7_coloring(g).is_ok_and(|out| {
            out.coloring.exempt.is_empty()
                && out.coloring.colors_used() <= 7
                && out.coloring.colors.iter().all(|&c| (1..=7).contains(&c))
                && is_normal(g, &out.coloring).is_ok_and(|r| r.normal)
        });
        if good {
            ok += 1;
        } else {
            first_bad.get_or_insert(i + 1);
        }
    }
    // connected cubic graphs on 4, 6, ..., 14 vertices
    let expected = [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85), (14, 509)];
    let complete = expected.iter().all(|&(n, k)| by_order[n] == k);
    let t = start.elapsed();
    outcome(
        ok == corpus.len() && complete && within(t, 1800),
        format!(
            "{ok}/{} graphs verified, corpus counts complete: {complete}, first failure line {:?}, {:.2?} (limit 1800 s)",
            corpus.len(),
            first_bad,
            t
        ),
    )
}

/// The double gadget has no normal 6-coloring and has a normal 7-coloring.
fn criterion_2() -> Outcome {
    let g = named::double_k();
    let start = Instant::now();
    let r = exact_chi_n(&g, 7, UNLIMITED).expect("solver input");
    let t = start.elapsed();
    let witness_ok = r.witness.as_ref().is_some_and(|w| w.colors_used() == 7 && is_normal(&g, w).is_ok_and(|x| x.normal));
    outcome(
        r.chi == Some(7) && witness_ok && !r.timed_out && within(t, 60),
        format!("chi_n = {}, witness verified: {witness_ok}, {} nodes, {:.2?} (limit 60 s)", r.chi.map_or("none".to_string(), |k| k.to_string()), r.nodes_explored, t),
    )
}

/// Every normal 7-coloring of the double gadget has all gadget edges rich,
/// pairwise distinct gadget colors and `v4v5` repeating the bridge color.
fn criterion_3() -> Outcome {
    let c = certify::certify_gadget_k(&named::double_k(), UNLIMITED).expect("double gadget host");
    let n7 = c.count("normal_7_colorings").unwrap_or(0);
    let copies = c.count("gadget_copies").unwrap_or(0);
    let all = |key| c.count(key) == Some(n7 * copies);
    outcome(
        c.verdict == Verdict::Holds && n7 > 0 && all("all_rich") && all("pairwise_distinct") && all("bridge_repeats_v4v5"),
        format!("{} over {n7} colorings (one per renaming class) x {copies} gadget copies, counterexamples: {}", c.verdict.name(), c.counterexample.is_some() as u8),
    )
}

fn criterion_4() -> Outcome {
    let cases = [("K4", named::k4(), 3), ("K3,3", named::k33(), 3), ("Petersen", named::petersen(), 5)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, g, want) in cases {
        let start = Instant::now();
        let r = exact_chi_n(&g, 7, UNLIMITED).expect("solver input");
        let t = start.elapsed();
        pass &= r.chi == Some(want) && within(t, 10);
        parts.push(format!("{name} = {} (want {want}, {:.2?})", r.chi.map_or("none".to_string(), |k| k.to_string()), t));
    }
    outcome(pass, format!("{} (limit 10 s each)", parts.join(", ")))
}

/// Two random Hamiltonian cycles plus random extra edges and loops: any cut
/// crosses each cycle twice, so the result is 4-edge-connected.
fn four_connected_pseudographs(rng: &mut StdRng) -> Vec<PseudoGraph> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut single = PseudoGraph::new(1);
    single.add_edge(VertexId(0), VertexId(0)).expect("vertex 0");
    out.push(single);
    for n in 2..=8u32 {
        for _ in 0..40 {
            let mut edges = Vec::new();
            for _ in 0..2 {
                let mut order: Vec<u32> = (0..n).collect();
                order.shuffle(rng);
                for i in 0..n as usize {
                    edges.push((order[i], order[(i + 1) % n as usize]));
                }
            }
            for _ in 0..rng.random_range(0..=3) {
                edges.push((rng.random_range(0..n), rng.random_range(0..n)));
            }
            let g = PseudoGraph::from_edges(n as usize, &edges).expect("in range");
            if seen.insert(g.fingerprint()) {
                out.push(g);
            }
        }
    }
    out
}

fn criterion_5(rng: &mut StdRng) -> Outcome {
    let corpus = four_connected_pseudographs(rng);
    let start = Instant::now();
    let (mut pairs, mut pairs_ok, mut triples, mut triples_ok) = (0u64, 0u64, 0u64, 0u64);
    let mut not_4ec = 0;
    let good = |g: &PseudoGraph, f: &GroupFlow| verify_flow(g, f).ok() && f.is_nowhere_zero() && f.k == 2;
    for g in &corpus {
        if g.vertex_count() > 1 && edge_connectivity(g, 4) < 4 {
            not_4ec += 1;
            continue;
        }
        for e in g.edges() {
            for f in g.edges().filter(|&f| f >= e) {
                pairs += 1;
                if flow_two_edges_equal(g, e, f).is_ok_and(|fl| good(g, &fl) && fl.value(e) == fl.value(f)) {
                    pairs_ok += 1;
                }
            }
        }
        for v in g.vertices() {
            let mut at: Vec<EdgeId> = g.incident(v).to_vec();
            at.sort();
            at.dedup();
            for &e in &at {
                let rest: Vec<EdgeId> = at.iter().copied().filter(|&x| x != e).collect();
                for (i, &f) in rest.iter().enumerate() {
                    for &h in &rest[i + 1..] {
                        triples += 1;
                        let ok = flow_three_edges_distinct(g, e, f, h)
                            .is_ok_and(|fl| good(g, &fl) && fl.value(e) != fl.value(f) && fl.value(e) != fl.value(h));
                        triples_ok += ok as u64;
                    }
                }
            }
        }
    }
    outcome(
        not_4ec == 0 && pairs == pairs_ok && triples == triples_ok && pairs > 0 && triples > 0,
        format!(
            "{} pseudographs on <= 8 vertices ({not_4ec} not 4-edge-connected), equal pairs {pairs_ok}/{pairs}, distinct triples {triples_ok}/{triples}, {:.2?}",
            corpus.len(),
            start.elapsed()
        ),
    )
}

fn status_under(g: &PseudoGraph, f: &GroupFlow, e: EdgeId) -> Option<EdgeStatus> {
    if !verify_flow(g, f).ok() || f.k != 3 {
        return None;
    }
    edge_status(g, &coloring_from_flow(g, f).ok()?, e).ok()
}

fn criterion_6(corpus: &[PseudoGraph]) -> Outcome {
    let start = Instant::now();
    let (mut poor, mut poor_ok, mut rich, mut rich_ok, mut graphs, mut tec) = (0, 0, 0, 0, 0, 0);
    for g in corpus.iter().filter(|g| g.vertex_count() <= 12 && find_bridges(g).is_empty()) {
        graphs += 1;
        for e in g.edges() {
            poor += 1;
            poor_ok += flow_edge_poor(g, e).is_ok_and(|f| status_under(g, &f, e) == Some(EdgeStatus::Poor)) as u32;
        }
        if !is_3_edge_connected(g) {
            continue;
        }
        tec += 1;
        for v in g.vertices() {
            let at = g.incident(v);
            for (i, &e) in at.iter().enumerate() {
                for &f in &at[i + 1..] {
                    rich += 1;
                    let ok = flow_two_adjacent_rich(g, e, f).is_ok_and(|fl| {
                        status_under(g, &fl, e) == Some(EdgeStatus::Rich) && status_under(g, &fl, f) == Some(EdgeStatus::Rich)
                    });
                    rich_ok += ok as u32;
                }
            }
        }
    }
    outcome(
        poor == poor_ok && rich == rich_ok && graphs > 0,
        format!(
            "{graphs} bridgeless graphs: poor edges {poor_ok}/{poor}; {tec} 3-edge-connected: rich adjacent pairs {rich_ok}/{rich}, {:.2?}",
            start.elapsed()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    type Run<'a> = (&'a str, Option<u64>, Box<dyn Fn() -> certify::Certificate>);
    let runs: [Run; 3] = [
        ("k33-three-rich", Some(4096), Box::new(certify::certify_k33_three_rich)),
        ("fig6-normal6", None, Box::new(|| certify::certify_fig6_normal6(UNLIMITED).expect("fixed graph"))),
        ("fig6-flow-poor", Some(262_144), Box::new(certify::certify_fig6_flow_poor)),
    ];
    for (name, universe, run) in runs {
        let start = Instant::now();
        let c = run();
        let t = start.elapsed();
        pass &= c.verdict == Verdict::Holds && universe.is_none_or(|u| c.universe == u) && within(t, 60);
        let extra = match name {
            "fig6-normal6" => format!(", {} normal 6-colorings", c.count("normal_6_colorings").unwrap_or(0)),
            _ => format!(", {} nowhere-zero", c.count("nowhere_zero").unwrap_or(0)),
        };
        parts.push(format!("{name} {} (universe {}{extra}, {:.2?})", c.verdict.name(), c.universe, t));
    }
    outcome(pass, format!("{} (limit 60 s each)", parts.join("; ")))
}

/// Random nowhere-zero flows, drawn as random cycle-space coefficients and
/// kept when no edge is zero.
fn criterion_8(corpus: &[PseudoGraph], rng: &mut StdRng) -> Outcome {
    let bridgeless: Vec<&PseudoGraph> = corpus.iter().filter(|g| find_bridges(g).is_empty()).collect();
    let (mut drawn, mut normal) = (0, 0);
    let mut i = 0;
    while drawn < 1000 {
        let g = bridgeless[i % bridgeless.len()];
        i += 1;
        let basis = cycle_space_basis(g);
        let flow = loop {
            let mut f = GroupFlow::zero(g, 3);
            for c in &basis {
                f.add_on(c, Gf2(rng.random_range(0..8)));
            }
            if f.is_nowhere_zero() {
                break f;
            }
        };
        drawn += 1;
        let ok = verify_flow(g, &flow).ok()
            && coloring_from_flow(g, &flow).is_ok_and(|c| is_normal(g, &c).is_ok_and(|r| r.normal));
        normal += ok as u32;
    }
    outcome(normal == drawn, format!("{normal}/{drawn} random nowhere-zero flows give normal colorings over {} graphs", bridgeless.len()))
}

fn criterion_9(corpus: &[PseudoGraph], rng: &mut StdRng) -> Outcome {
    const N: usize = 10_000;
    let mut g6_ok = 0;
    for i in 0..N {
        let n = if i % 100 == 0 { rng.random_range(63..=90) } else { rng.random_range(0..=20) };
        let g = common::random_simple(n, rng.random_range(0.0..1.0), rng);
        let ok = write_graph6(&g).is_ok_and(|s| parse_graph6(&s).is_ok_and(|h| h == g));
        g6_ok += ok as usize;
    }
    let cut_rich: Vec<&PseudoGraph> = corpus
        .iter()
        .filter(|g| find_2_edge_cuts(g).is_ok_and(|c| !c.is_empty()) || !find_nontrivial_3_edge_cuts(g).is_empty())
        .collect();
    let (mut splices, mut splice_ok, mut ladders, mut ladder_ok) = (0, 0, 0, 0);
    while splices < N || ladders < N {
        let g = common::relabel(cut_rich[rng.random_range(0..cut_rich.len())], rng);
        if !find_bridges(&g).is_empty() {
            continue;
        }
        for cut in find_2_edge_cuts(&g).expect("bridgeless") {
            splices += 1;
            splice_ok += two_cut_reduction(&g, &cut.edges).is_ok_and(|t| t.splice() == g) as usize;
            ladders += 1;
            let ok = ladder_containing(&g, &cut.edges).is_ok_and(|l| {
                check_ladder(&g, &l).is_ok() && cut.edges.iter().all(|&e| l.contains(e))
            });
            ladder_ok += ok as usize;
        }
        for cut in find_nontrivial_3_edge_cuts(&g) {
            splices += 1;
            splice_ok += three_cut_reduction(&g, &cut.edges).is_ok_and(|t| t.splice() == g) as usize;
        }
    }
    outcome(
        g6_ok == N && splice_ok == splices && ladder_ok == ladders,
        format!(
            "graph6 round-trip {g6_ok}/{N}, reduction splice-back {splice_ok}/{splices}, ladder predicate {ladder_ok}/{ladders}"
        ),
    )
}

fn main() -> ExitCode {
    let corpus = common::corpus();
    let mut rng = StdRng::seed_from_u64(0x006e_6f72_6d61_6c37);
    type Criterion<'a> = (&'a str, Box<dyn FnOnce(&mut StdRng) -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("constructive upper bound on the <= 14 vertex corpus", Box::new(|_| criterion_1(&corpus))),
        ("double gadget needs exactly 7 colors", Box::new(|_| criterion_2())),
        ("gadget clauses over all normal 7-colorings", Box::new(|_| criterion_3())),
        ("known small values", Box::new(|_| criterion_4())),
        ("constrained GF(2)^2 flow lemmas", Box::new(criterion_5)),
        ("poor and rich flow lemmas on <= 12 vertices", Box::new(|_| criterion_6(&corpus))),
        ("exhaustive certificates", Box::new(|_| criterion_7())),
        ("nowhere-zero flows give normal colorings", Box::new(|r| criterion_8(&corpus, r))),
        ("round-trip and structural invariants at 10^4 instances", Box::new(|r| criterion_9(&corpus, r))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let o = run(&mut rng);
        failed += !o.pass as usize;
        println!("[{}] {} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
