//! Exact backtracking search for normal k-edge-colorings.
//!
//! Edges are colored in breadth-first order. A new color may only be the
//! smallest unused one, which removes palette symmetry: each coloring is
//! produced once per orbit under color renaming. After every assignment,
//! each edge whose neighborhood was touched is checked:
//! - if the whole neighborhood is colored, the union must have size 3 or 5;
//! - for an edge between two degree-3 vertices with partial color sets `A`
//!   and `B` of the other edges, a poor completion needs `|A ∪ B| <= 2` and
//!   a rich one needs `A ∩ B = ∅`; if neither is possible the branch dies.

use alloc::vec;
use alloc::vec::Vec;

use super::{check_normal, status_of_union, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, PseudoGraph, VertexId};

pub const UNLIMITED: u64 = u64::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub chi: Option<u8>,
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
    pub timed_out: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Colorings visited, one per palette-renaming class.
    pub count: u64,
    pub nodes_explored: u64,
    /// The whole search space was covered.
    pub exhausted: bool,
}

struct Search {
    k: u8,
    order: Vec<EdgeId>,
    colors: Vec<u8>,
    /// Edges sharing an endpoint with the edge (itself excluded).
    neighbors: Vec<Vec<EdgeId>>,
    /// For edges between degree-3 vertices: the other two edges at each end.
    sides: Vec<Option<([EdgeId; 2], [EdgeId; 2])>>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(g: &PseudoGraph, k: u8, budget: u64) -> Self {
        let neighbors = g.edges().map(|e| g.adjacent_edges(e)).collect();
        let sides = g
            .edges()
            .map(|e| {
                let (u, v) = g.ends(e);
                if g.deg(u) != 3 || g.deg(v) != 3 || u == v {
                    return None;
                }
                let others = |w: VertexId| -> Option<[EdgeId; 2]> {
                    let rest: Vec<EdgeId> = g.incident(w).iter().copied().filter(|&f| f != e).collect();
                    (rest.len() == 2).then(|| [rest[0], rest[1]])
                };
                Some((others(u)?, others(v)?))
            })
            .collect();
        Search {
            k,
            order: bfs_edge_order(g),
            colors: vec![0; g.edge_count()],
            neighbors,
            sides,
            nodes: 0,
            budget,
        }
    }

    fn mask(&self, edges: &[EdgeId]) -> (u32, bool) {
        let mut m = 0u32;
        let mut complete = true;
        for &f in edges {
            let c = self.colors[f.index()];
            if c == 0 {
                complete = false;
            } else {
                m |= 1 << c;
            }
        }
        (m, complete)
    }

    fn feasible(&self, f: EdgeId) -> bool {
        let cf = self.colors[f.index()];
        let (near, complete) = self.mask(&self.neighbors[f.index()]);
        let union = near | if cf == 0 { 0 } else { 1 << cf };
        if union.count_ones() > 5 {
            return false;
        }
        if complete && cf != 0 {
            return status_of_union(union) != super::EdgeStatus::Invalid;
        }
        if let Some((a, b)) = self.sides[f.index()] {
            let (ma, _) = self.mask(&a);
            let (mb, _) = self.mask(&b);
            let poor_possible = (ma | mb).count_ones() <= 2;
            let rich_possible = ma & mb == 0;
            return poor_possible || rich_possible;
        }
        true
    }

    /// Depth-first search; `visit` returns `false` to stop. Returns `false`
    /// when stopped or out of budget.
    fn run(&mut self, depth: usize, max_used: u8, visit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.colors);
        }
        let e = self.order[depth];
        let (taken, _) = self.mask(&self.neighbors[e.index()]);
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if taken & (1 << c) != 0 {
                continue;
            }
            if self.nodes >= self.budget {
                return false;
            }
            self.nodes += 1;
            self.colors[e.index()] = c;
            let ok = self.feasible(e) && self.neighbors[e.index()].iter().all(|&f| self.feasible(f));
            if ok && !self.run(depth + 1, max_used.max(c), visit) {
                self.colors[e.index()] = 0;
                return false;
            }
            self.colors[e.index()] = 0;
        }
        true
    }
}

/// Edges in order of first discovery by a breadth-first walk from each
/// unvisited vertex in turn.
fn bfs_edge_order(g: &PseudoGraph) -> Vec<EdgeId> {
    let mut seen_v = vec![false; g.vertex_count()];
    let mut seen_e = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for s in g.vertices() {
        if seen_v[s.index()] {
            continue;
        }
        seen_v[s.index()] = true;
        let mut queue = alloc::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident(v) {
                if !seen_e[e.index()] {
                    seen_e[e.index()] = true;
                    order.push(e);
                }
                let w = g.other_end(e, v);
                if !seen_v[w.index()] {
                    seen_v[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn check_input(g: &PseudoGraph, k: u8) -> Result<()> {
    if g.has_loop() || g.max_degree() > 3 {
        return Err(Error::Precondition("loopless graph of maximum degree 3"));
    }
    if k == 0 || k > 30 {
        return Err(Error::Precondition("palette size between 1 and 30"));
    }
    Ok(())
}

/// Visits every normal coloring with colors `1..=k`, one per renaming class.
pub fn enumerate_normal_colorings(
    g: &PseudoGraph,
    k: u8,
    budget: u64,
    mut visit: impl FnMut(&[u8]) -> bool,
) -> Result<Enumeration> {
    check_input(g, k)?;
    let mut search = Search::new(g, k, budget);
    let mut count = 0u64;
    let mut stopped = false;
    let finished = search.run(0, 0, &mut |colors| {
        count += 1;
        if visit(colors) {
            true
        } else {
            stopped = true;
            false
        }
    });
    Ok(Enumeration { count, nodes_explored: search.nodes, exhausted: finished && !stopped })
}

/// A normal coloring with at most `k` colors, if one exists.
pub fn find_normal_coloring(g: &PseudoGraph, k: u8, budget: u64) -> Result<SolverResult> {
    let mut witness = None;
    let run = enumerate_normal_colorings(g, k, budget, |colors| {
        witness = Some(colors.to_vec());
        false
    })?;
    let witness = match witness {
        Some(colors) => {
            let c = EdgeColoring::new(k, colors);
            check_normal(g, &c, "exact solver")?;
            Some(c)
        }
        None => None,
    };
    let timed_out = witness.is_none() && !run.exhausted;
    Ok(SolverResult { chi: None, witness, nodes_explored: run.nodes_explored, timed_out })
}

/// The least `k <= k_max` admitting a normal k-coloring. `chi` stays empty
/// when the budget runs out or no such `k` exists.
pub fn exact_chi_n(g: &PseudoGraph, k_max: u8, budget: u64) -> Result<SolverResult> {
    check_input(g, k_max.max(1))?;
    let mut nodes = 0u64;
    for k in (g.max_degree().max(1) as u8)..=k_max {
        let r = find_normal_coloring(g, k, budget.saturating_sub(nodes))?;
        nodes += r.nodes_explored;
        if r.witness.is_some() {
            return Ok(SolverResult { chi: Some(k), witness: r.witness, nodes_explored: nodes, timed_out: false });
        }
        if r.timed_out {
            return Ok(SolverResult { chi: None, witness: None, nodes_explored: nodes, timed_out: true });
        }
    }
    Ok(SolverResult { chi: None, witness: None, nodes_explored: nodes, timed_out: false })
}

/// A proper 3-edge-coloring of a cubic graph, if any; on cubic graphs it
/// is automatically normal with every edge poor.
pub fn is_three_edge_colorable(g: &PseudoGraph) -> Result<Option<EdgeColoring>> {
    Ok(find_normal_coloring(g, 3, UNLIMITED)?.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::named;
    use crate::coloring::is_normal;

    #[test]
    fn small_chi_values() {
        let r = exact_chi_n(&named::k4(), 7, UNLIMITED).unwrap();
        assert_eq!(r.chi, Some(3));
        assert!(is_normal(&named::k4(), r.witness.as_ref().unwrap()).unwrap().normal);
        assert_eq!(exact_chi_n(&named::k33(), 7, UNLIMITED).unwrap().chi, Some(3));
        let p = exact_chi_n(&named::petersen(), 7, UNLIMITED).unwrap();
        assert_eq!(p.chi, Some(5));
    }

    #[test]
    fn double_k_needs_seven() {
        let g = named::double_k();
        let r = exact_chi_n(&g, 7, UNLIMITED).unwrap();
        assert_eq!(r.chi, Some(7));
    }

    #[test]
    fn three_edge_colorability() {
        assert!(is_three_edge_colorable(&named::k33()).unwrap().is_some());
        assert!(is_three_edge_colorable(&named::k4()).unwrap().is_some());
        assert!(is_three_edge_colorable(&named::petersen()).unwrap().is_none());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let r = exact_chi_n(&named::petersen(), 7, 1).unwrap();
        assert!(r.timed_out && r.chi.is_none() && r.witness.is_none());
    }

    #[test]
    fn enumeration_counts_k4() {
        // oracle: brute force over all 3^6 colorings, divided by 3! renamings
        let g = named::k4();
        let mut brute = 0;
        for code in 0..729u32 {
            let colors: Vec<u8> = (0..6).map(|i| (code / 3u32.pow(i) % 3 + 1) as u8).collect();
            let c = EdgeColoring::new(3, colors);
            if let Ok(r) = is_normal(&g, &c) {
                if r.normal {
                    brute += 1;
                }
            }
        }
        let run = enumerate_normal_colorings(&g, 3, UNLIMITED, |_| true).unwrap();
        assert!(run.exhausted);
        assert_eq!(run.count * 6, brute);
    }

    #[test]
    fn loops_rejected() {
        let g = PseudoGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert!(find_normal_coloring(&g, 3, UNLIMITED).is_err());
    }
}
