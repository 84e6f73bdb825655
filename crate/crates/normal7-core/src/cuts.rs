//! Bridges, small edge-cuts, cut reductions and ladders.
//!
//! Cut enumeration is deliberately naive: every pair (or triple) of edges is
//! removed and connectivity is re-checked with a linear sweep. Instances
//! handled here have at most a few dozen edges.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Mapped, MappedBuilder, PseudoGraph, VertexId};

/// A minimal edge-cut together with the two vertex sides it separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    /// Cut edges in ascending id order.
    pub edges: Vec<EdgeId>,
    /// `side[v]` is 0 or 1. Side 0 contains the smallest vertex.
    pub side: Vec<u8>,
}

impl EdgeCut {
    pub fn side_of(&self, v: VertexId) -> u8 {
        self.side[v.index()]
    }

    pub fn vertices_on(&self, s: u8) -> Vec<VertexId> {
        self.side
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == s)
            .map(|(i, _)| VertexId(i as u32))
            .collect()
    }

    pub fn side_size(&self, s: u8) -> usize {
        self.side.iter().filter(|&&x| x == s).count()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Endpoint of cut edge `e` lying on side `s`.
    pub fn end_on(&self, g: &PseudoGraph, e: EdgeId, s: u8) -> VertexId {
        let (a, b) = g.ends(e);
        if self.side_of(a) == s {
            a
        } else {
            b
        }
    }
}

/// Checks that removing `edges` from connected `g` leaves exactly two
/// components with every removed edge running between them. That makes the
/// cut minimal: dropping any edge from it reconnects the sides.
pub fn as_minimal_cut(g: &PseudoGraph, edges: &[EdgeId]) -> Option<EdgeCut> {
    let mut removed = vec![false; g.edge_count()];
    for &e in edges {
        if !g.has_edge(e) || g.is_loop(e) {
            return None;
        }
        removed[e.index()] = true;
    }
    let (count, label) = g.component_labels(&removed);
    if count != 2 {
        return None;
    }
    for &e in edges {
        let (a, b) = g.ends(e);
        if label[a.index()] == label[b.index()] {
            return None;
        }
    }
    let mut sorted = edges.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != edges.len() {
        return None;
    }
    Some(EdgeCut {
        edges: sorted,
        side: label.iter().map(|&l| l as u8).collect(),
    })
}

/// All bridges of `g`, ascending. Loops are never bridges.
pub fn find_bridges(g: &PseudoGraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut timer = 0u32;
    let mut out = Vec::new();
    // iterative DFS: (vertex, edge used to enter, next incidence index)
    let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != u32::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
            let inc = g.incident(VertexId(v as u32));
            if *next < inc.len() {
                let e = inc[*next];
                *next += 1;
                if Some(e) == parent_edge || g.is_loop(e) {
                    continue;
                }
                let w = g.other_end(e, VertexId(v as u32)).index();
                if disc[w] == u32::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(pe);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn require_connected(g: &PseudoGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Precondition("graph must be connected"))
    }
}

/// All 2-edge-cuts of a connected bridgeless graph.
pub fn find_2_edge_cuts(g: &PseudoGraph) -> Result<Vec<EdgeCut>> {
    require_connected(g)?;
    if let Some(&b) = find_bridges(g).first() {
        return Err(Error::Bridge(b));
    }
    let edges: Vec<EdgeId> = g.edges().filter(|&e| !g.is_loop(e)).collect();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if let Some(cut) = as_minimal_cut(g, &[a, b]) {
                out.push(cut);
            }
        }
    }
    Ok(out)
}

/// Lexicographically first 2-edge-cut (loops skipped).
pub fn first_2_edge_cut(g: &PseudoGraph) -> Option<[EdgeId; 2]> {
    let edges: Vec<EdgeId> = g.edges().filter(|&e| !g.is_loop(e)).collect();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if as_minimal_cut(g, &[a, b]).is_some() {
                return Some([a, b]);
            }
        }
    }
    None
}

/// All 3-edge-cuts with at least two vertices on each side, for a
/// 3-edge-connected graph.
pub fn find_nontrivial_3_edge_cuts(g: &PseudoGraph) -> Vec<EdgeCut> {
    let edges: Vec<EdgeId> = g.edges().filter(|&e| !g.is_loop(e)).collect();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            for k in j + 1..edges.len() {
                if let Some(cut) = as_minimal_cut(g, &[edges[i], edges[j], edges[k]]) {
                    if cut.side_size(0) >= 2 && cut.side_size(1) >= 2 {
                        out.push(cut);
                    }
                }
            }
        }
    }
    out
}

/// No bridge, no 2-edge-cut, no nontrivial 3-edge-cut.
pub fn is_cyclically_4ec(g: &PseudoGraph) -> bool {
    if !g.is_connected() || !find_bridges(g).is_empty() {
        return false;
    }
    match find_2_edge_cuts(g) {
        Ok(cuts) if cuts.is_empty() => {}
        _ => return false,
    }
    find_nontrivial_3_edge_cuts(g).is_empty()
}

/// Connected, bridgeless and without 2-edge-cuts.
pub fn is_3_edge_connected(g: &PseudoGraph) -> bool {
    edge_connectivity(g, 3) >= 3
}

/// Edge connectivity of `g`, capped at `cap` (loops ignored). Graphs with
/// fewer than two vertices report `cap`; disconnected graphs report 0.
pub fn edge_connectivity(g: &PseudoGraph, cap: usize) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return cap;
    }
    (1..n)
        .map(|t| edge_disjoint_paths(g, VertexId(0), VertexId(t as u32), cap))
        .min()
        .unwrap_or(cap)
}

/// Number of edge-disjoint `s`-`t` paths, capped at `cap`.
pub fn edge_disjoint_paths(g: &PseudoGraph, s: VertexId, t: VertexId, cap: usize) -> usize {
    // flow[e]: +1 if used from ends.0 to ends.1, -1 the other way
    let mut flow = vec![0i8; g.edge_count()];
    let mut found = 0;
    while found < cap {
        let mut prev: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[s.index()] = true;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &e in g.incident(v) {
                if g.is_loop(e) {
                    continue;
                }
                let w = g.other_end(e, v);
                let forward = g.ends(e).0 == v;
                let usable = if forward { flow[e.index()] < 1 } else { flow[e.index()] > -1 };
                if usable && !seen[w.index()] {
                    seen[w.index()] = true;
                    prev[w.index()] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if !seen[t.index()] {
            break;
        }
        let mut v = t;
        while v != s {
            let e = prev[v.index()].expect("path is connected back to s");
            let u = g.other_end(e, v);
            if g.ends(e).0 == u {
                flow[e.index()] += 1;
            } else {
                flow[e.index()] -= 1;
            }
            v = u;
        }
        found += 1;
    }
    found
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    TwoCut,
    ThreeCut,
}

/// Bookkeeping for a 2-cut or 3-cut reduction: the two pieces, which piece
/// edges arise from the cut, and what is needed to splice the pieces back.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub kind: ReductionKind,
    pub cut: EdgeCut,
    /// `pieces[s]` is built from side `s` of the cut.
    pub pieces: [Mapped; 2],
    /// Per piece: (piece edge, cut edges it stands for).
    pub arising: [Vec<(EdgeId, Vec<EdgeId>)>; 2],
    /// For 3-cut reductions, the new vertex of each piece.
    pub hub: [Option<VertexId>; 2],
    original_ends: Vec<(VertexId, VertexId)>,
    original_vertices: usize,
}

impl ReductionTrace {
    /// Reconstructs the original graph from the pieces and the cut.
    pub fn splice(&self) -> PseudoGraph {
        let mut ends: Vec<Option<(VertexId, VertexId)>> = vec![None; self.original_ends.len()];
        for piece in &self.pieces {
            for e in piece.graph.edges() {
                if let Some(orig) = piece.edge_origin[e.index()] {
                    let (a, b) = piece.graph.ends(e);
                    let a = piece.vertex_origin[a.index()].expect("retained edge has retained ends");
                    let b = piece.vertex_origin[b.index()].expect("retained edge has retained ends");
                    ends[orig.index()] = Some((a, b));
                }
            }
        }
        for &e in &self.cut.edges {
            ends[e.index()] = Some(self.original_ends[e.index()]);
        }
        let mut g = PseudoGraph::new(self.original_vertices);
        for pair in ends {
            let (a, b) = pair.expect("every edge is retained or cut");
            g.add_edge(a, b).expect("vertices exist");
        }
        g
    }

    /// Piece containing the original edge `e` (not a cut edge).
    pub fn piece_with_edge(&self, e: EdgeId) -> Option<usize> {
        (0..2).find(|&s| self.pieces[s].image_of_edge(e).is_some())
    }
}

fn side_builder(g: &PseudoGraph, cut: &EdgeCut, s: u8) -> MappedBuilder {
    let mut b = MappedBuilder::new(g);
    for v in g.vertices() {
        if cut.side_of(v) == s {
            b.vertex(v);
        }
    }
    for e in g.edges() {
        if cut.contains(e) {
            continue;
        }
        let (x, _) = g.ends(e);
        if cut.side_of(x) == s {
            b.copy_edge(g, e);
        }
    }
    b
}

/// 2-cut reduction: each side keeps its edges and gains one (possibly
/// parallel) edge joining its two cut-edge endpoints.
pub fn two_cut_reduction(g: &PseudoGraph, cut_edges: &[EdgeId]) -> Result<ReductionTrace> {
    if cut_edges.len() != 2 {
        return Err(Error::NotACut { size: 2 });
    }
    let cut = as_minimal_cut(g, cut_edges).ok_or(Error::NotACut { size: 2 })?;
    let mut pieces = Vec::with_capacity(2);
    let mut arising: [Vec<(EdgeId, Vec<EdgeId>)>; 2] = [Vec::new(), Vec::new()];
    for s in 0..2u8 {
        let mut b = side_builder(g, &cut, s);
        let p = cut.end_on(g, cut.edges[0], s);
        let q = cut.end_on(g, cut.edges[1], s);
        let (p, q) = (b.vertex(p), b.vertex(q));
        let new = b.edge_between(None, p, q);
        arising[s as usize].push((new, cut.edges.clone()));
        pieces.push(b.finish());
    }
    let second = pieces.pop().expect("two pieces");
    let first = pieces.pop().expect("two pieces");
    Ok(ReductionTrace {
        kind: ReductionKind::TwoCut,
        cut,
        pieces: [first, second],
        arising,
        hub: [None, None],
        original_ends: g.edges().map(|e| g.ends(e)).collect(),
        original_vertices: g.vertex_count(),
    })
}

/// 3-cut reduction: each side is closed off by a new vertex adjacent to its
/// three cut-edge endpoints.
pub fn three_cut_reduction(g: &PseudoGraph, cut_edges: &[EdgeId]) -> Result<ReductionTrace> {
    if cut_edges.len() != 3 {
        return Err(Error::NotACut { size: 3 });
    }
    let cut = as_minimal_cut(g, cut_edges).ok_or(Error::NotACut { size: 3 })?;
    if cut.side_size(0) < 2 || cut.side_size(1) < 2 {
        return Err(Error::TrivialCut);
    }
    let mut pieces = Vec::with_capacity(2);
    let mut arising: [Vec<(EdgeId, Vec<EdgeId>)>; 2] = [Vec::new(), Vec::new()];
    let mut hub = [None, None];
    for s in 0..2u8 {
        let mut b = side_builder(g, &cut, s);
        let star = b.fresh_vertex();
        hub[s as usize] = Some(star);
        for &c in &cut.edges {
            let end = b.vertex(cut.end_on(g, c, s));
            let new = b.edge_between(None, star, end);
            arising[s as usize].push((new, vec![c]));
        }
        pieces.push(b.finish());
    }
    let second = pieces.pop().expect("two pieces");
    let first = pieces.pop().expect("two pieces");
    Ok(ReductionTrace {
        kind: ReductionKind::ThreeCut,
        cut,
        pieces: [first, second],
        arising,
        hub,
        original_ends: g.edges().map(|e| g.ends(e)).collect(),
        original_vertices: g.vertex_count(),
    })
}

/// Star product of `(g1, u1)` and `(g2, u2)`: both vertices are removed and
/// their neighbors are joined by three independent edges, pairing the
/// neighbors in incidence order. Vertices of `g1` come first.
pub fn star_product(g1: &PseudoGraph, u1: VertexId, g2: &PseudoGraph, u2: VertexId) -> Result<PseudoGraph> {
    for (g, u) in [(g1, u1), (g2, u2)] {
        let inc = g.incident_edges(u)?;
        if inc.len() != 3 || inc.iter().any(|&e| g.is_loop(e)) {
            return Err(Error::Degree { vertex: u, degree: inc.len(), expected: "3 without loops" });
        }
    }
    let remap = |v: VertexId, skip: VertexId, offset: u32| -> VertexId {
        VertexId(if v > skip { v.0 - 1 } else { v.0 } + offset)
    };
    let n1 = g1.vertex_count() as u32 - 1;
    let mut g = PseudoGraph::new(g1.vertex_count() + g2.vertex_count() - 2);
    for e in g1.edges() {
        let (a, b) = g1.ends(e);
        if a != u1 && b != u1 {
            g.add_edge(remap(a, u1, 0), remap(b, u1, 0))?;
        }
    }
    for e in g2.edges() {
        let (a, b) = g2.ends(e);
        if a != u2 && b != u2 {
            g.add_edge(remap(a, u2, n1), remap(b, u2, n1))?;
        }
    }
    for (&e1, &e2) in g1.incident(u1).iter().zip(g2.incident(u2)) {
        let a = remap(g1.other_end(e1, u1), u1, 0);
        let b = remap(g2.other_end(e2, u2), u2, n1);
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// An m-ladder: rails `u[0..=m]`, `v[0..=m]` and rungs `u[i]v[i]` for
/// `1 <= i < m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub u: Vec<VertexId>,
    pub v: Vec<VertexId>,
    /// `u_rail[i]` joins `u[i]` and `u[i+1]`.
    pub u_rail: Vec<EdgeId>,
    pub v_rail: Vec<EdgeId>,
    /// `rungs[i - 1]` joins `u[i]` and `v[i]`.
    pub rungs: Vec<EdgeId>,
}

impl Ladder {
    pub fn m(&self) -> usize {
        self.u_rail.len()
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .u_rail
            .iter()
            .chain(&self.v_rail)
            .chain(&self.rungs)
            .copied()
            .collect();
        out.sort();
        out
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.u_rail.contains(&e) || self.v_rail.contains(&e) || self.rungs.contains(&e)
    }

    /// Same ladder traversed from the other end.
    pub fn reversed(&self) -> Ladder {
        let mut l = self.clone();
        l.u.reverse();
        l.v.reverse();
        l.u_rail.reverse();
        l.v_rail.reverse();
        l.rungs.reverse();
        l
    }

    /// Same ladder with the two rails exchanged.
    pub fn swapped(&self) -> Ladder {
        Ladder {
            u: self.v.clone(),
            v: self.u.clone(),
            u_rail: self.v_rail.clone(),
            v_rail: self.u_rail.clone(),
            rungs: self.rungs.clone(),
        }
    }
}

/// Third edge at a cubic vertex, other than the two given.
fn third_edge(g: &PseudoGraph, x: VertexId, not: [EdgeId; 2]) -> Option<EdgeId> {
    let inc = g.incident(x);
    if inc.len() != 3 {
        return None;
    }
    let rest: Vec<EdgeId> = inc.iter().copied().filter(|e| !not.contains(e)).collect();
    match rest.as_slice() {
        [one] if !g.is_loop(*one) => Some(*one),
        _ => None,
    }
}

/// Grows the maximal ladder whose rail cuts include the 2-edge-cut `cut`.
///
/// Starting from `cut` as the rails between positions 0 and 1, the ladder is
/// extended at each end while the two end vertices are joined by a single
/// rung and their next rail edges again form a 2-edge-cut.
pub fn ladder_containing(g: &PseudoGraph, cut_edges: &[EdgeId]) -> Result<Ladder> {
    if cut_edges.len() != 2 {
        return Err(Error::NotACut { size: 2 });
    }
    let cut = as_minimal_cut(g, cut_edges).ok_or(Error::NotACut { size: 2 })?;
    let (a, b) = (cut.edges[0], cut.edges[1]);
    let mut l = Ladder {
        u: vec![cut.end_on(g, a, 0), cut.end_on(g, a, 1)],
        v: vec![cut.end_on(g, b, 0), cut.end_on(g, b, 1)],
        u_rail: vec![a],
        v_rail: vec![b],
        rungs: Vec::new(),
    };
    for _ in 0..2 {
        for _ in 0..g.vertex_count() {
            if !extend_forward(g, &mut l) {
                break;
            }
        }
        l = l.reversed();
    }
    Ok(l)
}

fn extend_forward(g: &PseudoGraph, l: &mut Ladder) -> bool {
    let (x, y) = (*l.u.last().expect("nonempty"), *l.v.last().expect("nonempty"));
    let between = g.edges_between(x, y);
    if x == y || between.len() != 1 {
        return false;
    }
    let rung = between[0];
    let (ux, vy) = (*l.u_rail.last().expect("nonempty"), *l.v_rail.last().expect("nonempty"));
    let (Some(nx), Some(ny)) = (third_edge(g, x, [ux, rung]), third_edge(g, y, [vy, rung])) else {
        return false;
    };
    if as_minimal_cut(g, &[nx, ny]).is_none() {
        return false;
    }
    let (x2, y2) = (g.other_end(nx, x), g.other_end(ny, y));
    if x2 == y2 || l.u.contains(&x2) || l.v.contains(&y2) || l.u.contains(&y2) || l.v.contains(&x2) {
        return false;
    }
    l.rungs.push(rung);
    l.u_rail.push(nx);
    l.v_rail.push(ny);
    l.u.push(x2);
    l.v.push(y2);
    true
}

/// Checks the defining properties of an m-ladder of `g`, returning the first
/// violated one.
pub fn check_ladder(g: &PseudoGraph, l: &Ladder) -> core::result::Result<(), &'static str> {
    let m = l.m();
    if m == 0 || l.u.len() != m + 1 || l.v.len() != m + 1 || l.v_rail.len() != m || l.rungs.len() != m - 1 {
        return Err("shape");
    }
    let mut verts: Vec<VertexId> = l.u.iter().chain(&l.v).copied().collect();
    verts.sort();
    verts.dedup();
    if verts.len() != 2 * (m + 1) {
        return Err("vertex set");
    }
    let joins = |e: EdgeId, p: VertexId, q: VertexId| {
        let (a, b) = g.ends(e);
        (a == p && b == q) || (a == q && b == p)
    };
    for i in 0..m {
        if !joins(l.u_rail[i], l.u[i], l.u[i + 1]) || !joins(l.v_rail[i], l.v[i], l.v[i + 1]) {
            return Err("edge set (rails)");
        }
    }
    for i in 1..m {
        if !joins(l.rungs[i - 1], l.u[i], l.v[i]) {
            return Err("edge set (rungs)");
        }
    }
    if g.adjacent(l.u[0], l.v[0]) || g.adjacent(l.u[m], l.v[m]) {
        return Err("end vertices adjacent");
    }
    for i in 0..m {
        if as_minimal_cut(g, &[l.u_rail[i], l.v_rail[i]]).is_none() {
            return Err("rail pair is not a 2-edge-cut");
        }
    }
    let same_side = |e1: EdgeId, e2: EdgeId, p: VertexId, q: VertexId| {
        let mut removed = vec![false; g.edge_count()];
        removed[e1.index()] = true;
        removed[e2.index()] = true;
        let (_, label) = g.component_labels(&removed);
        label[p.index()] == label[q.index()]
    };
    if !same_side(l.u_rail[0], l.v_rail[0], l.u[0], l.v[0]) {
        return Err("initial vertices split");
    }
    if !same_side(l.u_rail[m - 1], l.v_rail[m - 1], l.u[m], l.v[m]) {
        return Err("terminal vertices split");
    }
    // induced: no edge between ladder vertices beyond the ladder edges
    let ladder_edges = l.edges();
    for e in g.edges() {
        let (a, b) = g.ends(e);
        if verts.binary_search(&a).is_ok() && verts.binary_search(&b).is_ok() && ladder_edges.binary_search(&e).is_err() {
            return Err("not induced");
        }
    }
    Ok(())
}
