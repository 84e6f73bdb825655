//! Edge-disjoint spanning trees via matroid partition, tree paths and
//! parity subgraphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, PseudoGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePair {
    pub t1: Vec<EdgeId>,
    pub t2: Vec<EdgeId>,
}

impl TreePair {
    pub fn swapped(self) -> TreePair {
        TreePair { t1: self.t2, t2: self.t1 }
    }
}

/// Path in the forest `members` (edges flagged true) from `a` to `b`, or
/// `None` if they lie in different trees.
fn forest_path(g: &PseudoGraph, members: &[bool], a: VertexId, b: VertexId) -> Option<Vec<EdgeId>> {
    if a == b {
        return Some(Vec::new());
    }
    let mut prev: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[a.index()] = true;
    let mut queue = VecDeque::new();
    queue.push_back(a);
    while let Some(v) = queue.pop_front() {
        for &e in g.incident(v) {
            if !members[e.index()] {
                continue;
            }
            let w = g.other_end(e, v);
            if !seen[w.index()] {
                seen[w.index()] = true;
                prev[w.index()] = Some(e);
                if w == b {
                    let mut path = Vec::new();
                    let mut x = b;
                    while x != a {
                        let pe = prev[x.index()].expect("reached from a");
                        path.push(pe);
                        x = g.other_end(pe, x);
                    }
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

/// Edges of the cycle that `e` closes with the spanning tree `tree`
/// (including `e`), in path order from one end of `e` to the other.
pub fn fundamental_cycle(g: &PseudoGraph, tree: &[EdgeId], e: EdgeId) -> Vec<EdgeId> {
    let mut members = vec![false; g.edge_count()];
    for &t in tree {
        members[t.index()] = true;
    }
    let (a, b) = g.ends(e);
    let mut cycle = forest_path(g, &members, a, b).expect("tree spans both ends");
    cycle.push(e);
    cycle
}

pub fn is_spanning_tree(g: &PseudoGraph, tree: &[EdgeId]) -> bool {
    if tree.len() + 1 != g.vertex_count() {
        return false;
    }
    let mut removed = vec![true; g.edge_count()];
    for &t in tree {
        if !g.has_edge(t) || g.is_loop(t) || !removed[t.index()] {
            return false;
        }
        removed[t.index()] = false;
    }
    g.component_labels(&removed).0 == 1
}

/// `k` pairwise edge-disjoint spanning trees of connected `g`.
pub fn pack_spanning_trees(g: &PseudoGraph, k: usize) -> Result<Vec<Vec<EdgeId>>> {
    pack_spanning_trees_avoiding(g, k, &[])
}

/// As [`pack_spanning_trees`], never using an edge of `avoid`.
///
/// Matroid partition with breadth-first (shortest) exchange paths: every
/// edge is offered in ascending id order; an edge that closes a cycle in
/// every forest starts a search whose states are edges and whose moves swap
/// an edge into a forest in place of an edge on the cycle it closes there.
pub fn pack_spanning_trees_avoiding(g: &PseudoGraph, k: usize, avoid: &[EdgeId]) -> Result<Vec<Vec<EdgeId>>> {
    if !g.is_connected() {
        return Err(Error::NoPacking);
    }
    let m = g.edge_count();
    let mut banned = vec![false; m];
    for &e in avoid {
        g.check_edge(e)?;
        banned[e.index()] = true;
    }
    let target = g.vertex_count().saturating_sub(1);
    let mut owner: Vec<Option<usize>> = vec![None; m];
    let mut members = vec![vec![false; m]; k];
    let mut sizes = vec![0usize; k];

    for s in g.edges() {
        if banned[s.index()] || g.is_loop(s) {
            continue;
        }
        if sizes.iter().all(|&c| c == target) {
            break;
        }
        // label[f] = (edge that displaces f, forest it enters)
        let mut label: Vec<Option<(EdgeId, usize)>> = vec![None; m];
        let mut visited = vec![false; m];
        visited[s.index()] = true;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        let mut found: Option<(EdgeId, usize)> = None;
        'search: while let Some(cur) = queue.pop_front() {
            let (a, b) = g.ends(cur);
            for (i, forest) in members.iter().enumerate().take(k) {
                if owner[cur.index()] == Some(i) {
                    continue;
                }
                match forest_path(g, forest, a, b) {
                    None => {
                        found = Some((cur, i));
                        break 'search;
                    }
                    Some(mut path) => {
                        path.sort();
                        for f in path {
                            if !visited[f.index()] {
                                visited[f.index()] = true;
                                label[f.index()] = Some((cur, i));
                                queue.push_back(f);
                            }
                        }
                    }
                }
            }
        }
        let Some((mut cur, mut forest)) = found else {
            continue;
        };
        loop {
            if let Some(old) = owner[cur.index()] {
                members[old][cur.index()] = false;
                sizes[old] -= 1;
            }
            owner[cur.index()] = Some(forest);
            members[forest][cur.index()] = true;
            sizes[forest] += 1;
            match label[cur.index()] {
                None => break,
                Some((p, i)) => {
                    cur = p;
                    forest = i;
                }
            }
        }
    }

    let trees: Vec<Vec<EdgeId>> = (0..k)
        .map(|i| g.edges().filter(|e| members[i][e.index()]).collect())
        .collect();
    if trees.iter().all(|t| is_spanning_tree(g, t)) {
        return Ok(trees);
    }
    if m <= 12 {
        return pack_exhaustive(g, k, &banned).ok_or(Error::NoPacking);
    }
    Err(Error::NoPacking)
}

/// Exhaustive assignment of edges to `k` trees or to none.
pub(crate) fn pack_exhaustive(g: &PseudoGraph, k: usize, banned: &[bool]) -> Option<Vec<Vec<EdgeId>>> {
    let usable: Vec<EdgeId> = g
        .edges()
        .filter(|&e| !banned.get(e.index()).copied().unwrap_or(false) && !g.is_loop(e))
        .collect();
    let mut choice = vec![0usize; usable.len()];
    loop {
        let mut trees = vec![Vec::new(); k];
        for (j, &e) in usable.iter().enumerate() {
            if choice[j] > 0 {
                trees[choice[j] - 1].push(e);
            }
        }
        if trees.iter().all(|t| is_spanning_tree(g, t)) {
            return Some(trees);
        }
        // odometer in base k + 1
        let mut j = 0;
        loop {
            if j == choice.len() {
                return None;
            }
            choice[j] += 1;
            if choice[j] <= k {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

pub fn pack_two_spanning_trees(g: &PseudoGraph) -> Result<TreePair> {
    let mut trees = pack_spanning_trees(g, 2)?;
    let t2 = trees.pop().expect("two trees");
    let t1 = trees.pop().expect("two trees");
    Ok(TreePair { t1, t2 })
}

/// A subgraph `A` of the spanning tree `tree` with
/// `deg_A(v) = deg_g(v) (mod 2)` at every vertex, by stripping leaves.
pub fn parity_subgraph_in_tree(g: &PseudoGraph, tree: &[EdgeId]) -> Vec<EdgeId> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut members = vec![false; g.edge_count()];
    for &t in tree {
        members[t.index()] = true;
    }
    // BFS order from vertex 0; children are handled before their parent
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[0] = true;
    order.push(VertexId(0));
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &e in g.incident(v) {
            if !members[e.index()] {
                continue;
            }
            let w = g.other_end(e, v);
            if !seen[w.index()] {
                seen[w.index()] = true;
                parent_edge[w.index()] = Some(e);
                order.push(w);
            }
        }
    }
    let mut need: Vec<bool> = g.vertices().map(|v| g.deg(v) % 2 == 1).collect();
    let mut out = Vec::new();
    for &v in order.iter().rev() {
        if let Some(e) = parent_edge[v.index()] {
            if need[v.index()] {
                out.push(e);
                need[v.index()] = false;
                let p = g.other_end(e, v);
                need[p.index()] = !need[p.index()];
            }
        }
    }
    out.sort();
    out
}
