//! Pseudographs with stable edge identities.
//!
//! Loops and parallel edges are allowed. Every edge carries an [`EdgeId`]
//! that is independent of its endpoints, so parallel edges stay
//! distinguishable through contractions and cut surgery. A loop appears twice
//! in the incidence list of its vertex and contributes two to its degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Simple,
    Loopless,
    Pseudo,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PseudoGraph {
    ends: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl PseudoGraph {
    pub fn new(vertices: usize) -> Self {
        PseudoGraph {
            ends: Vec::new(),
            incidence: vec![Vec::new(); vertices],
        }
    }

    /// Builds a graph on `vertices` vertices; edge `i` of the list gets `EdgeId(i)`.
    pub fn from_edges(vertices: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = PseudoGraph::new(vertices);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.incidence.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.ends.len() as u32).map(EdgeId)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.incidence.push(Vec::new());
        VertexId(self.incidence.len() as u32 - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = EdgeId(self.ends.len() as u32);
        self.ends.push((u, v));
        self.incidence[u.index()].push(e);
        self.incidence[v.index()].push(e);
        Ok(e)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        v.index() < self.incidence.len()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        e.index() < self.ends.len()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    /// Endpoints of `e`. Panics if `e` is not an edge of this graph.
    #[inline]
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e.index()]
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.check_edge(e)?;
        Ok(self.ends(e))
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    #[inline]
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.ends(e);
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.ends(e);
        a == b
    }

    pub fn incident_edges(&self, v: VertexId) -> Result<&[EdgeId]> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v.index()])
    }

    /// Incident edges of `v`, loops listed twice. Panics on an unknown vertex.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.incident_edges(v)?.len())
    }

    #[inline]
    pub fn deg(&self, v: VertexId) -> usize {
        self.incidence[v.index()].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() == 3)
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.incident(u).iter().any(|&e| self.other_end(e, u) == v)
    }

    /// Edges joining `u` and `v`, in ascending id order.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .incident(u)
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v && (u != v || self.is_loop(e)))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn class(&self) -> GraphClass {
        let mut seen = Vec::with_capacity(self.ends.len());
        let mut looped = false;
        for &(a, b) in &self.ends {
            if a == b {
                looped = true;
            }
            seen.push(if a < b { (a, b) } else { (b, a) });
        }
        if looped {
            return GraphClass::Pseudo;
        }
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            GraphClass::Loopless
        } else {
            GraphClass::Simple
        }
    }

    pub fn is_simple(&self) -> bool {
        self.class() == GraphClass::Simple
    }

    pub fn has_loop(&self) -> bool {
        self.ends.iter().any(|&(a, b)| a == b)
    }

    /// Edges adjacent to `e` (sharing an endpoint), excluding `e` itself.
    pub fn adjacent_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let (a, b) = self.ends(e);
        let mut out: Vec<EdgeId> = self
            .incident(a)
            .iter()
            .chain(self.incident(b).iter())
            .copied()
            .filter(|&f| f != e)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Connected-component label of every vertex, ignoring edges flagged in
    /// `removed` (indexed by edge). Labels are dense, in order of the
    /// smallest vertex of each component.
    pub fn component_labels(&self, removed: &[bool]) -> (usize, Vec<u32>) {
        const NONE: u32 = u32::MAX;
        let n = self.vertex_count();
        let mut label = vec![NONE; n];
        let mut count = 0u32;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != NONE {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &e in &self.incidence[v] {
                    if removed.get(e.index()).copied().unwrap_or(false) {
                        continue;
                    }
                    let w = self.other_end(e, VertexId(v as u32)).index();
                    if label[w] == NONE {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count as usize, label)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels(&[]).0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Replaces `e = uv` by the path `u - w - v` through a new vertex `w`.
    ///
    /// The id of `e` is reused for the half `u - w`; the half `w - v` gets the
    /// next free id. All other edges keep their ids and endpoints.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<(PseudoGraph, VertexId, EdgeId, EdgeId)> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return Err(Error::LoopEdge(e));
        }
        let (u, v) = self.ends(e);
        let mut g = self.clone();
        let w = g.add_vertex();
        g.ends[e.index()] = (u, w);
        let slot = g.incidence[v.index()]
            .iter()
            .position(|&f| f == e)
            .expect("incidence lists out of sync");
        g.incidence[v.index()].remove(slot);
        g.incidence[w.index()].push(e);
        let f = g.add_edge(w, v)?;
        Ok((g, w, e, f))
    }

    /// Adds a new degree-one vertex joined to `v`.
    pub fn attach_pendant(&self, v: VertexId) -> Result<(PseudoGraph, VertexId, EdgeId)> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let leaf = g.add_vertex();
        let bridge = g.add_edge(v, leaf)?;
        Ok((g, leaf, bridge))
    }

    /// Contracts every edge of `contracted`, keeping the loops and parallel
    /// edges this creates. Returns the contracted graph and, for every old
    /// edge, its image (`None` for contracted edges). Surviving edges keep
    /// their relative order.
    pub fn contract_edge_set(&self, contracted: &[EdgeId]) -> Result<(PseudoGraph, Vec<Option<EdgeId>>)> {
        let mut keep_out = vec![true; self.edge_count()];
        for &e in contracted {
            self.check_edge(e)?;
            keep_out[e.index()] = false;
        }
        // components of (V, F): remove every edge NOT in F
        let (count, label) = self.component_labels(&keep_out);
        let mut h = PseudoGraph::new(count);
        let mut image = vec![None; self.edge_count()];
        for e in self.edges() {
            if !keep_out[e.index()] {
                continue;
            }
            let (a, b) = self.ends(e);
            let id = h.add_edge(VertexId(label[a.index()]), VertexId(label[b.index()]))?;
            image[e.index()] = Some(id);
        }
        Ok((h, image))
    }

    /// Order-sensitive 64-bit FNV-1a digest of the vertex count and the
    /// normalized edge list; used to label sub-instances in traces.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u32| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        feed(self.vertex_count() as u32);
        for &(a, b) in &self.ends {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            feed(a.0);
            feed(b.0);
        }
        h
    }
}

/// A graph derived from a parent graph, with the provenance of every vertex
/// and edge. `None` marks elements created by the derivation.
#[derive(Clone, Debug)]
pub struct Mapped {
    pub graph: PseudoGraph,
    pub vertex_origin: Vec<Option<VertexId>>,
    pub edge_origin: Vec<Option<EdgeId>>,
}

impl Mapped {
    /// Child edge whose origin is the parent edge `e`.
    pub fn image_of_edge(&self, e: EdgeId) -> Option<EdgeId> {
        self.edge_origin
            .iter()
            .position(|&o| o == Some(e))
            .map(|i| EdgeId(i as u32))
    }

    pub fn image_of_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_origin
            .iter()
            .position(|&o| o == Some(v))
            .map(|i| VertexId(i as u32))
    }
}

pub(crate) struct MappedBuilder {
    mapped: Mapped,
    vertex_image: Vec<Option<VertexId>>,
}

impl MappedBuilder {
    pub(crate) fn new(parent: &PseudoGraph) -> Self {
        MappedBuilder {
            mapped: Mapped {
                graph: PseudoGraph::new(0),
                vertex_origin: Vec::new(),
                edge_origin: Vec::new(),
            },
            vertex_image: vec![None; parent.vertex_count()],
        }
    }

    /// Image of parent vertex `v`, created on first use.
    pub(crate) fn vertex(&mut self, v: VertexId) -> VertexId {
        if let Some(w) = self.vertex_image[v.index()] {
            return w;
        }
        let w = self.mapped.graph.add_vertex();
        self.mapped.vertex_origin.push(Some(v));
        self.vertex_image[v.index()] = Some(w);
        w
    }

    pub(crate) fn fresh_vertex(&mut self) -> VertexId {
        let w = self.mapped.graph.add_vertex();
        self.mapped.vertex_origin.push(None);
        w
    }

    /// Copies parent edge `e` between the images of its endpoints.
    pub(crate) fn copy_edge(&mut self, parent: &PseudoGraph, e: EdgeId) -> EdgeId {
        let (a, b) = parent.ends(e);
        let (a, b) = (self.vertex(a), self.vertex(b));
        self.edge_between(Some(e), a, b)
    }

    pub(crate) fn edge_between(&mut self, origin: Option<EdgeId>, a: VertexId, b: VertexId) -> EdgeId {
        let id = self
            .mapped
            .graph
            .add_edge(a, b)
            .expect("builder vertices always exist");
        self.mapped.edge_origin.push(origin);
        id
    }

    pub(crate) fn finish(self) -> Mapped {
        self.mapped
    }
}

/// Subgraph induced by the vertices with `keep[v]`, with provenance maps.
pub fn induced_subgraph(g: &PseudoGraph, keep: &[bool]) -> Mapped {
    let mut b = MappedBuilder::new(g);
    for v in g.vertices() {
        if keep[v.index()] {
            b.vertex(v);
        }
    }
    for e in g.edges() {
        let (x, y) = g.ends(e);
        if keep[x.index()] && keep[y.index()] {
            b.copy_edge(g, e);
        }
    }
    b.finish()
}
