//! Edge-colorings, poor/rich status and the normality check.
//!
//! Colors are small positive integers; `0` marks an uncolored edge. A color
//! set is a bitmask with bit `c` for color `c`, so colors stay below 32.
//! Status follows the literal union rule at every edge, whatever the
//! endpoint degrees: poor means three colors around the edge, rich five.

mod solver;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flow::GroupFlow;
use crate::graph::{EdgeId, PseudoGraph, VertexId};

pub use solver::{
    enumerate_normal_colorings, exact_chi_n, find_normal_coloring, is_three_edge_colorable, Enumeration, SolverResult,
    UNLIMITED,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    /// Palette size; every color lies in `1..=k`.
    pub k: u8,
    pub colors: Vec<u8>,
    /// Edges whose status is not required to be poor or rich.
    pub exempt: Vec<EdgeId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    Poor,
    Rich,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalReport {
    pub normal: bool,
    pub statuses: Vec<EdgeStatus>,
}

impl NormalReport {
    pub fn first_failure(&self, c: &EdgeColoring) -> Option<EdgeId> {
        self.statuses
            .iter()
            .enumerate()
            .map(|(i, &s)| (EdgeId(i as u32), s))
            .find(|&(e, s)| s == EdgeStatus::Invalid && !c.exempt.contains(&e))
            .map(|(e, _)| e)
    }
}

impl EdgeColoring {
    pub fn new(k: u8, colors: Vec<u8>) -> Self {
        EdgeColoring { k, colors, exempt: Vec::new() }
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> u8 {
        self.colors[e.index()]
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.colors
            .iter()
            .filter(|&&c| c != 0)
            .fold(0u32, |m, &c| m | 1 << c)
            .count_ones() as usize
    }

    /// Recolors by `map` (indexed by old color).
    pub fn renamed(&self, map: impl Fn(u8) -> u8) -> EdgeColoring {
        EdgeColoring {
            k: self.k,
            colors: self.colors.iter().map(|&c| if c == 0 { 0 } else { map(c) }).collect(),
            exempt: self.exempt.clone(),
        }
    }
}

/// Bitmask of the colors at `v`.
pub fn color_set(g: &PseudoGraph, c: &EdgeColoring, v: VertexId) -> Result<u32> {
    let mut mask = 0u32;
    for &e in g.incident_edges(v)? {
        let col = c.color(e);
        if col == 0 {
            return Err(Error::Uncolored(e));
        }
        mask |= 1 << col;
    }
    Ok(mask)
}

/// Status from the size of the color union around an edge.
#[inline]
pub fn status_of_union(mask: u32) -> EdgeStatus {
    match mask.count_ones() {
        3 => EdgeStatus::Poor,
        5 => EdgeStatus::Rich,
        _ => EdgeStatus::Invalid,
    }
}

pub fn edge_status(g: &PseudoGraph, c: &EdgeColoring, e: EdgeId) -> Result<EdgeStatus> {
    let (u, v) = g.endpoints(e)?;
    Ok(status_of_union(color_set(g, c, u)? | color_set(g, c, v)?))
}

/// Edges sharing an endpoint colored differently, and every edge colored.
pub fn check_proper(g: &PseudoGraph, c: &EdgeColoring) -> Result<()> {
    if c.colors.len() != g.edge_count() {
        return Err(Error::Precondition("coloring length differs from edge count"));
    }
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                if c.color(a) != 0 && c.color(a) == c.color(b) {
                    return Err(Error::Improper(a, b));
                }
            }
        }
    }
    match g.edges().find(|&e| c.color(e) == 0) {
        Some(e) => Err(Error::Uncolored(e)),
        None => Ok(()),
    }
}

/// Normality of a proper coloring. Improper input is an error, not a
/// non-normal report.
pub fn is_normal(g: &PseudoGraph, c: &EdgeColoring) -> Result<NormalReport> {
    check_proper(g, c)?;
    let statuses: Vec<EdgeStatus> = g
        .edges()
        .map(|e| edge_status(g, c, e))
        .collect::<Result<_>>()?;
    let normal = statuses
        .iter()
        .enumerate()
        .all(|(i, &s)| s != EdgeStatus::Invalid || c.exempt.contains(&EdgeId(i as u32)));
    Ok(NormalReport { normal, statuses })
}

/// [`is_normal`] plus a palette bound, as a hard gate.
pub(crate) fn check_normal(g: &PseudoGraph, c: &EdgeColoring, stage: &'static str) -> Result<()> {
    let fail = |detail| Err(Error::Verification { stage, detail });
    match is_normal(g, c) {
        Err(err) => fail(alloc::format!("{err}")),
        Ok(r) if !r.normal => fail(alloc::format!("edge {} is neither poor nor rich", r.first_failure(c).expect("not normal"))),
        Ok(_) if c.colors.iter().any(|&x| x > c.k) => fail(alloc::format!("color above palette size {}", c.k)),
        Ok(_) => Ok(()),
    }
}

/// The seven nonzero GF(2)^3 values used as colors.
pub fn coloring_from_flow(g: &PseudoGraph, f: &GroupFlow) -> Result<EdgeColoring> {
    if let Some(i) = f.values.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroFlow(EdgeId(i as u32)));
    }
    if g.has_loop() || g.max_degree() > 3 {
        return Err(Error::Precondition("loopless graph of maximum degree 3"));
    }
    Ok(EdgeColoring::new(7, f.values.iter().map(|v| v.0).collect()))
}

/// Status of every edge in the coloring induced by a flow.
pub fn flow_status(g: &PseudoGraph, f: &GroupFlow, e: EdgeId) -> EdgeStatus {
    let (u, v) = g.ends(e);
    let mask = g
        .incident(u)
        .iter()
        .chain(g.incident(v))
        .fold(0u32, |m, &h| m | 1 << f.value(h).0);
    status_of_union(mask)
}

/// Statuses as `P`/`R`/`-` characters, for traces.
pub fn status_string(statuses: &[EdgeStatus]) -> alloc::string::String {
    statuses
        .iter()
        .map(|s| match s {
            EdgeStatus::Poor => 'P',
            EdgeStatus::Rich => 'R',
            EdgeStatus::Invalid => '-',
        })
        .collect()
}
