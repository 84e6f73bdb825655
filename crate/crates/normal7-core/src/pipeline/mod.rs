//! Constructive normal 7-edge-colorings.
//!
//! - [`flow_edge_poor`], [`flow_two_adjacent_rich`], [`flow_edge_rich`]:
//!   GF(2)^3 flows with prescribed poor/rich edges, by recursion on 2-cuts
//!   and nontrivial 3-cuts down to cyclically 4-edge-connected pieces, where
//!   a perfect matching is contracted and a GF(2)^2 flow is lifted.
//! - [`color_pendant_block`]: a bridgeless cubic graph with one edge
//!   subdivided and a pendant edge at the subdivision vertex.
//! - [`color_degree13_graph`]: degrees 1 and 3, every bridge pendant.
//! - [`normal7_coloring`]: any simple cubic graph, glued over its bridges.
//!
//! Every result is verified before it is returned, and every recursive call
//! is on a graph with fewer vertices. The steps taken are recorded as a
//! [`TraceStep`] list.

mod degree13;
mod glue;
mod lemmas;
mod pendant;

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::PseudoGraph;

pub use degree13::{color_degree13_graph, Degree13Coloring};
pub use glue::{normal7_coloring, GlueForest, GlueNode, Normal7Coloring};
pub use lemmas::{flow_edge_poor, flow_edge_rich, flow_two_adjacent_rich};
pub use pendant::{color_pendant_block, PendantBlockInput, PendantColoring};

/// The case of the construction taken at one step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// 3-edge-connected block, `{t1, t2}` disjoint from `{x, y, z}`.
    ThreeEcCase1,
    /// 3-edge-connected block, `{t1, t2}` meets `{x, y, z}`.
    ThreeEcCase2,
    /// The subdivided edge has a parallel twin.
    Digon,
    /// Some ladder misses the subdivided edge.
    LadderAvoidsE,
    /// The subdivided edge is a ladder edge at one of its ends.
    InitialEdge,
    /// The subdivided edge is an inner rail edge of a ladder.
    Horizontal,
    /// The subdivided edge is a rung of a ladder.
    Vertical,
    ManyPendantT0,
    ManyPendantT1,
    ManyPendantT2,
    /// A triangle with a pendant edge at each vertex.
    Triangle,
    /// A vertex with three pendant edges.
    Claw,
    /// Two nonadjacent pendant-bearing vertices merged into one edge.
    Merge,
    /// A component palette renamed while gluing across bridges.
    Glue,
}

impl CaseTag {
    pub const ALL: [CaseTag; 14] = [
        CaseTag::ThreeEcCase1,
        CaseTag::ThreeEcCase2,
        CaseTag::Digon,
        CaseTag::LadderAvoidsE,
        CaseTag::InitialEdge,
        CaseTag::Horizontal,
        CaseTag::Vertical,
        CaseTag::ManyPendantT0,
        CaseTag::ManyPendantT1,
        CaseTag::ManyPendantT2,
        CaseTag::Triangle,
        CaseTag::Claw,
        CaseTag::Merge,
        CaseTag::Glue,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::ThreeEcCase1 => "ThreeEC_Case1",
            CaseTag::ThreeEcCase2 => "ThreeEC_Case2",
            CaseTag::Digon => "Digon",
            CaseTag::LadderAvoidsE => "LadderAvoidsE",
            CaseTag::InitialEdge => "InitialEdge",
            CaseTag::Horizontal => "Horizontal",
            CaseTag::Vertical => "Vertical",
            CaseTag::ManyPendantT0 => "ManyPendant_t0",
            CaseTag::ManyPendantT1 => "ManyPendant_t1",
            CaseTag::ManyPendantT2 => "ManyPendant_t2",
            CaseTag::Triangle => "Triangle",
            CaseTag::Claw => "Claw",
            CaseTag::Merge => "Merge",
            CaseTag::Glue => "Glue",
        }
    }

    pub fn from_name(s: &str) -> Option<CaseTag> {
        CaseTag::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// Palette permutation: `perm[c - 1]` is the new name of color `c`.
pub type Palette = [u8; 7];

pub const IDENTITY_PALETTE: Palette = [1, 2, 3, 4, 5, 6, 7];

/// One step of a construction: the case, the instance it was applied to
/// and the palette renaming it applied to a sub-result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub tag: CaseTag,
    pub fingerprint: u64,
    pub permutation: Palette,
}

impl TraceStep {
    pub(crate) fn new(tag: CaseTag, g: &PseudoGraph) -> Self {
        TraceStep { tag, fingerprint: g.fingerprint(), permutation: IDENTITY_PALETTE }
    }

    pub(crate) fn renamed(tag: CaseTag, g: &PseudoGraph, permutation: Palette) -> Self {
        TraceStep { tag, fingerprint: g.fingerprint(), permutation }
    }
}

pub fn trace_tags(trace: &[TraceStep]) -> String {
    let names: Vec<&str> = trace.iter().map(|s| s.tag.name()).collect();
    names.join(" > ")
}

/// Recursive calls must shrink the instance.
pub(crate) fn check_shrinks(parent: &PseudoGraph, child: &PseudoGraph, stage: &'static str) -> Result<()> {
    if child.vertex_count() < parent.vertex_count() {
        Ok(())
    } else {
        Err(Error::Verification {
            stage,
            detail: alloc::format!(
                "sub-instance has {} vertices, parent {}",
                child.vertex_count(),
                parent.vertex_count()
            ),
        })
    }
}

/// The palette permutation sending each `from` to its `to`, lowest unused
/// targets filling the rest. Conflicting pairs are an error.
pub(crate) fn palette_from_pairs(pairs: &[(u8, u8)]) -> Result<Palette> {
    let mut perm = [0u8; 7];
    let mut used = [false; 8];
    for &(from, to) in pairs {
        if !(1..=7).contains(&from) || !(1..=7).contains(&to) {
            return Err(Error::Precondition("palette colors lie in 1..=7"));
        }
        let slot = &mut perm[from as usize - 1];
        if *slot == to {
            continue;
        }
        if *slot != 0 || used[to as usize] {
            return Err(Error::Verification {
                stage: "palette",
                detail: alloc::format!("color {from} cannot be sent to {to}"),
            });
        }
        *slot = to;
        used[to as usize] = true;
    }
    let mut free = (1..=7u8).filter(|&c| !used[c as usize]);
    for slot in perm.iter_mut() {
        if *slot == 0 {
            *slot = free.next().expect("as many free targets as free sources");
        }
    }
    Ok(perm)
}

#[inline]
pub(crate) fn rename(perm: &Palette, c: u8) -> u8 {
    if c == 0 {
        0
    } else {
        perm[c as usize - 1]
    }
}
