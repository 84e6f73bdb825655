//! Flows with values in GF(2)^2 and GF(2)^3.
//!
//! Over GF(2) a flow needs no orientation: the values on the edge-ends at a
//! vertex must sum to zero. A loop meets its vertex twice and therefore
//! cancels, so loop values are unconstrained.

mod auto;
mod lemmas;
mod trees;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, PseudoGraph, VertexId};

pub use auto::Automorphism;
pub use lemmas::{
    flow_from_even_subgraphs, flow_three_edges_distinct, flow_two_adjacent_distinct, flow_two_edges_equal,
    nz_flow_from_tree_pair, nz_z23_flow,
};
pub use trees::{
    fundamental_cycle, is_spanning_tree, pack_spanning_trees, pack_spanning_trees_avoiding, pack_two_spanning_trees,
    parity_subgraph_in_tree, TreePair,
};

/// An element of GF(2)^k stored as a bit pattern.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2(pub u8);

pub const X: Gf2 = Gf2(0b001);
pub const Y: Gf2 = Gf2(0b010);
pub const Z: Gf2 = Gf2(0b100);
pub const ZERO: Gf2 = Gf2(0);

impl Gf2 {
    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The coordinate carried by `z` (the top bit for k = 3).
    #[inline]
    pub fn leading(self) -> bool {
        self.0 & Z.0 != 0
    }

    /// All nonzero elements of GF(2)^k in increasing order.
    pub fn nonzero(k: u8) -> impl Iterator<Item = Gf2> {
        (1..(1u8 << k)).map(Gf2)
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    // addition in GF(2)^k is exclusive-or
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf2 {
    #[allow(clippy::suspicious_op_assign_impl)]
    #[inline]
    fn add_assign(&mut self, rhs: Gf2) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (bit, name) in [(X, "x"), (Y, "y"), (Z, "z")] {
            if self.0 & bit.0 != 0 {
                if !first {
                    f.write_str("+")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Edge values in GF(2)^k, indexed by `EdgeId`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFlow {
    pub k: u8,
    pub values: Vec<Gf2>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlowReport {
    pub conserving: bool,
    pub nowhere_zero: bool,
    pub violation: Option<VertexId>,
}

impl FlowReport {
    pub fn ok(&self) -> bool {
        self.conserving && self.nowhere_zero
    }
}

impl GroupFlow {
    pub fn zero(g: &PseudoGraph, k: u8) -> Self {
        GroupFlow { k, values: vec![ZERO; g.edge_count()] }
    }

    #[inline]
    pub fn value(&self, e: EdgeId) -> Gf2 {
        self.values[e.index()]
    }

    #[inline]
    pub fn set(&mut self, e: EdgeId, v: Gf2) {
        self.values[e.index()] = v;
    }

    /// Adds `v` on every edge of `edges`.
    pub fn add_on(&mut self, edges: &[EdgeId], v: Gf2) {
        for &e in edges {
            self.values[e.index()] += v;
        }
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    pub fn apply(&self, a: &Automorphism) -> GroupFlow {
        GroupFlow {
            k: 3.max(self.k),
            values: self.values.iter().map(|&v| a.apply(v)).collect(),
        }
    }

    /// Values at the ends of `v`'s incident edges, loops twice.
    pub fn values_at(&self, g: &PseudoGraph, v: VertexId) -> Vec<Gf2> {
        g.incident(v).iter().map(|&e| self.value(e)).collect()
    }

    /// Values of the edges at `v` other than `e` (one entry per edge-end).
    pub fn others_at(&self, g: &PseudoGraph, v: VertexId, e: EdgeId) -> Vec<Gf2> {
        let mut skipped = false;
        g.incident(v)
            .iter()
            .filter(|&&f| {
                if f == e && !skipped {
                    skipped = true;
                    false
                } else {
                    true
                }
            })
            .map(|&f| self.value(f))
            .collect()
    }

    /// Widens a GF(2)^2 flow to GF(2)^3 (the `z` coordinate is zero).
    pub fn widen(&self) -> GroupFlow {
        GroupFlow { k: 3, values: self.values.clone() }
    }
}

pub fn verify_flow(g: &PseudoGraph, f: &GroupFlow) -> FlowReport {
    let mut violation = None;
    if f.values.len() == g.edge_count() {
        for v in g.vertices() {
            let sum = g.incident(v).iter().fold(ZERO, |s, &e| s + f.value(e));
            if !sum.is_zero() {
                violation = Some(v);
                break;
            }
        }
    } else {
        violation = g.vertices().next();
    }
    let mask = !((1u16 << f.k) - 1) as u8;
    FlowReport {
        conserving: violation.is_none() && f.values.iter().all(|v| v.0 & mask == 0),
        nowhere_zero: f.is_nowhere_zero(),
        violation,
    }
}

/// `verify_flow` as a hard gate.
pub(crate) fn check_nz(g: &PseudoGraph, f: &GroupFlow, stage: &'static str) -> Result<()> {
    let r = verify_flow(g, f);
    if r.ok() {
        return Ok(());
    }
    let detail = match r.violation {
        Some(v) => alloc::format!("conservation fails at {v}"),
        None => alloc::string::String::from("zero value present"),
    };
    Err(Error::Verification { stage, detail })
}
