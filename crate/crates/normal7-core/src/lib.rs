//! Normal edge-colorings of cubic graphs.
//!
//! A proper edge-coloring of a cubic graph is *normal* when every edge `uv`
//! sees either exactly three colors (poor) or exactly five colors (rich) on
//! the edges incident to `u` and `v`. This crate builds normal colorings with
//! at most seven colors for every simple cubic graph, using nowhere-zero
//! GF(2)^3 flows on bridgeless pieces and cut surgery to glue the pieces
//! together, and ships an exact backtracking solver plus exhaustive
//! certifiers used to cross-check the construction.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the census runner
//! and the command-line interface live in the `normal7` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod certify;
pub mod coloring;
pub mod cuts;
pub mod error;
pub mod flow;
pub mod graph;
pub mod matching;
pub mod pipeline;

pub use coloring::{EdgeColoring, EdgeStatus, SolverResult};
pub use error::{Error, Result};
pub use flow::{Gf2, GroupFlow};
pub use graph::{EdgeId, GraphClass, PseudoGraph, VertexId};
