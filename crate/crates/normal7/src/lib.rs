//! File formats, JSON reports, the corpus census and the command line for
//! `normal7-core`.

pub mod census;
pub mod cli;
pub mod formats;
pub mod report;
