//! Well-spread perfect matchings in 3-edge-connected cubic graphs.
//!
//! A perfect matching of a bridgeless cubic graph meets every 3-edge cut
//! in one or three edges; it is *well-spread* when the answer is one for
//! every such cut. This crate builds the tree of 3-edge cuts (`cuts`),
//! computes a well-spread perfect matching by decomposing along that tree
//! (`spread`), and uses it to produce two perfect matchings whose
//! intersection is at most n/10 (`pair`).

pub mod bench;
pub mod cuts;
pub mod gen;
pub mod graph;
pub mod io;
pub mod matching;
pub mod pair;
pub mod spread;

mod cutscan;
mod dsu;
