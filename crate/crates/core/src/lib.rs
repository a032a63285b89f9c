//! Heavy and t-wise Berge copies of graphs in uniform hypergraphs.
//!
//! The crate provides validated hypergraph and pattern-graph types, copy
//! detection with checkable witnesses, the extremal constructions with
//! exact size formulas, the blue-red symmetrization bound and an exact
//! branch-and-bound Turán solver for small parameters.

pub mod bounds;
pub mod constructions;
pub mod count;
pub mod detect;
pub mod error;
pub mod exact;
pub mod graph;
pub mod hypergraph;
pub mod matching;
pub mod random;
pub mod selftest;

pub use detect::{find_copy, verify_witness, BergeWitness, Mode};
pub use error::{Error, Result};
pub use graph::{Adjacency, PatternGraph};
pub use hypergraph::{EdgeMultiplicityMap, Hypergraph};
