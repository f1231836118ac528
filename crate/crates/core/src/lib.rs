//! Colour-critical graphs, their 2-cut decompositions, and constructive
//! extraction of long cycles, checked against exact search.
//!
//! Every routine is deterministic: neighbours are visited in ascending id
//! order and ties between equally good witnesses go to the
//! lexicographically least one.

pub mod bounds;
pub mod coloring;
pub mod connectivity;
pub mod constructors;
pub mod decomposition;
pub mod dimacs;
pub mod error;
pub mod extraction;
pub mod flow;
pub mod graph;
pub mod harness;
pub mod linkage;
pub mod oracle;
pub mod tree;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{edge, Edge, Graph, Vertex};
pub use tree::RootedTree;
pub use witness::{CycleWitness, PathWitness};
