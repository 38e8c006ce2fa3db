//! A workbench for F-isolation numbers of graphs.
//!
//! A set D of vertices of G is F-isolating when G − N[D] contains no copy
//! of a member of the family F; ι(G, F) is the least size of such a set.
//! The crate provides the graph substrate, the extremal constructions,
//! exact containment detectors, an exact solver, a constructive algorithm
//! meeting the ⌊n/(k+1)⌋ bound for F_{0,k} ∪ F_{1,k}, and campaign drivers
//! that check the known bounds exhaustively on small graphs.

pub mod bound;
pub mod budget;
pub mod detectors;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod solver;

pub use budget::Budget;
pub use detectors::{FamilySpec, Witness, WitnessKind};
pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, VertexSet};
