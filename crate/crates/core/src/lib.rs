//! Small 3-uniform hypergraphs and the ordered shadow colorings that bound
//! their uniform Turán density.
//!
//! The crate decides membership in the palette families (vanishing, clubs,
//! spades, spades-star, five-color), verifies certificates, builds the random
//! red/blue construction, models reduced 3-graphs, and combines everything
//! into bounds.

pub mod catalog;
pub mod cli;
pub mod construct;
pub mod error;
pub mod graph;
pub mod palette;
pub mod reduced;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::{PairSet, ThreeGraph, VertexOrdering};
