//! Data model and shared operations for conflict-free coloring.
//!
//! A coloring of a hypergraph is conflict-free when every edge contains a
//! vertex whose color appears exactly once inside that edge. Partial
//! colorings relax this: vertices may stay uncolored, and uncolored vertices
//! neither witness an edge nor spoil anyone else's unique color.
//!
//! For a graph, the two derived hypergraphs of interest collect the open
//! neighborhoods `N(v)` and the closed neighborhoods `N[v]`; conflict-free
//! colorings of those are what the rest of the workspace computes.
//!
//! This crate owns the instance types ([`Hypergraph`], [`Graph`],
//! [`ListAssignment`], [`PartialColoring`]), the verifier every colorer is
//! gated on, the palette partition used by the layered graph colorers, small
//! structural helpers (claw number, maximal independent sets, greedy proper
//! coloring) and the text formats shared with the command-line tool.

mod coloring;
mod error;
mod graph;
mod hypergraph;
mod lists;
mod partition;
mod structure;
mod verify;

pub mod format;

pub use coloring::{lift_partial_to_full, PartialColoring};
pub use error::{CoreError, Result};
pub use graph::{closed_neighborhood_hypergraph, open_neighborhood_hypergraph, Graph};
pub use hypergraph::{Hypergraph, HypergraphStats};
pub use lists::{Color, ListAssignment};
pub use partition::{ceil_ln, palette_partition, PalettePartition, PARTITION_RETRY_BUDGET};
pub use structure::{claw_number, greedy_proper_color, maximal_independent_set};
pub use verify::{verify, EdgeVerdict, VerifyMode, VerifyReport};
