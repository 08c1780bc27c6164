//! Forcing sets for Miura-ori folding patterns.
//!
//! An `m x n` Miura-ori crease pattern divides a sheet into congruent
//! parallelograms by `m-1` straight horizontal crease lines and `n-1`
//! mirrored zig-zag lines. A mountain/valley assignment is locally
//! flat-foldable when every interior node satisfies the bird's foot
//! condition, and such assignments are in bijection with proper
//! 3-colorings of the dual grid graph with the top-left cell colored 0.
//!
//! On top of that bijection this crate provides:
//! * construction of the auxiliary planar multidigraph whose directed
//!   cycles are exactly the uniform curves of a coloring, and the
//!   linear-time forcing-set test via acyclicity ([`digraph`]);
//! * exact minimum forcing sets via minimum feedback arc set ([`fas`]);
//! * the domino-tiling and greedy `ceil(mn/2)` constructions
//!   ([`construct`]);
//! * completion of partial assignments via balanced orientations and
//!   max flow ([`complete`]);
//! * controlling-set tests via spanning connectivity ([`control`]);
//! * brute-force oracles and difference-graph diagnostics ([`oracle`]).

pub mod coloring;
pub mod complete;
pub mod construct;
pub mod control;
pub mod digraph;
mod error;
pub mod fas;
pub mod oracle;
pub mod pattern;
pub mod sample;

pub use coloring::{diagonal_coloring, GridColoring};
pub use complete::{complete_partial, Completion};
pub use construct::{domino_forcing_standard, greedy_forcing};
pub use control::is_controlling;
pub use digraph::{build_aux_digraph, build_partial_digraph, is_forcing, AuxDigraph, CycleWitness};
pub use error::Error;
pub use fas::{min_feedback_arc_set, min_forcing_set};
pub use pattern::{
    standard_assignment, CreaseId, CreaseKind, Fold, ForcingSet, GridSize, MVAssignment, NodeId,
    NodeStar, PartialMVAssignment,
};
pub use sample::sample_coloring;
