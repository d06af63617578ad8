//! Exact analysis of the `(a, b)`-biased Maker-Breaker domination game.
//!
//! Dominator and Staller alternately claim `a` and `b` unplayed vertices of a
//! graph. Dominator wins by claiming a dominating set; Staller wins by
//! claiming a whole closed neighbourhood. This crate decides winners exactly
//! on small graphs, computes the four bias thresholds, the related graph
//! invariants (local domination numbers, star partition width), and runs the
//! known constructive strategies against an optimal opponent.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod census;
pub mod game;
pub mod graph;
pub mod invariants;
pub mod local_domination;
pub mod sdr;
pub mod solver;
pub mod star_partition;
pub mod strategy;
pub mod symmetry;
pub mod thresholds;
pub mod vset;

pub use game::{GameConfig, GameError, GameState, Outcome, Player};
pub use graph::{Graph, GraphError};
pub use solver::{solve, SolveError, Solver, SolverOptions};
pub use thresholds::ThresholdValue;
pub use vset::VertexSet;
