//! Descent for smooth quasiconvex programs.
//!
//! Each iteration collects the surrogates of the objectives that are within
//! the active band of the maximum, finds a direction improving all of them,
//! and moves along it with a doubling-then-halving line search. Constant
//! constraint families are respected by clipping the search.

mod config;
mod direction;
mod solver;

pub use config::{DirectionMethod, SolveTrace, SolverConfig, Termination, TraceStep};
pub use direction::improving_direction;
pub use solver::{active_set, line_search, minimize};
