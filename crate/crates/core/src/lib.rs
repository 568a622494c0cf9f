//! Quasiconvex programming in low dimensions.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! - [`qcp`]: quasiconvex functions, nested convex families and the
//!   conversions between them, and the lexicographic program value.
//! - [`lp`]: a randomized incremental linear programming solver, a generic
//!   LP-type engine, and an exact smallest enclosing ball built on it.
//! - [`smooth`]: the smooth quasiconvex programming descent (active set,
//!   improving direction, doubling line search).
//! - [`geometry`]: halfplane intersection, polygon kernels, subtended
//!   angles, and hyperbolic distance in the Klein model.
//! - [`apps`]: concrete programs built from the above (sighting point,
//!   enclosing balls, illumination, intersecting prefixes, mesh smoothing).
//! - [`recurrence`]: growth-rate analysis of multivariate backtracking
//!   recurrences.
#![no_std]
// `num_traits::Float` supplies the libm-backed float methods. When std is
// in the build (tests, or dependents with std features on) the inherent
// methods shadow the trait and the import looks unused.
#![allow(unused_imports)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod apps;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod lp;
pub mod qcp;
pub mod recurrence;
pub mod smooth;

pub use error::{Error, Result};
