//! Combinatorial solvers: linear programming, the LP-type engine, and the
//! smallest enclosing ball.

mod halfspace;
mod lptype;
mod seb;
mod seidel;

pub use halfspace::Halfspace;
pub use lptype::{lp_type_solve, lp_type_solve_with_stats, Basis, LpTypeOracle, LpTypeStats};
pub use seb::{
    brute_force_radius, circumball, seb_basis, seb_basis_support, smallest_enclosing_ball,
    EnclosingBall, SebOracle, CONTAINMENT_SLACK,
};
pub use seidel::{seidel_lp, MAX_LP_DIMENSION};
