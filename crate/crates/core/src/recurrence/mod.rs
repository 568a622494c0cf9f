//! Growth rates of multivariate backtracking recurrences
//! `T(x) = max_i Σ_j T(x - δ_ij)` via weight-vector quasiconvex programs.

mod analyze;
mod evaluate;
mod growth;
mod types;

pub use analyze::{
    analyze, analyze_from, recurrence_growth, start_candidates, AnalysisReport, RANDOM_RESTARTS,
};
pub use evaluate::{evaluate_recurrence, evaluate_recurrence_capped, BasePolicy, DEFAULT_CAP};
pub use growth::{case_growth, case_growth_surrogate};
pub use types::{Case, Recurrence, TargetVector};
