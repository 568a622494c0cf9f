//! Quasiconvex functions, nested convex families, and program values.

mod family;
mod function;
mod problem;
mod value;

pub use family::{
    family_from_function, function_from_family, ContainsFn, FamilyKind, NestedConvexFamily,
};
pub use function::{pointwise_max, EvalFn, QuasiconvexFunction, SurrogateFn};
pub use problem::{BoundingBox, QcpProblem};
pub use value::{value_compare, SolutionValue};
