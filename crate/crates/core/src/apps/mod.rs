//! The concrete problems: enclosing balls, sighting points, illumination,
//! intersecting prefixes and mesh smoothing.

mod balls;
mod illumination;
mod mesh;
mod prefix;
mod sighting;

pub use balls::{
    distance_objective, hyperbolic_distance_objective, hyperbolic_seb, seb_of_balls, Ball,
};
pub use illumination::{optimal_illumination, RoomFacePair};
pub use mesh::{
    arch_mesh, relocate_vertex, smooth_mesh, smooth_mesh_traced, triangle_quality, QualityMeasure,
    Relocation, TriMesh,
};
pub use prefix::{longest_intersecting_prefix, longest_valued_intersection, ValuedConvexSet};
pub use sighting::{angular_resolution, edge_angle_objective, sighting_point};
