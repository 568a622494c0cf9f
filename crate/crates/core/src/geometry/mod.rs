//! Planar polygons, subtended angles and the Klein model.

mod angle;
mod hyperbolic;
mod polygon;

pub use angle::{complementary_angle, complementary_angle_surrogate, subtended_angle};
pub use hyperbolic::{hyperbolic_distance, klein_distance, klein_distance_gradient, KleinPoint};
pub use polygon::{
    cross, halfplane_intersection, polygon_kernel, signed_area2, ConvexPolygon, Point2, StarPolygon,
};
