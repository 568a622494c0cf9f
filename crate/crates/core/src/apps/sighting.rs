use alloc::vec::Vec;

use crate::error::Result;
use crate::geometry::{complementary_angle, complementary_angle_surrogate, Point2, StarPolygon};
use crate::qcp::{NestedConvexFamily, QcpProblem, QuasiconvexFunction};
use crate::smooth::{minimize, SolverConfig};

/// `180° - ∠(u x w)` as an objective in `x`.
pub fn edge_angle_objective(u: Point2, w: Point2) -> QuasiconvexFunction {
    QuasiconvexFunction::new(2, move |x| {
        complementary_angle(u, w, [x[0], x[1]]).unwrap_or(f64::INFINITY)
    })
    .with_surrogate(move |x| complementary_angle_surrogate(u, w, [x[0], x[1]]).to_vec())
}

/// Smallest angle between consecutive vertices as seen from `x`.
pub fn angular_resolution(p: &StarPolygon, x: Point2) -> f64 {
    let v = p.vertices();
    let n = v.len();
    let worst = (0..n)
        .map(|i| complementary_angle(v[i], v[(i + 1) % n], x).unwrap_or(f64::INFINITY))
        .fold(f64::NEG_INFINITY, f64::max);
    180.0 - worst
}

/// Kernel point maximizing the angular resolution of the polygon's
/// vertices. Returns the resolution in degrees and the viewpoint.
pub fn sighting_point(p: &StarPolygon, config: &SolverConfig) -> Result<(f64, Point2)> {
    let v = p.vertices();
    let n = v.len();
    let objectives = (0..n)
        .map(|i| edge_angle_objective(v[i], v[(i + 1) % n]))
        .collect();
    let constraints: Vec<NestedConvexFamily> = p
        .edge_halfplanes()
        .into_iter()
        .map(NestedConvexFamily::from_halfspace)
        .collect();
    let kernel = p.kernel();
    let problem = QcpProblem::new(objectives, constraints, kernel.bounding_box(1e-9)?)?;
    let start = kernel.centroid();
    let (value, _) = minimize(&problem, &start, config)?;
    Ok((180.0 - value.level, [value.point[0], value.point[1]]))
}
