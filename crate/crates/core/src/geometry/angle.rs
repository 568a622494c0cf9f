use num_traits::Float;

use super::polygon::Point2;
use crate::error::{Error, Result};

const DEG: f64 = 180.0 / core::f64::consts::PI;

/// `180° - ∠uvw`: small when segment `uw` looks large from `v`.
pub fn complementary_angle(u: Point2, w: Point2, v: Point2) -> Result<f64> {
    if u == v || w == v {
        return Err(Error::Degenerate(
            "viewpoint coincides with an endpoint".into(),
        ));
    }
    Ok(180.0 - subtended_angle(u, w, v))
}

/// The angle at `v` between `u - v` and `w - v`, in degrees.
pub fn subtended_angle(u: Point2, w: Point2, v: Point2) -> f64 {
    let a = [u[0] - v[0], u[1] - v[1]];
    let b = [w[0] - v[0], w[1] - v[1]];
    let cross = a[0] * b[1] - a[1] * b[0];
    let dot = a[0] * b[0] + a[1] * b[1];
    cross.abs().atan2(dot) * DEG
}

/// Negated gradient of [`complementary_angle`] with respect to `v`, i.e. the
/// gradient of the subtended angle (degrees per unit length).
pub fn complementary_angle_surrogate(u: Point2, w: Point2, v: Point2) -> [f64; 2] {
    let grad_dir = |p: Point2| {
        let (dx, dy) = (p[0] - v[0], p[1] - v[1]);
        let r2 = dx * dx + dy * dy;
        [dy / r2, -dx / r2]
    };
    let (gu, gw) = (grad_dir(u), grad_dir(w));
    let cross = (u[0] - v[0]) * (w[1] - v[1]) - (u[1] - v[1]) * (w[0] - v[0]);
    let sign = if cross >= 0.0 { 1.0 } else { -1.0 };
    [sign * (gw[0] - gu[0]) * DEG, sign * (gw[1] - gu[1]) * DEG]
}
