use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::qcp::{BoundingBox, QcpProblem, QuasiconvexFunction};
use crate::smooth::{minimize, SolverConfig};

/// A face of the room (by its inward unit normal) and one of its vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoomFacePair {
    pub face_normal: [f64; 3],
    pub vertex: [f64; 3],
}

impl RoomFacePair {
    /// Normalizes `face_normal`; fails if it is zero.
    pub fn new(face_normal: [f64; 3], vertex: [f64; 3]) -> Result<Self> {
        let n = face_normal.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidParameter(
                "face normal must be nonzero".into(),
            ));
        }
        Ok(Self {
            face_normal: face_normal.map(|v| v / n),
            vertex,
        })
    }

    /// Light received at the vertex from a unit source at `x`:
    /// `u · (x - v) / |x - v|³`.
    pub fn intensity(&self, x: &[f64]) -> f64 {
        let r = [
            x[0] - self.vertex[0],
            x[1] - self.vertex[1],
            x[2] - self.vertex[2],
        ];
        let d = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if d == 0.0 {
            return f64::NEG_INFINITY;
        }
        let s =
            self.face_normal[0] * r[0] + self.face_normal[1] * r[1] + self.face_normal[2] * r[2];
        s / (d * d * d)
    }

    /// Gradient of [`Self::intensity`] in `x`.
    pub fn intensity_gradient(&self, x: &[f64]) -> [f64; 3] {
        let r = [
            x[0] - self.vertex[0],
            x[1] - self.vertex[1],
            x[2] - self.vertex[2],
        ];
        let d2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        if d2 == 0.0 {
            return [0.0; 3];
        }
        let d = d2.sqrt();
        let u = self.face_normal;
        let s = u[0] * r[0] + u[1] * r[1] + u[2] * r[2];
        let (d3, d5) = (d2 * d, d2 * d2 * d);
        [0, 1, 2].map(|k| u[k] / d3 - 3.0 * s * r[k] / d5)
    }

    /// Negated intensity, whose lower level sets are convex where the
    /// source lies in front of the face.
    pub fn objective(&self) -> QuasiconvexFunction {
        let (a, b) = (*self, *self);
        QuasiconvexFunction::new(3, move |x| -a.intensity(x))
            .with_surrogate(move |x| b.intensity_gradient(x).to_vec())
    }
}

/// Source position in `bbox` maximizing the least intensity over all pairs.
/// Returns that intensity and the source.
pub fn optimal_illumination(
    pairs: &[RoomFacePair],
    bbox: &BoundingBox,
    config: &SolverConfig,
) -> Result<(f64, [f64; 3])> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if bbox.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: bbox.dim(),
        });
    }
    let objectives: Vec<QuasiconvexFunction> = pairs.iter().map(|p| p.objective()).collect();
    let problem = QcpProblem::new(objectives, Vec::new(), bbox.clone())?;
    let (value, _) = minimize(&problem, &bbox.center(), config)?;
    let x = [value.point[0], value.point[1], value.point[2]];
    Ok((-value.level, x))
}
