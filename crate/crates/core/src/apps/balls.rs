use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{klein_distance, klein_distance_gradient, KleinPoint};
use crate::linalg::{centroid, dist, sub};
use crate::qcp::{BoundingBox, QcpProblem, QuasiconvexFunction};
use crate::smooth::{minimize, SolverConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub center: Vec<f64>,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter(
                "ball radius must be nonnegative".into(),
            ));
        }
        Ok(Self { center, radius })
    }

    pub fn contains_ball(&self, other: &Ball, tol: f64) -> bool {
        dist(&self.center, &other.center) + other.radius <= self.radius + tol
    }
}

/// `x ↦ |x - p| + offset`, with the unit vector towards `p` as surrogate.
pub fn distance_objective(p: Vec<f64>, offset: f64) -> QuasiconvexFunction {
    let (q, hint, dim) = (p.clone(), p.clone(), p.len());
    QuasiconvexFunction::new(dim, move |x| dist(x, &p) + offset)
        .with_surrogate(move |x| {
            let d = dist(x, &q);
            if d > 0.0 {
                sub(&q, x).into_iter().map(|v| v / d).collect()
            } else {
                vec![0.0; x.len()]
            }
        })
        .with_minimum_hint(hint)
}

fn common_dim<'a, I: IntoIterator<Item = &'a [f64]>>(points: I) -> Result<usize> {
    let mut iter = points.into_iter();
    let d = iter.next().ok_or(Error::EmptyInput)?.len();
    if d == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    for p in iter {
        if p.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.len(),
            });
        }
    }
    Ok(d)
}

/// Smallest ball containing every input ball, by minimizing the largest
/// `|x - c_i| + r_i`.
pub fn seb_of_balls(balls: &[Ball], config: &SolverConfig) -> Result<Ball> {
    let d = common_dim(balls.iter().map(|b| b.center.as_slice()))?;
    let reach = balls.iter().map(|b| b.radius).fold(0.0, f64::max);
    let bbox = BoundingBox::around(balls.iter().map(|b| b.center.as_slice()), reach + 1.0)?;
    let objectives = balls
        .iter()
        .map(|b| distance_objective(b.center.clone(), b.radius))
        .collect();
    let problem = QcpProblem::new(objectives, vec![], bbox)?;
    let start = centroid(balls.iter().map(|b| b.center.as_slice()), d);
    let (value, _) = minimize(&problem, &start, config)?;
    Ball::new(value.point, value.level)
}

/// Hyperbolic distance to `p`, in Klein coordinates.
pub fn hyperbolic_distance_objective(p: &KleinPoint) -> QuasiconvexFunction {
    let (a, b) = (p.coords().to_vec(), p.coords().to_vec());
    QuasiconvexFunction::new(p.dim(), move |x| klein_distance(x, &a)).with_surrogate(move |x| {
        klein_distance_gradient(x, &b)
            .into_iter()
            .map(|g| -g)
            .collect()
    })
}

/// Smallest hyperbolic ball containing `points`, solved in the Klein model
/// where hyperbolic balls are Euclidean-convex.
pub fn hyperbolic_seb(points: &[KleinPoint], config: &SolverConfig) -> Result<(KleinPoint, f64)> {
    let d = common_dim(points.iter().map(|p| p.coords()))?;
    // the center lies in the convex hull of the points
    let bbox = BoundingBox::around(points.iter().map(|p| p.coords()), 1e-9)?;
    let objectives = points.iter().map(hyperbolic_distance_objective).collect();
    let problem = QcpProblem::new(objectives, vec![], bbox)?;
    let start = centroid(points.iter().map(|p| p.coords()), d);
    let (value, _) = minimize(&problem, &start, config)?;
    Ok((KleinPoint::new(value.point)?, value.level))
}
