//! Grid samples of a 2D objective, for plotting level sets elsewhere.

use std::io::Write;

use quasiconvex::apps::{distance_objective, edge_angle_objective, hyperbolic_distance_objective};
use quasiconvex::geometry::{ConvexPolygon, StarPolygon};
use quasiconvex::qcp::{BoundingBox, QuasiconvexFunction};

use crate::commands::klein_points;
use crate::error::CliError;
use crate::formats::{AngleInput, BallsInput, PointsInput, PolygonInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LevelsetProblem {
    /// `points`: largest distance.
    Seb,
    /// `balls`: largest distance plus radius.
    SebBalls,
    /// `points` in the Klein disk: largest hyperbolic distance.
    SebHyp,
    /// `polygon`: largest complementary edge angle, kernel only.
    Sight,
    /// `u`, `w`: complementary angle of one segment.
    Angle,
    /// Illumination; rejected, since it is three-dimensional.
    Illum,
}

/// Pointwise maximum of some objectives over an optional feasible region.
pub struct Field {
    objectives: Vec<QuasiconvexFunction>,
    region: Option<ConvexPolygon>,
    /// Default sampling window.
    pub bounds: BoundingBox,
}

impl Field {
    /// `NaN` outside the region or where the objective is not finite.
    pub fn value(&self, x: [f64; 2]) -> f64 {
        if self.region.as_ref().is_some_and(|k| !k.contains(x, 1e-12)) {
            return f64::NAN;
        }
        let v = self
            .objectives
            .iter()
            .map(|f| f.eval(&x))
            .fold(f64::NEG_INFINITY, f64::max);
        if v.is_finite() {
            v
        } else {
            f64::NAN
        }
    }
}

fn planar(points: &[Vec<f64>]) -> Result<(), CliError> {
    if points.is_empty() {
        return Err(quasiconvex::Error::EmptyInput.into());
    }
    match points.iter().find(|p| p.len() != 2) {
        Some(p) => Err(CliError::Input(format!(
            "level sets need a 2D problem, found dimension {}",
            p.len()
        ))),
        None => Ok(()),
    }
}

/// Bounding box of `points` padded by a tenth of its largest side (at
/// least 0.1).
fn window<'a>(
    points: impl IntoIterator<Item = &'a [f64]> + Clone,
) -> Result<BoundingBox, CliError> {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in points.clone() {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let side = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    Ok(BoundingBox::around(points, 0.1 * side.max(1.0))?)
}

/// Builds the objective for `problem` from its JSON input.
pub fn field(problem: LevelsetProblem, input: &str) -> Result<Field, CliError> {
    let mut region = None;
    let (objectives, bounds) = match problem {
        LevelsetProblem::Seb => {
            let pts: PointsInput = serde_json::from_str(input)?;
            planar(&pts.points)?;
            let objs = pts
                .points
                .iter()
                .map(|p| distance_objective(p.clone(), 0.0))
                .collect();
            (objs, window(pts.points.iter().map(|p| p.as_slice()))?)
        }
        LevelsetProblem::SebBalls => {
            let balls: BallsInput = serde_json::from_str(input)?;
            let centers: Vec<Vec<f64>> = balls.balls.iter().map(|b| b.center.clone()).collect();
            planar(&centers)?;
            let objs = balls
                .balls
                .iter()
                .map(|b| distance_objective(b.center.clone(), b.radius))
                .collect();
            let reach = balls.balls.iter().map(|b| b.radius).fold(0.0, f64::max);
            let bounds = BoundingBox::around(centers.iter().map(|c| c.as_slice()), reach + 0.5)?;
            (objs, bounds)
        }
        LevelsetProblem::SebHyp => {
            let pts: PointsInput = serde_json::from_str(input)?;
            planar(&pts.points)?;
            let objs = klein_points(&pts)?
                .iter()
                .map(hyperbolic_distance_objective)
                .collect();
            (objs, BoundingBox::cube(2, 1.0)?)
        }
        LevelsetProblem::Sight => {
            let poly: PolygonInput = serde_json::from_str(input)?;
            let p = StarPolygon::new(poly.polygon.clone())?;
            let v = p.vertices();
            let objs = (0..v.len())
                .map(|i| edge_angle_objective(v[i], v[(i + 1) % v.len()]))
                .collect();
            region = Some(p.kernel().clone());
            (objs, window(poly.polygon.iter().map(|p| p.as_slice()))?)
        }
        LevelsetProblem::Angle => {
            let a: AngleInput = serde_json::from_str(input)?;
            let bounds = window([a.u.as_slice(), a.w.as_slice()])?;
            (vec![edge_angle_objective(a.u, a.w)], bounds)
        }
        LevelsetProblem::Illum => {
            return Err(CliError::Input(
                "level sets need a 2D problem, found dimension 3".into(),
            ))
        }
    };
    Ok(Field {
        objectives,
        region,
        bounds,
    })
}

/// `grid × grid` samples `(x, y, value)`, `x` varying slowest. A grid of
/// one samples the window center.
pub fn sample(field: &Field, grid: usize, bounds: &BoundingBox) -> Result<Vec<[f64; 3]>, CliError> {
    if grid == 0 {
        return Err(CliError::Input("grid must be at least 1".into()));
    }
    if bounds.dim() != 2 {
        return Err(CliError::Input("bounds must be two-dimensional".into()));
    }
    let axis = |k: usize| -> Vec<f64> {
        let (lo, hi) = (bounds.lo()[k], bounds.hi()[k]);
        if grid == 1 {
            return vec![0.5 * (lo + hi)];
        }
        (0..grid)
            .map(|i| lo + (hi - lo) * i as f64 / (grid - 1) as f64)
            .collect()
    };
    let (xs, ys) = (axis(0), axis(1));
    let mut rows = Vec::with_capacity(grid * grid);
    for &x in &xs {
        for &y in &ys {
            rows.push([x, y, field.value([x, y])]);
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[[f64; 3]], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::Input(format!("cannot write CSV: {e}"));
    w.write_record(["x", "y", "q"]).map_err(io)?;
    for r in rows {
        w.write_record(r.iter().map(|v| v.to_string()))
            .map_err(io)?;
    }
    w.flush()
        .map_err(|e| CliError::Input(format!("cannot write CSV: {e}")))
}
