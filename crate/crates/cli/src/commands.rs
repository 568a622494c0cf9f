//! One function per subcommand, from parsed input to output document.

use std::thread;

use quasiconvex::apps::{
    hyperbolic_seb, longest_intersecting_prefix, longest_valued_intersection, optimal_illumination,
    seb_of_balls, sighting_point, smooth_mesh_traced, Ball, QualityMeasure, RoomFacePair, TriMesh,
    ValuedConvexSet,
};
use quasiconvex::geometry::{KleinPoint, StarPolygon};
use quasiconvex::lp::{smallest_enclosing_ball, Halfspace};
use quasiconvex::qcp::BoundingBox;
use quasiconvex::recurrence::{
    analyze_from, recurrence_growth, start_candidates, Recurrence, TargetVector,
};
use quasiconvex::smooth::{SolverConfig, Termination};

use crate::dsl::parse_recurrence;
use crate::error::CliError;
use crate::formats::*;

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
    pub seed: u64,
    /// Worker threads for the restart sweep of the recurrence analyzer.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_iterations: 10_000,
            seed: 0,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn solver(&self) -> SolverConfig {
        SolverConfig {
            max_iterations: self.max_iterations,
            rng_seed: self.seed,
            ..SolverConfig::with_tolerance(self.tolerance)
        }
    }
}

pub fn seb(input: &PointsInput, cfg: &RunConfig) -> Result<SebOutput, CliError> {
    let ball = smallest_enclosing_ball(&input.points, cfg.seed)?;
    Ok(SebOutput {
        center: ball.center,
        radius: ball.radius,
        basis: ball.basis,
    })
}

pub fn balls(input: &BallsInput) -> Result<Vec<Ball>, CliError> {
    input
        .balls
        .iter()
        .map(|b| Ok(Ball::new(b.center.clone(), b.radius)?))
        .collect()
}

pub fn seb_balls(input: &BallsInput, cfg: &RunConfig) -> Result<BallOutput, CliError> {
    let ball = seb_of_balls(&balls(input)?, &cfg.solver())?;
    Ok(BallOutput {
        center: ball.center,
        radius: ball.radius,
    })
}

pub fn klein_points(input: &PointsInput) -> Result<Vec<KleinPoint>, CliError> {
    input
        .points
        .iter()
        .map(|p| Ok(KleinPoint::new(p.clone())?))
        .collect()
}

pub fn seb_hyp(input: &PointsInput, cfg: &RunConfig) -> Result<BallOutput, CliError> {
    let (center, radius) = hyperbolic_seb(&klein_points(input)?, &cfg.solver())?;
    Ok(BallOutput {
        center: center.coords().to_vec(),
        radius,
    })
}

pub fn sight(input: &PolygonInput, cfg: &RunConfig) -> Result<SightOutput, CliError> {
    let polygon = StarPolygon::new(input.polygon.clone())?;
    let (resolution, viewpoint) = sighting_point(&polygon, &cfg.solver())?;
    Ok(SightOutput {
        viewpoint,
        resolution,
    })
}

pub fn pairs(input: &IlluminationInput) -> Result<Vec<RoomFacePair>, CliError> {
    input
        .pairs
        .iter()
        .map(|p| Ok(RoomFacePair::new(p.face_normal, p.vertex)?))
        .collect()
}

pub fn illum(input: &IlluminationInput, cfg: &RunConfig) -> Result<IlluminationOutput, CliError> {
    let (intensity, source) =
        optimal_illumination(&pairs(input)?, &input.bbox.to_box()?, &cfg.solver())?;
    Ok(IlluminationOutput { source, intensity })
}

pub fn lip(input: &LipInput) -> Result<LipOutput, CliError> {
    let sets = input
        .sets
        .iter()
        .map(|s| s.iter().map(HalfspaceSpec::to_halfspace).collect())
        .collect::<Result<Vec<Vec<Halfspace>>, CliError>>()?;
    let dim = sets.iter().flatten().map(|h| h.dim()).next().unwrap_or(2);
    let bbox = match &input.bbox {
        Some(b) => b.to_box()?,
        None => BoundingBox::cube(dim, 1e6)?,
    };
    match &input.values {
        None => {
            let (length, witness) = longest_intersecting_prefix(&sets, &bbox)?;
            Ok(LipOutput::Prefix { length, witness })
        }
        Some(values) => {
            if values.len() != sets.len() {
                return Err(CliError::Input(format!(
                    "{} values for {} sets",
                    values.len(),
                    sets.len()
                )));
            }
            let valued: Vec<ValuedConvexSet> = sets
                .into_iter()
                .zip(values)
                .map(|(halfspaces, &value)| ValuedConvexSet { halfspaces, value })
                .collect();
            let (t, witness) = longest_valued_intersection(&valued, &bbox)?;
            Ok(LipOutput::Valued {
                threshold: t.is_finite().then_some(t),
                witness,
            })
        }
    }
}

pub fn measure_name(m: QualityMeasure) -> &'static str {
    match m {
        QualityMeasure::MaxAngle => "max-angle",
        QualityMeasure::AspectRatio => "aspect-ratio",
        QualityMeasure::Perimeter => "perimeter",
        QualityMeasure::Circumradius => "circumradius",
        QualityMeasure::BankSmith => "bank-smith",
    }
}

pub fn mesh_smooth(
    input: &MeshDoc,
    measure: QualityMeasure,
    passes: usize,
    cfg: &RunConfig,
) -> Result<MeshOutput, CliError> {
    let mesh = TriMesh::new(
        input.vertices.clone(),
        input.triangles.clone(),
        input.fixed.clone(),
    )?;
    let worst_before = mesh.worst_quality(measure);
    let (out, log) = smooth_mesh_traced(&mesh, measure, passes, &cfg.solver())?;
    Ok(MeshOutput {
        worst_after: out.worst_quality(measure),
        mesh: MeshDoc {
            vertices: out.vertices,
            triangles: out.triangles,
            fixed: out.fixed,
        },
        measure: measure_name(measure).into(),
        worst_before,
        relocations: log.len(),
    })
}

/// Reads the text format, or the JSON format when the input starts with `{`.
pub fn read_recurrence(text: &str) -> Result<Recurrence, CliError> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str::<RecurrenceDoc>(text)?.to_recurrence()
    } else {
        Ok(parse_recurrence(text)?)
    }
}

fn termination_name(t: Termination) -> &'static str {
    match t {
        Termination::Converged => "converged",
        Termination::MaxIterations => "max-iterations",
        Termination::NoImprovingDirection => "no-improving-direction",
    }
}

/// Index of the first candidate with a finite growth rate, checking
/// `jobs` candidates at a time.
fn first_finite(r: &Recurrence, candidates: &[Vec<f64>], jobs: usize) -> Option<usize> {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return candidates
            .iter()
            .position(|w| recurrence_growth(r, w).is_finite());
    }
    candidates.chunks(jobs).enumerate().find_map(|(chunk, ws)| {
        let found: Vec<bool> = thread::scope(|s| {
            let handles: Vec<_> = ws
                .iter()
                .map(|w| s.spawn(move || recurrence_growth(r, w).is_finite()))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or(false))
                .collect()
        });
        found.iter().position(|&f| f).map(|i| chunk * jobs + i)
    })
}

pub fn recurrence(
    r: &Recurrence,
    target: &[f64],
    cfg: &RunConfig,
) -> Result<RecurrenceOutput, CliError> {
    let t = TargetVector::new(target.to_vec())?;
    let candidates = start_candidates(r, &t, cfg.seed)?;
    let start =
        first_finite(r, &candidates, cfg.jobs).ok_or(quasiconvex::Error::AllCasesInfinite)?;
    let report = analyze_from(r, &t, &candidates[start], &cfg.solver())?;
    Ok(RecurrenceOutput {
        lambda: report.lambda,
        weights: report.weights,
        tight_cases: report.tight_cases.iter().map(|i| i + 1).collect(),
        iterations: report.trace.iterations.len(),
        termination: termination_name(report.trace.termination).into(),
    })
}
