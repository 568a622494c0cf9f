//! JSON input and output documents, one pair per subcommand. The schemas
//! under `schemas/` describe the same shapes.

use serde::{Deserialize, Serialize};

use quasiconvex::lp::Halfspace;
use quasiconvex::qcp::BoundingBox;
use quasiconvex::recurrence::{Case, Recurrence};

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsInput {
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallSpec {
    pub center: Vec<f64>,
    pub radius: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallsInput {
    pub balls: Vec<BallSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonInput {
    /// Counterclockwise vertices.
    pub polygon: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngleInput {
    pub u: [f64; 2],
    pub w: [f64; 2],
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BoxSpec {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoxSpec {
    pub fn to_box(&self) -> Result<BoundingBox, CliError> {
        Ok(BoundingBox::new(self.lo.clone(), self.hi.clone())?)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub face_normal: [f64; 3],
    pub vertex: [f64; 3],
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IlluminationInput {
    pub pairs: Vec<PairSpec>,
    #[serde(rename = "box")]
    pub bbox: BoxSpec,
}

/// `normal · x ≥ offset`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceSpec {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl HalfspaceSpec {
    pub fn to_halfspace(&self) -> Result<Halfspace, CliError> {
        Ok(Halfspace::new(self.normal.clone(), self.offset)?)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LipInput {
    /// Each set is an intersection of halfspaces.
    pub sets: Vec<Vec<HalfspaceSpec>>,
    /// Optional value per set; switches to the valued variant.
    #[serde(default)]
    pub values: Option<Vec<f64>>,
    /// Search region; defaults to a cube of half-width 1e6.
    #[serde(default, rename = "box")]
    pub bbox: Option<BoxSpec>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MeshDoc {
    pub vertices: Vec<[f64; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub fixed: Vec<bool>,
}

/// The JSON alternative to the recurrence text format.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecurrenceDoc {
    pub vars: Vec<String>,
    pub cases: Vec<Vec<Vec<i64>>>,
}

impl RecurrenceDoc {
    pub fn to_recurrence(&self) -> Result<Recurrence, CliError> {
        let cases = self
            .cases
            .iter()
            .map(|c| Case::new(c.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Recurrence::new(self.vars.clone(), cases)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SebOutput {
    pub center: Vec<f64>,
    pub radius: f64,
    /// Indices of the input points on the boundary that fix the ball.
    pub basis: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallOutput {
    pub center: Vec<f64>,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SightOutput {
    pub viewpoint: [f64; 2],
    /// Degrees.
    pub resolution: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IlluminationOutput {
    pub source: [f64; 3],
    pub intensity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LipOutput {
    Prefix {
        length: usize,
        witness: Option<Vec<f64>>,
    },
    /// `threshold` is `null` when every set is included.
    Valued {
        threshold: Option<f64>,
        witness: Option<Vec<f64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshOutput {
    #[serde(flatten)]
    pub mesh: MeshDoc,
    pub measure: String,
    pub worst_before: f64,
    pub worst_after: f64,
    pub relocations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceOutput {
    pub lambda: f64,
    pub weights: Vec<f64>,
    /// 1-based case numbers, in input order.
    pub tight_cases: Vec<usize>,
    pub iterations: usize,
    pub termination: String,
}
