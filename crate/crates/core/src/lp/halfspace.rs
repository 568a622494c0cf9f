use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{dot, norm};

/// The closed halfspace `normal · x >= offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    normal: Vec<f64>,
    offset: f64,
}

impl Halfspace {
    pub fn new(normal: Vec<f64>, offset: f64) -> Result<Self> {
        let n = norm(&normal);
        if !(n > 0.0) || !n.is_finite() || !offset.is_finite() {
            return Err(Error::InvalidParameter(alloc::format!(
                "halfspace normal must be nonzero and finite (norm {n})"
            )));
        }
        Ok(Self { normal, offset })
    }

    /// The halfplane to the left of the directed segment `a -> b`.
    pub fn left_of(a: [f64; 2], b: [f64; 2]) -> Result<Self> {
        let normal = alloc::vec![a[1] - b[1], b[0] - a[0]];
        let offset = normal[0] * a[0] + normal[1] * a[1];
        Self::new(normal, offset)
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal · x - offset`; nonnegative inside.
    pub fn slack(&self, x: &[f64]) -> f64 {
        dot(&self.normal, x) - self.offset
    }

    /// Signed Euclidean distance to the boundary, positive inside.
    pub fn signed_distance(&self, x: &[f64]) -> f64 {
        self.slack(x) / norm(&self.normal)
    }

    pub fn contains(&self, x: &[f64], eps: f64) -> bool {
        self.signed_distance(x) >= -eps
    }

    /// Same halfspace with a unit-length normal.
    pub fn normalized(&self) -> Self {
        let n = norm(&self.normal);
        Self {
            normal: self.normal.iter().map(|v| v / n).collect(),
            offset: self.offset / n,
        }
    }
}
