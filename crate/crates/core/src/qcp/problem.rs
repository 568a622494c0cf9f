use alloc::vec::Vec;

use super::family::{FamilyKind, NestedConvexFamily};
use super::function::QuasiconvexFunction;
use crate::error::{Error, Result};

/// Axis-aligned box `lo <= x <= hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundingBox {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl BoundingBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                found: hi.len(),
            });
        }
        if lo.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ok = lo
            .iter()
            .zip(&hi)
            .all(|(a, b)| a.is_finite() && b.is_finite() && a < b);
        if !ok {
            return Err(Error::InvalidParameter(
                "bounding box needs finite, positive extents".into(),
            ));
        }
        Ok(Self { lo, hi })
    }

    /// The cube `[-r, r]^dim`.
    pub fn cube(dim: usize, r: f64) -> Result<Self> {
        Self::new(alloc::vec![-r; dim], alloc::vec![r; dim])
    }

    /// Smallest box containing `points`, padded by `pad` on every side.
    pub fn around<'a, I>(points: I, pad: f64) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [f64]>,
    {
        let mut iter = points.into_iter();
        let first = iter.next().ok_or(Error::EmptyInput)?;
        let mut lo = first.to_vec();
        let mut hi = first.to_vec();
        for p in iter {
            for k in 0..lo.len() {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        for k in 0..lo.len() {
            lo[k] -= pad;
            hi[k] += pad;
        }
        Self::new(lo, hi)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[f64] {
        &self.lo
    }

    pub fn hi(&self) -> &[f64] {
        &self.hi
    }

    pub fn center(&self) -> Vec<f64> {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| 0.5 * (a + b))
            .collect()
    }

    pub fn diameter(&self) -> f64 {
        crate::linalg::dist(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.lo.len()
            && x.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(v, (a, b))| *v >= *a && *v <= *b)
    }

    /// Largest `t >= 0` with `x + t y` inside the box (`+∞` if unbounded).
    pub fn max_step(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut t = f64::INFINITY;
        for k in 0..x.len() {
            if y[k] > 0.0 {
                t = t.min((self.hi[k] - x[k]) / y[k]);
            } else if y[k] < 0.0 {
                t = t.min((self.lo[k] - x[k]) / y[k]);
            }
        }
        t.max(0.0)
    }
}

/// Minimize the pointwise maximum of `objectives` over the points of
/// `bounding_box` that lie in every (level-independent) constraint family.
#[derive(Debug, Clone)]
pub struct QcpProblem {
    dim: usize,
    objectives: Vec<QuasiconvexFunction>,
    constraints: Vec<NestedConvexFamily>,
    bounding_box: BoundingBox,
}

impl QcpProblem {
    pub fn new(
        objectives: Vec<QuasiconvexFunction>,
        constraints: Vec<NestedConvexFamily>,
        bounding_box: BoundingBox,
    ) -> Result<Self> {
        if objectives.is_empty() && constraints.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = bounding_box.dim();
        for f in &objectives {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.dim(),
                });
            }
        }
        for c in &constraints {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.dim(),
                });
            }
            if c.kind() != FamilyKind::Constant {
                return Err(Error::InvalidParameter(
                    "constraint families must be level-independent".into(),
                ));
            }
        }
        Ok(Self {
            dim,
            objectives,
            constraints,
            bounding_box,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn objectives(&self) -> &[QuasiconvexFunction] {
        &self.objectives
    }

    pub fn constraints(&self) -> &[NestedConvexFamily] {
        &self.constraints
    }

    pub fn bounding_box(&self) -> &BoundingBox {
        &self.bounding_box
    }

    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.bounding_box.contains(x) && self.constraints.iter().all(|c| c.contains(0.0, x))
    }

    /// Pointwise maximum of the objectives; `0` when there are none.
    pub fn objective(&self, x: &[f64]) -> f64 {
        let mut best = if self.objectives.is_empty() {
            0.0
        } else {
            f64::NEG_INFINITY
        };
        for f in &self.objectives {
            let v = f.eval(x);
            if v.is_nan() {
                return f64::INFINITY;
            }
            best = best.max(v);
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn box_validation() {
        assert!(BoundingBox::new(vec![0.0], vec![0.0]).is_err());
        assert!(BoundingBox::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(BoundingBox::new(vec![0.0], vec![f64::INFINITY]).is_err());
        let b = BoundingBox::new(vec![0.0, -1.0], vec![2.0, 1.0]).unwrap();
        assert_eq!(b.center(), vec![1.0, 0.0]);
        assert!(b.contains(&[2.0, 1.0]));
        assert!(!b.contains(&[2.1, 0.0]));
    }

    #[test]
    fn max_step_hits_nearest_face() {
        let b = BoundingBox::cube(2, 1.0).unwrap();
        assert_eq!(b.max_step(&[0.0, 0.0], &[1.0, 0.5]), 1.0);
        assert_eq!(b.max_step(&[0.0, 0.0], &[0.0, -4.0]), 0.25);
    }

    #[test]
    fn problem_needs_content() {
        let b = BoundingBox::cube(2, 1.0).unwrap();
        assert_eq!(
            QcpProblem::new(vec![], vec![], b).unwrap_err(),
            Error::EmptyInput
        );
    }

    #[test]
    fn shrinking_constraints_are_rejected() {
        let b = BoundingBox::cube(1, 1.0).unwrap();
        let fam = NestedConvexFamily::new(1, FamilyKind::Shrinking, |l, x| x[0].abs() <= l);
        assert!(QcpProblem::new(vec![], vec![fam], b).is_err());
    }
}
