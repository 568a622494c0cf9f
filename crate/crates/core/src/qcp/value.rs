use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// The value `(level, point)` of a quasiconvex program, ordered
/// lexicographically: first by level, then coordinatewise by point.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionValue {
    pub level: f64,
    pub point: Vec<f64>,
}

impl SolutionValue {
    pub fn new(level: f64, point: Vec<f64>) -> Self {
        Self { level, point }
    }

    pub fn dim(&self) -> usize {
        self.point.len()
    }

    pub fn lex_cmp(&self, other: &Self) -> Result<Ordering> {
        value_compare(self, other)
    }
}

/// Lexicographic comparison of two program values.
pub fn value_compare(a: &SolutionValue, b: &SolutionValue) -> Result<Ordering> {
    if a.point.len() != b.point.len() {
        return Err(Error::DimensionMismatch {
            expected: a.point.len(),
            found: b.point.len(),
        });
    }
    let ord = a
        .point
        .iter()
        .zip(&b.point)
        .fold(a.level.total_cmp(&b.level), |acc, (x, y)| {
            acc.then_with(|| x.total_cmp(y))
        });
    Ok(ord)
}
