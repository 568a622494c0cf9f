use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// One branch of a recurrence: `Σ_j T(x - δ_j)`, with repeated terms listed
/// repeatedly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    decrements: Vec<Vec<i64>>,
}

impl Case {
    /// Every decrement must be nonnegative and nonzero.
    pub fn new(decrements: Vec<Vec<i64>>) -> Result<Self> {
        let d = decrements.first().ok_or(Error::EmptyInput)?.len();
        for delta in &decrements {
            if delta.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: delta.len(),
                });
            }
            if delta.iter().any(|&v| v < 0) || delta.iter().all(|&v| v == 0) {
                return Err(Error::InvalidParameter(format!(
                    "decrement {delta:?} must be nonnegative and nonzero"
                )));
            }
        }
        Ok(Self { decrements })
    }

    pub fn decrements(&self) -> &[Vec<i64>] {
        &self.decrements
    }

    pub fn dim(&self) -> usize {
        self.decrements[0].len()
    }

    /// `w · δ_j` for every term.
    pub fn exponents(&self, w: &[f64]) -> Vec<f64> {
        self.decrements
            .iter()
            .map(|delta| delta.iter().zip(w).map(|(&a, b)| a as f64 * b).sum())
            .collect()
    }
}

/// `T(x) = max over cases of Σ_j T(x - δ_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    variables: Vec<String>,
    cases: Vec<Case>,
}

impl Recurrence {
    pub fn new(variables: Vec<String>, cases: Vec<Case>) -> Result<Self> {
        if variables.is_empty() || cases.is_empty() {
            return Err(Error::EmptyInput);
        }
        for c in &cases {
            if c.dim() != variables.len() {
                return Err(Error::DimensionMismatch {
                    expected: variables.len(),
                    found: c.dim(),
                });
            }
        }
        Ok(Self { variables, cases })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn cases(&self) -> &[Case] {
        &self.cases
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }
}

/// Direction `t` along which the recurrence is analyzed (`x = n t`).
#[derive(Debug, Clone, PartialEq)]
pub struct TargetVector(Vec<f64>);

impl TargetVector {
    pub fn new(t: Vec<f64>) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::EmptyInput);
        }
        if t.iter().any(|v| !v.is_finite()) || t.iter().all(|&v| v == 0.0) {
            return Err(Error::InvalidParameter(
                "target must be finite and nonzero".into(),
            ));
        }
        Ok(Self(t))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}
