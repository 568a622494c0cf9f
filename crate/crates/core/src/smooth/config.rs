use alloc::vec::Vec;

use crate::error::{Error, Result};

/// How [`improving_direction`](super::improving_direction) searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DirectionMethod {
    /// Radial sort in the plane, linear programming otherwise.
    #[default]
    Auto,
    /// Sort unit surrogates by angle and bisect the two extreme ones.
    Radial2d,
    /// Maximize the worst inner product with a small linear program.
    Lp,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Objectives within this gap of the maximum count as active; this is
    /// also the accuracy to which the optimum level is resolved.
    pub tolerance: f64,
    /// Lower bound on the active band. The effective band at level `λ` is
    /// `max(active_band, relative_band * |λ|)`.
    pub active_band: f64,
    pub relative_band: f64,
    pub max_iterations: usize,
    /// Factor applied to the step found by the doubling search.
    pub step_shrink: f64,
    pub rng_seed: u64,
    pub direction: DirectionMethod,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            active_band: 1e-9,
            relative_band: 1e-9,
            max_iterations: 10_000,
            step_shrink: 0.5,
            rng_seed: 0,
            direction: DirectionMethod::Auto,
        }
    }
}

impl SolverConfig {
    /// Default configuration with both tolerance and band set to `tol`.
    pub fn with_tolerance(tol: f64) -> Self {
        Self {
            tolerance: tol,
            active_band: tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidParameter("tolerance must be positive".into()));
        }
        if !(self.active_band >= 0.0) {
            return Err(Error::InvalidParameter(
                "active band must be nonnegative".into(),
            ));
        }
        if !(self.relative_band >= 0.0) {
            return Err(Error::InvalidParameter(
                "relative band must be nonnegative".into(),
            ));
        }
        if !(self.step_shrink > 0.0 && self.step_shrink < 1.0) {
            return Err(Error::InvalidParameter(
                "step shrink must lie in (0, 1)".into(),
            ));
        }
        Ok(())
    }

    pub(crate) fn band_at(&self, level: f64) -> f64 {
        let rel = if level.is_finite() {
            self.relative_band * level.abs()
        } else {
            0.0
        };
        self.active_band.max(rel)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// No improving direction exists for the active objectives.
    Converged,
    MaxIterations,
    /// Directions were found but the line search made no progress twice in
    /// a row, even after widening the active band.
    NoImprovingDirection,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub point: Vec<f64>,
    pub level: f64,
    pub active: Vec<usize>,
    pub direction: Option<Vec<f64>>,
    /// Step length along `direction`; zero when no move was made.
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveTrace {
    pub iterations: Vec<TraceStep>,
    pub termination: Termination,
}

impl SolveTrace {
    pub fn levels(&self) -> impl Iterator<Item = f64> + '_ {
        self.iterations.iter().map(|s| s.level)
    }
}
