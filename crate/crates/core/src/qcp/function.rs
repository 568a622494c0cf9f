use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type EvalFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;
pub type SurrogateFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A quasiconvex objective `R^d -> R ∪ {+∞}`.
///
/// The optional surrogate returns, at a point that is not a minimizer, a
/// vector `s` such that `y` is an improving direction exactly when
/// `y · s > 0`. For differentiable objectives this is the negated gradient.
#[derive(Clone)]
pub struct QuasiconvexFunction {
    dim: usize,
    eval: EvalFn,
    surrogate: Option<SurrogateFn>,
    minimum_hint: Option<Vec<f64>>,
    indicator: bool,
}

impl QuasiconvexFunction {
    pub fn new<F>(dim: usize, eval: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            dim,
            eval: Arc::new(eval),
            surrogate: None,
            minimum_hint: None,
            indicator: false,
        }
    }

    /// The step function that is `0` where `inside` holds and `+∞` elsewhere.
    ///
    /// Converting it to a family yields a level-independent (constant) family.
    pub fn indicator<F>(dim: usize, inside: F) -> Self
    where
        F: Fn(&[f64]) -> bool + Send + Sync + 'static,
    {
        let mut f = Self::new(dim, move |x| if inside(x) { 0.0 } else { f64::INFINITY });
        f.indicator = true;
        f
    }

    pub fn with_surrogate<G>(mut self, surrogate: G) -> Self
    where
        G: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        self.surrogate = Some(Arc::new(surrogate));
        self
    }

    pub fn with_minimum_hint(mut self, x: Vec<f64>) -> Self {
        self.minimum_hint = Some(x);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    pub fn surrogate(&self, x: &[f64]) -> Option<Vec<f64>> {
        self.surrogate.as_ref().map(|g| g(x))
    }

    pub fn has_surrogate(&self) -> bool {
        self.surrogate.is_some()
    }

    pub fn minimum_hint(&self) -> Option<&[f64]> {
        self.minimum_hint.as_deref()
    }

    pub fn is_indicator(&self) -> bool {
        self.indicator
    }

    /// `f ∘ q` for a nondecreasing `f`. Level sets are preserved, so the
    /// result is quasiconvex; the surrogate direction is unchanged.
    pub fn compose<F>(&self, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let inner = self.eval.clone();
        Self {
            dim: self.dim,
            eval: Arc::new(move |x| f(inner(x))),
            surrogate: self.surrogate.clone(),
            minimum_hint: self.minimum_hint.clone(),
            indicator: false,
        }
    }
}

impl fmt::Debug for QuasiconvexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuasiconvexFunction")
            .field("dim", &self.dim)
            .field("surrogate", &self.surrogate.is_some())
            .field("indicator", &self.indicator)
            .finish()
    }
}

/// `max_i fns[i](x)`, with `+∞` propagating.
pub fn pointwise_max(fns: &[QuasiconvexFunction], x: &[f64]) -> Result<f64> {
    if fns.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut best = f64::NEG_INFINITY;
    for f in fns {
        if f.dim() != x.len() {
            return Err(Error::DimensionMismatch {
                expected: f.dim(),
                found: x.len(),
            });
        }
        let v = f.eval(x);
        if v.is_nan() {
            return Ok(f64::INFINITY);
        }
        if v > best {
            best = v;
        }
    }
    Ok(best)
}
