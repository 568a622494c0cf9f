use alloc::sync::Arc;
use core::fmt;

use super::function::QuasiconvexFunction;
use super::problem::BoundingBox;
use crate::error::{Error, Result};
use crate::lp::Halfspace;

pub type ContainsFn = Arc<dyn Fn(f64, &[f64]) -> bool + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Membership does not depend on the level.
    Constant,
    /// Sets grow (weakly) with the level.
    Shrinking,
}

/// A monotone map `λ ↦ κ(λ)` into convex sets, given by its membership
/// predicate. `λ1 < λ2` and `x ∈ κ(λ1)` must imply `x ∈ κ(λ2)`.
#[derive(Clone)]
pub struct NestedConvexFamily {
    dim: usize,
    contains: ContainsFn,
    kind: FamilyKind,
    linear: Option<Halfspace>,
}

impl NestedConvexFamily {
    pub fn new<F>(dim: usize, kind: FamilyKind, contains: F) -> Self
    where
        F: Fn(f64, &[f64]) -> bool + Send + Sync + 'static,
    {
        Self {
            dim,
            contains: Arc::new(contains),
            kind,
            linear: None,
        }
    }

    /// Level-independent family with membership `inside(x)`.
    pub fn constant<F>(dim: usize, inside: F) -> Self
    where
        F: Fn(&[f64]) -> bool + Send + Sync + 'static,
    {
        Self::new(dim, FamilyKind::Constant, move |_, x| inside(x))
    }

    /// Level-independent family for a linear constraint. Membership uses a
    /// `1e-12` slack on the signed distance.
    pub fn from_halfspace(h: Halfspace) -> Self {
        let unit = h.normalized();
        let probe = unit.clone();
        let mut fam = Self::constant(h.dim(), move |x| probe.slack(x) >= -1e-12);
        fam.linear = Some(unit);
        fam
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn contains(&self, level: f64, x: &[f64]) -> bool {
        (self.contains)(level, x)
    }

    /// The defining halfspace, for families built by [`Self::from_halfspace`].
    pub fn halfspace(&self) -> Option<&Halfspace> {
        self.linear.as_ref()
    }
}

impl fmt::Debug for NestedConvexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NestedConvexFamily")
            .field("dim", &self.dim)
            .field("kind", &self.kind)
            .field("linear", &self.linear)
            .finish()
    }
}

/// The family of lower level sets of `q`, restricted to `bbox`:
/// `x ∈ κ(λ)` iff `x ∈ bbox` and `q(x) <= λ`.
///
/// Indicator functions produce a constant family.
pub fn family_from_function(q: &QuasiconvexFunction, bbox: &BoundingBox) -> NestedConvexFamily {
    let bbox = bbox.clone();
    let q = q.clone();
    if q.is_indicator() {
        NestedConvexFamily::new(q.dim(), FamilyKind::Constant, move |_, x| {
            bbox.contains(x) && q.eval(x).is_finite()
        })
    } else {
        NestedConvexFamily::new(q.dim(), FamilyKind::Shrinking, move |level, x| {
            bbox.contains(x) && q.eval(x) <= level
        })
    }
}

/// `q(x) = inf { λ | x ∈ κ(λ) }`, located by bisection on `[lo, hi]` to
/// within `tol`. Points outside `κ(hi)` evaluate to `+∞`.
pub fn function_from_family(
    family: &NestedConvexFamily,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<QuasiconvexFunction> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidParameter(
            "level range must satisfy lo < hi".into(),
        ));
    }
    let fam = family.clone();
    Ok(QuasiconvexFunction::new(family.dim(), move |x| {
        if !fam.contains(hi, x) {
            return f64::INFINITY;
        }
        if fam.contains(lo, x) {
            return lo;
        }
        let (mut a, mut b) = (lo, hi);
        while b - a > tol {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if fam.contains(mid, x) {
                b = mid;
            } else {
                a = mid;
            }
        }
        b
    }))
}
