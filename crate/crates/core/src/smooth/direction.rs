use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use num_traits::Float;

use super::config::DirectionMethod;
use crate::error::{Error, Result};
use crate::linalg::{dot, normalized};
use crate::lp::{seidel_lp, Halfspace};
use crate::qcp::BoundingBox;

/// A unit vector `y` with `y · s > 0` for every surrogate `s`, or `None`
/// when no such vector exists.
pub fn improving_direction(
    surrogates: &[Vec<f64>],
    method: DirectionMethod,
    rng_seed: u64,
) -> Result<Option<Vec<f64>>> {
    let first = surrogates.first().ok_or(Error::EmptyInput)?;
    let d = first.len();
    let mut units = Vec::with_capacity(surrogates.len());
    for s in surrogates {
        if s.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: s.len(),
            });
        }
        units.push(normalized(s).ok_or(Error::ZeroSurrogate)?);
    }
    let radial = match method {
        DirectionMethod::Auto => d == 2,
        DirectionMethod::Radial2d => {
            if d != 2 {
                return Err(Error::UnsupportedDimension(d));
            }
            true
        }
        DirectionMethod::Lp => false,
    };
    if radial {
        if let Some(y) = radial_direction(&units) {
            return Ok(Some(y));
        }
    }
    lp_direction(&units, rng_seed)
}

/// Bisector of the two extreme vectors when all of them fit in an open
/// half-plane, found from the widest angular gap.
fn radial_direction(units: &[Vec<f64>]) -> Option<Vec<f64>> {
    let mut angles: Vec<(f64, usize)> = units
        .iter()
        .enumerate()
        .map(|(i, u)| (u[1].atan2(u[0]), i))
        .collect();
    angles.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = angles.len();
    let (mut gap, mut after) = (angles[0].0 + TAU - angles[n - 1].0, 0);
    for k in 1..n {
        let g = angles[k].0 - angles[k - 1].0;
        if g > gap {
            gap = g;
            after = k;
        }
    }
    if gap <= PI + 1e-12 {
        return None;
    }
    let lo = &units[angles[after].1];
    let hi = &units[angles[(after + n - 1) % n].1];
    let y = normalized(&[lo[0] + hi[0], lo[1] + hi[1]])?;
    units.iter().all(|u| dot(u, &y) > 0.0).then_some(y)
}

/// Maximize `s` subject to `y · u_i >= s` and `|y|_∞ <= 1`.
fn lp_direction(units: &[Vec<f64>], rng_seed: u64) -> Result<Option<Vec<f64>>> {
    let d = units[0].len();
    let mut rows = Vec::with_capacity(units.len());
    for u in units {
        let mut a = u.clone();
        a.push(-1.0);
        rows.push(Halfspace::new(a, 0.0)?);
    }
    let mut lo = vec![-1.0; d + 1];
    let mut hi = vec![1.0; d + 1];
    hi[d] = (d as f64).sqrt() + 1.0;
    lo[d] = -1.0;
    let bbox = BoundingBox::new(lo, hi)?;
    let mut objective = vec![0.0; d + 1];
    objective[d] = -1.0;
    let Some(sol) = seidel_lp(&rows, &objective, &bbox, rng_seed)? else {
        return Ok(None);
    };
    if sol.point[d] <= 1e-12 {
        return Ok(None);
    }
    Ok(normalized(&sol.point[..d]).filter(|y| units.iter().all(|u| dot(u, y) > 0.0)))
}
