use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lp::{seidel_lp, Halfspace};
use crate::qcp::BoundingBox;

/// A convex set (intersection of halfspaces) tagged with a value.
#[derive(Debug, Clone, PartialEq)]
pub struct ValuedConvexSet {
    pub halfspaces: Vec<Halfspace>,
    pub value: f64,
}

/// A point of the intersection of `sets` within `bbox`, or `None`.
fn common_point(sets: &[&[Halfspace]], bbox: &BoundingBox) -> Result<Option<Vec<f64>>> {
    let all: Vec<Halfspace> = sets.iter().flat_map(|s| s.iter().cloned()).collect();
    let zero = vec![0.0; bbox.dim()];
    Ok(seidel_lp(&all, &zero, bbox, 0)?.map(|v| v.point))
}

/// Largest `l` such that the first `l` sets have a common point in `bbox`,
/// with such a point (`None` when `l = 0`).
///
/// Emptiness is monotone in the prefix length, so `l` is found by binary
/// search with one linear-programming feasibility test per probe.
pub fn longest_intersecting_prefix(
    sets: &[Vec<Halfspace>],
    bbox: &BoundingBox,
) -> Result<(usize, Option<Vec<f64>>)> {
    let refs: Vec<&[Halfspace]> = sets.iter().map(|s| s.as_slice()).collect();
    let (mut lo, mut hi) = (0usize, sets.len());
    let mut witness = None;
    if let Some(p) = common_point(&refs, bbox)? {
        return Ok((sets.len(), Some(p)));
    }
    // invariant: prefix `lo` intersects, prefix `hi` does not
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match common_point(&refs[..mid], bbox)? {
            Some(p) => {
                lo = mid;
                witness = Some(p);
            }
            None => hi = mid,
        }
    }
    if lo > 0 && witness.is_none() {
        witness = common_point(&refs[..lo], bbox)?;
    }
    Ok((lo, witness))
}

/// Largest threshold `l` such that the sets with value below `l` have a
/// common point: the value of the first group (in increasing value order)
/// whose inclusion empties the intersection, or `+∞` if none does.
pub fn longest_valued_intersection(
    sets: &[ValuedConvexSet],
    bbox: &BoundingBox,
) -> Result<(f64, Option<Vec<f64>>)> {
    if sets.iter().any(|s| s.value.is_nan()) {
        return Err(Error::InvalidParameter("set values must not be NaN".into()));
    }
    let mut order: Vec<&ValuedConvexSet> = sets.iter().collect();
    order.sort_by(|a, b| a.value.total_cmp(&b.value));
    let ordered: Vec<Vec<Halfspace>> = order.iter().map(|s| s.halfspaces.clone()).collect();
    let (len, _) = longest_intersecting_prefix(&ordered, bbox)?;
    if len == order.len() {
        let refs: Vec<&[Halfspace]> = ordered.iter().map(|s| s.as_slice()).collect();
        return Ok((f64::INFINITY, common_point(&refs, bbox)?));
    }
    // everything strictly below the emptying set's value still intersects
    let threshold = order[len].value;
    let below: Vec<&[Halfspace]> = order
        .iter()
        .take_while(|s| s.value < threshold)
        .map(|s| s.halfspaces.as_slice())
        .collect();
    let witness = if below.is_empty() {
        None
    } else {
        common_point(&below, bbox)?
    };
    Ok((threshold, witness))
}
