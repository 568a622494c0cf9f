//! Exact smallest enclosing ball of points, as an LP-type problem of
//! dimension `d + 1`.

use alloc::vec;
use alloc::vec::Vec;

use super::lptype::{lp_type_solve, Basis, LpTypeOracle};
use crate::error::{Error, Result};
use crate::linalg::{dist, dot, solve, sub};
use crate::qcp::SolutionValue;

/// Relative slack used when deciding whether a point lies in a ball.
pub const CONTAINMENT_SLACK: f64 = 1e-12;

/// Slack of the violation test; larger than [`CONTAINMENT_SLACK`] so that a
/// freshly computed basis never reports its own members as violators.
const VIOLATION_SLACK: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq)]
pub struct EnclosingBall {
    pub center: Vec<f64>,
    pub radius: f64,
    /// Indices of the points that determine the ball.
    pub basis: Vec<usize>,
}

/// Ball through all of `pts` with center in their affine hull, or `None`
/// when the points are affinely dependent.
pub fn circumball(pts: &[&[f64]]) -> Option<(Vec<f64>, f64)> {
    let p0 = pts.first()?;
    if pts.len() == 1 {
        return Some((p0.to_vec(), 0.0));
    }
    let vs: Vec<Vec<f64>> = pts[1..].iter().map(|p| sub(p, p0)).collect();
    let m = vs.len();
    let gram: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| 2.0 * dot(&vs[i], &vs[j])).collect())
        .collect();
    let rhs: Vec<f64> = vs.iter().map(|v| dot(v, v)).collect();
    let coef = solve(gram, rhs, 1e-12)?;
    let mut center = p0.to_vec();
    for (c, v) in coef.iter().zip(&vs) {
        for (x, vx) in center.iter_mut().zip(v) {
            *x += c * vx;
        }
    }
    let radius = pts.iter().map(|p| dist(&center, p)).fold(0.0f64, f64::max);
    Some((center, radius))
}

fn contains_all(center: &[f64], radius: f64, pts: &[&[f64]]) -> bool {
    let slack = CONTAINMENT_SLACK * (1.0 + radius);
    pts.iter().all(|p| dist(center, p) <= radius + slack)
}

/// Minimum enclosing ball of at most `d + 2` points by subset enumeration.
///
/// Returns the center, the radius, and the positions (into `points`) of a
/// smallest supporting subset.
pub fn seb_basis_support(points: &[&[f64]]) -> Result<(Vec<f64>, f64, Vec<usize>)> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.len();
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: points
                .iter()
                .map(|p| p.len())
                .find(|&l| l != d)
                .unwrap_or(d),
        });
    }
    if points.len() > d + 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "at most {} points, got {}",
            d + 2,
            points.len()
        )));
    }
    let n = points.len();
    let mut best: Option<(Vec<f64>, f64, Vec<usize>)> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > d + 1 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let subset: Vec<&[f64]> = members.iter().map(|&i| points[i]).collect();
        let Some((center, radius)) = circumball(&subset) else {
            continue;
        };
        if !contains_all(&center, radius, points) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((_, r, m)) => {
                let tie = CONTAINMENT_SLACK * (1.0 + r);
                radius < r - tie || (radius <= r + tie && members.len() < m.len())
            }
        };
        if better {
            best = Some((center, radius, members));
        }
    }
    best.ok_or_else(|| Error::Degenerate("no enclosing ball among subsets".into()))
}

/// Minimum enclosing ball of at most `d + 2` points.
pub fn seb_basis(points: &[&[f64]]) -> Result<(Vec<f64>, f64)> {
    seb_basis_support(points).map(|(c, r, _)| (c, r))
}

/// LP-type oracle for the smallest enclosing ball of a point set.
pub struct SebOracle<'a> {
    points: &'a [Vec<f64>],
}

impl<'a> SebOracle<'a> {
    pub fn new(points: &'a [Vec<f64>]) -> Self {
        Self { points }
    }
}

impl LpTypeOracle for SebOracle<'_> {
    fn dim(&self) -> usize {
        self.points.first().map_or(0, |p| p.len()) + 1
    }

    fn violates(&self, basis: &Basis, index: usize) -> bool {
        let r = basis.value.level;
        dist(&basis.value.point, &self.points[index]) > r + VIOLATION_SLACK * (1.0 + r)
    }

    fn solve_small(&self, indices: &[usize]) -> Result<Basis> {
        let pts: Vec<&[f64]> = indices.iter().map(|&i| self.points[i].as_slice()).collect();
        let (center, radius, support) = seb_basis_support(&pts)?;
        let chosen = support.iter().map(|&k| indices[k]).collect();
        Ok(Basis::new(chosen, SolutionValue::new(radius, center)))
    }
}

/// Smallest ball enclosing `points` (dimension 1 to 3).
pub fn smallest_enclosing_ball(points: &[Vec<f64>], seed: u64) -> Result<EnclosingBall> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.len();
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.len(),
        });
    }
    let oracle = SebOracle::new(points);
    let basis = lp_type_solve(points.len(), &oracle, seed)?;
    Ok(EnclosingBall {
        center: basis.value.point,
        radius: basis.value.level,
        basis: basis.indices,
    })
}

/// Brute-force radius: the smallest ball through 1 to `d + 1` of the points
/// that encloses all of them. Exponential; meant for small checks.
pub fn brute_force_radius(points: &[Vec<f64>]) -> Option<f64> {
    let d = points.first()?.len();
    let all: Vec<&[f64]> = points.iter().map(|p| p.as_slice()).collect();
    let mut best = f64::INFINITY;
    let mut idx = vec![0usize; 0];
    fn walk(start: usize, left: usize, idx: &mut Vec<usize>, all: &[&[f64]], best: &mut f64) {
        if !idx.is_empty() {
            let subset: Vec<&[f64]> = idx.iter().map(|&i| all[i]).collect();
            if let Some((c, r)) = circumball(&subset) {
                if r < *best && contains_all(&c, r, all) {
                    *best = r;
                }
            }
        }
        if left == 0 {
            return;
        }
        for i in start..all.len() {
            idx.push(i);
            walk(i + 1, left - 1, idx, all, best);
            idx.pop();
        }
    }
    walk(0, d + 1, &mut idx, &all, &mut best);
    best.is_finite().then_some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(raw: &[&[f64]]) -> Vec<Vec<f64>> {
        raw.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn single_point_ball() {
        let (c, r) = seb_basis(&[&[0.0, 0.0]]).unwrap();
        assert_eq!(c, vec![0.0, 0.0]);
        assert_eq!(r, 0.0);
    }

    #[test]
    fn diameter_pair() {
        let (c, r) = seb_basis(&[&[0.0, 0.0], &[2.0, 0.0]]).unwrap();
        assert!((c[0] - 1.0).abs() < 1e-15 && c[1].abs() < 1e-15);
        assert!((r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn right_triangle() {
        let (c, r) = seb_basis(&[&[0.0, 0.0], &[4.0, 0.0], &[0.0, 3.0]]).unwrap();
        assert!((c[0] - 2.0).abs() < 1e-12 && (c[1] - 1.5).abs() < 1e-12);
        assert!((r - 2.5).abs() < 1e-12);
    }

    #[test]
    fn empty_input() {
        assert_eq!(seb_basis(&[]), Err(Error::EmptyInput));
        assert_eq!(smallest_enclosing_ball(&[], 0), Err(Error::EmptyInput));
    }

    #[test]
    fn collinear_points_use_extreme_pair() {
        let p = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[4.0, 0.0]]);
        let ball = smallest_enclosing_ball(&p, 3).unwrap();
        assert_eq!(ball.basis, vec![0, 2]);
        assert!((ball.radius - 2.0).abs() < 1e-12);
        assert!((ball.center[0] - 2.0).abs() < 1e-12 && ball.center[1].abs() < 1e-12);
    }

    #[test]
    fn duplicates_do_not_matter() {
        let p = vec![vec![1.0, 2.0]; 5];
        let ball = smallest_enclosing_ball(&p, 0).unwrap();
        assert_eq!(ball.radius, 0.0);
        assert_eq!(ball.basis.len(), 1);
    }

    #[test]
    fn unit_square() {
        let p = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]);
        let ball = smallest_enclosing_ball(&p, 1).unwrap();
        assert!((ball.radius - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((ball.center[0] - 0.5).abs() < 1e-12 && (ball.center[1] - 0.5).abs() < 1e-12);
        assert!((brute_force_radius(&p).unwrap() - ball.radius).abs() < 1e-12);
    }

    #[test]
    fn forced_diameter() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut p = vec![vec![-1.0, 0.0], vec![1.0, 0.0]];
        while p.len() < 102 {
            let x: f64 = rng.random_range(-1.0..1.0);
            let y: f64 = rng.random_range(-1.0..1.0);
            if x * x + y * y < 0.99 {
                p.push(vec![x, y]);
            }
        }
        let ball = smallest_enclosing_ball(&p, 2).unwrap();
        assert!((ball.radius - 1.0).abs() < 1e-12);
        assert!(ball.center.iter().all(|c| c.abs() < 1e-12));
    }

    #[test]
    fn random_instances_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..200 {
            let d = 2 + trial % 2;
            let n = rng.random_range(1..=10);
            let p: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..d).map(|_| rng.random_range(-3.0..3.0)).collect())
                .collect();
            let ball = smallest_enclosing_ball(&p, trial as u64).unwrap();
            let brute = brute_force_radius(&p).unwrap();
            assert!((ball.radius - brute).abs() < 1e-9, "trial {trial}");
            assert!(ball.basis.len() <= d + 1);
            for q in &p {
                assert!(dist(&ball.center, q) <= ball.radius + 1e-9);
            }
        }
    }

    #[test]
    fn lp_type_monotonicity_on_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..10 {
            let n = rng.random_range(2..=8);
            let p: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..2).map(|_| rng.random_range(-2.0..2.0)).collect())
                .collect();
            let radius = |mask: u32| {
                let sub: Vec<Vec<f64>> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| p[i].clone())
                    .collect();
                smallest_enclosing_ball(&sub, 0).unwrap().radius
            };
            let full = (1u32 << n) - 1;
            for a in 1..=full {
                let ra = radius(a);
                // every superset obtained by adding one more element
                for i in 0..n {
                    let b = a | (1 << i);
                    assert!(ra <= radius(b) + 1e-12);
                }
            }
        }
    }
}
