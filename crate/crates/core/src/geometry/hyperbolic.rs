use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::dot;

/// A point of hyperbolic space in the Klein (projective) model.
#[derive(Debug, Clone, PartialEq)]
pub struct KleinPoint {
    coords: Vec<f64>,
}

impl KleinPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !coords.iter().all(|c| c.is_finite()) || dot(&coords, &coords).sqrt() >= 1.0 - 1e-12 {
            return Err(Error::OutsideKleinModel);
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Lift onto the hyperboloid `|x|² - t² = -1`, `t > 0`.
    pub fn lift(&self) -> Vec<f64> {
        let s = 1.0 / (1.0 - dot(&self.coords, &self.coords)).sqrt();
        let mut out: Vec<f64> = self.coords.iter().map(|c| c * s).collect();
        out.push(s);
        out
    }
}

pub fn hyperbolic_distance(p: &KleinPoint, q: &KleinPoint) -> Result<f64> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(klein_distance(p.coords(), q.coords()))
}

/// `sinh²` of the distance, written to avoid cancellation for nearby points.
fn sinh2(x: &[f64], p: &[f64]) -> (f64, f64, f64) {
    let b = 1.0 - dot(x, x);
    let c = 1.0 - dot(p, p);
    let mut dd = 0.0;
    let mut xd = 0.0;
    for (xi, pi) in x.iter().zip(p) {
        let d = pi - xi;
        dd += d * d;
        xd += xi * d;
    }
    let n = dd * b + xd * xd;
    (n / (b * c), b, c)
}

/// Distance between raw Klein coordinates; `+∞` if either lies outside the
/// open unit ball.
pub fn klein_distance(x: &[f64], p: &[f64]) -> f64 {
    let (s, b, c) = sinh2(x, p);
    if !(b > 0.0 && c > 0.0) {
        return f64::INFINITY;
    }
    s.max(0.0).sqrt().asinh()
}

/// Gradient of [`klein_distance`] in its first argument. Zero at `x = p`.
pub fn klein_distance_gradient(x: &[f64], p: &[f64]) -> Vec<f64> {
    let (s, b, c) = sinh2(x, p);
    if !(s > 0.0) || !(b > 0.0 && c > 0.0) {
        return alloc::vec![0.0; x.len()];
    }
    let delta: Vec<f64> = p.iter().zip(x).map(|(pi, xi)| pi - xi).collect();
    let dd = dot(&delta, &delta);
    let xd = dot(x, &delta);
    let n = dd * b + xd * xd;
    let d = b * c;
    let factor = 1.0 / (2.0 * s.sqrt() * (1.0 + s).sqrt());
    x.iter()
        .zip(&delta)
        .map(|(&xi, &di)| {
            let grad_n = -2.0 * di * b - 2.0 * dd * xi + 2.0 * xd * (di - xi);
            let grad_d = -2.0 * xi * c;
            factor * (grad_n * d - n * grad_d) / (d * d)
        })
        .collect()
}
