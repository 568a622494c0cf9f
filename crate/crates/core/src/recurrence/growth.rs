use alloc::vec::Vec;
use num_traits::Float;

use super::Case;
use crate::error::{Error, Result};

fn excess(lambda: f64, exponents: &[f64]) -> f64 {
    exponents.iter().map(|&a| lambda.powf(-a)).sum::<f64>() - 1.0
}

/// Characteristic root of `case` under weights `w`: the `λ > 1` with
/// `Σ_j λ^(-w·δ_j) = 1`. Infinite if some `w·δ_j ≤ 0`; exactly 1 for a
/// single-term case.
pub fn case_growth(case: &Case, w: &[f64]) -> f64 {
    let exps = case.exponents(w);
    if exps.iter().any(|&a| !(a > 0.0)) {
        return f64::INFINITY;
    }
    if exps.len() == 1 {
        return 1.0;
    }
    let mut lo = 1.0 + 1e-15;
    let mut hi = 2.0;
    while excess(hi, &exps) >= 0.0 {
        lo = hi;
        hi *= 2.0;
        if !hi.is_finite() {
            return f64::INFINITY;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if excess(mid, &exps) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `-∇_w λ` at the root `lambda = case_growth(case, w)`, by implicit
/// differentiation of `Σ_j λ^(-w·δ_j) = 1`.
pub fn case_growth_surrogate(case: &Case, w: &[f64], lambda: f64) -> Result<Vec<f64>> {
    if !(lambda > 1.0 + 1e-12) || !lambda.is_finite() {
        return Err(Error::DegenerateRoot);
    }
    let ln = lambda.ln();
    let exps = case.exponents(w);
    let terms: Vec<f64> = exps.iter().map(|&a| lambda.powf(-a)).collect();
    let df_dl: f64 = exps.iter().zip(&terms).map(|(a, p)| -a * p / lambda).sum();
    let mut grad = alloc::vec![0.0; w.len()];
    for (delta, p) in case.decrements().iter().zip(&terms) {
        for (g, &dk) in grad.iter_mut().zip(delta) {
            // ∂F/∂w_k
            *g += -ln * dk as f64 * p;
        }
    }
    // ∇λ = -(∂F/∂w) / (∂F/∂λ), and we return its negation
    Ok(grad.into_iter().map(|g| g / df_dl).collect())
}
