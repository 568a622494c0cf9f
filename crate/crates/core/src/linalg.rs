//! Dense vector helpers on `&[f64]`.

use alloc::vec::Vec;
use num_traits::Float;

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[inline]
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `a + t * b`
#[inline]
pub fn add_scaled(a: &[f64], t: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * y).collect()
}

#[inline]
pub fn scale(a: &[f64], t: f64) -> Vec<f64> {
    a.iter().map(|x| x * t).collect()
}

#[inline]
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Returns `a / |a|`, or `None` for a (numerically) zero vector.
pub fn normalized(a: &[f64]) -> Option<Vec<f64>> {
    let n = norm(a);
    if n > 0.0 && n.is_finite() {
        Some(scale(a, 1.0 / n))
    } else {
        None
    }
}

pub fn centroid<'a, I>(points: I, dim: usize) -> Vec<f64>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut acc = alloc::vec![0.0; dim];
    let mut count = 0usize;
    for p in points {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
        count += 1;
    }
    if count > 0 {
        for a in &mut acc {
            *a /= count as f64;
        }
    }
    acc
}

/// Solves `m x = rhs` for a square row-major `m` by Gaussian elimination
/// with partial pivoting. Returns `None` when a pivot falls below
/// `rel_tol` times the largest entry of `m`.
pub fn solve(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>, rel_tol: f64) -> Option<Vec<f64>> {
    let n = rhs.len();
    let scale = m
        .iter()
        .flat_map(|row| row.iter())
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    if n == 0 {
        return Some(Vec::new());
    }
    if scale == 0.0 {
        return None;
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap_or(col);
        if m[pivot][col].abs() <= rel_tol * scale {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                let (top, bottom) = m.split_at_mut(row);
                for (a, b) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *a -= f * b;
                }
                rhs[row] -= f * rhs[col];
            }
        }
    }
    let mut x = alloc::vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| m[row][k] * x[k]).sum();
        x[row] = (rhs[row] - s) / m[row][row];
    }
    Some(x)
}
