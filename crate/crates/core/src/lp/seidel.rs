//! Randomized incremental linear programming in low dimension.
//!
//! Constraints are inserted in random order. When the current optimum
//! violates a new constraint, the optimum of the constraints seen so far
//! lies on that constraint's hyperplane, so one coordinate is eliminated and
//! the problem is solved recursively one dimension lower.

use alloc::vec;
use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Halfspace;
use crate::error::{Error, Result};
use crate::linalg::{dot, norm};
use crate::qcp::{BoundingBox, SolutionValue};

pub const MAX_LP_DIMENSION: usize = 16;

/// Coefficients below this magnitude are treated as zero when choosing box
/// corners and interval endpoints.
const OBJECTIVE_ZERO: f64 = 1e-12;

#[derive(Debug, Clone)]
struct Row {
    a: Vec<f64>,
    b: f64,
}

struct Ctx {
    rng: ChaCha8Rng,
    eps: f64,
}

/// Minimizes `objective · x` subject to every halfspace and the box.
///
/// Among optimal points the lexicographically smallest is returned, so the
/// answer does not depend on `seed`. `Ok(None)` means infeasible.
pub fn seidel_lp(
    halfspaces: &[Halfspace],
    objective: &[f64],
    bbox: &BoundingBox,
    seed: u64,
) -> Result<Option<SolutionValue>> {
    let d = bbox.dim();
    if d > MAX_LP_DIMENSION {
        return Err(Error::UnsupportedDimension(d));
    }
    if objective.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: objective.len(),
        });
    }
    let mut rows = Vec::with_capacity(halfspaces.len());
    for h in halfspaces {
        if h.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: h.dim(),
            });
        }
        let u = h.normalized();
        rows.push(Row {
            a: u.normal().to_vec(),
            b: u.offset(),
        });
    }

    let mut objectives = Vec::with_capacity(d + 1);
    let cn = norm(objective);
    if cn > 0.0 {
        objectives.push(objective.iter().map(|c| c / cn).collect::<Vec<_>>());
    }
    for k in 0..d {
        let mut e = vec![0.0; d];
        e[k] = 1.0;
        objectives.push(e);
    }

    let scale = bbox
        .lo()
        .iter()
        .chain(bbox.hi())
        .fold(1.0f64, |m, v| m.max(v.abs()));
    let mut ctx = Ctx {
        rng: ChaCha8Rng::seed_from_u64(seed),
        eps: 1e-10 * scale,
    };
    let sol = solve(&rows, &objectives, bbox.lo(), bbox.hi(), &mut ctx);
    Ok(sol.map(|x| SolutionValue::new(dot(objective, &x), x)))
}

fn solve(
    rows: &[Row],
    objs: &[Vec<f64>],
    lo: &[f64],
    hi: &[f64],
    ctx: &mut Ctx,
) -> Option<Vec<f64>> {
    let k = lo.len();
    if k == 1 {
        return solve_interval(rows, objs, lo[0], hi[0], ctx.eps);
    }
    let mut z = box_optimum(objs, lo, hi);
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.shuffle(&mut ctx.rng);
    for pos in 0..order.len() {
        let row = &rows[order[pos]];
        if dot(&row.a, &z) >= row.b - ctx.eps {
            continue;
        }
        let previous: Vec<&Row> = order[..pos].iter().map(|&i| &rows[i]).collect();
        z = solve_on_hyperplane(row, &previous, objs, lo, hi, ctx)?;
    }
    Some(z)
}

/// Optimum restricted to `row.a · z = row.b`, eliminating the coordinate
/// with the largest coefficient.
fn solve_on_hyperplane(
    row: &Row,
    previous: &[&Row],
    objs: &[Vec<f64>],
    lo: &[f64],
    hi: &[f64],
    ctx: &mut Ctx,
) -> Option<Vec<f64>> {
    let k = lo.len();
    let j = (0..k)
        .max_by(|&x, &y| row.a[x].abs().total_cmp(&row.a[y].abs()))
        .unwrap_or(0);
    let aj = row.a[j];
    // z_j = (b - sum_{l != j} a_l w_l) / a_j
    let project = |g: &[f64]| -> (Vec<f64>, f64) {
        let gj = g[j];
        let reduced = (0..k)
            .filter(|&l| l != j)
            .map(|l| g[l] - gj * row.a[l] / aj)
            .collect();
        (reduced, gj * row.b / aj)
    };

    let mut sub_rows = Vec::with_capacity(previous.len() + 2);
    let push = |g: &[f64], h: f64, rows: &mut Vec<Row>| -> bool {
        let (a, shift) = project(g);
        let rhs = h - shift;
        let n = norm(&a);
        if n <= 1e-12 {
            // parallel to the hyperplane: all-or-nothing
            return rhs <= ctx.eps;
        }
        rows.push(Row {
            a: a.iter().map(|v| v / n).collect(),
            b: rhs / n,
        });
        true
    };
    for r in previous {
        if !push(&r.a, r.b, &mut sub_rows) {
            return None;
        }
    }
    let mut ej = vec![0.0; k];
    ej[j] = 1.0;
    if !push(&ej, lo[j], &mut sub_rows) {
        return None;
    }
    ej[j] = -1.0;
    if !push(&ej, -hi[j], &mut sub_rows) {
        return None;
    }

    let sub_objs: Vec<Vec<f64>> = objs.iter().map(|o| project(o).0).collect();
    let sub_lo: Vec<f64> = (0..k).filter(|&l| l != j).map(|l| lo[l]).collect();
    let sub_hi: Vec<f64> = (0..k).filter(|&l| l != j).map(|l| hi[l]).collect();
    let w = solve(&sub_rows, &sub_objs, &sub_lo, &sub_hi, ctx)?;

    let mut z = Vec::with_capacity(k);
    let mut it = w.iter();
    let mut acc = row.b;
    for l in 0..k {
        if l == j {
            z.push(0.0);
        } else {
            let v = *it.next().unwrap_or(&0.0);
            acc -= row.a[l] * v;
            z.push(v);
        }
    }
    z[j] = (acc / aj).clamp(lo[j], hi[j]);
    Some(z)
}

fn solve_interval(rows: &[Row], objs: &[Vec<f64>], lo: f64, hi: f64, eps: f64) -> Option<Vec<f64>> {
    let (mut a, mut b) = (lo, hi);
    for r in rows {
        let c = r.a[0];
        if c.abs() <= 1e-12 {
            if r.b > eps {
                return None;
            }
        } else if c > 0.0 {
            a = a.max(r.b / c);
        } else {
            b = b.min(r.b / c);
        }
    }
    if a > b + eps {
        return None;
    }
    if a > b {
        let m = 0.5 * (a + b);
        a = m;
        b = m;
    }
    let pick = objs
        .iter()
        .map(|o| o[0])
        .find(|c| c.abs() > OBJECTIVE_ZERO)
        .map_or(a, |c| if c > 0.0 { a } else { b });
    Some(vec![pick])
}

/// Lexicographic optimum over a box: each objective in turn fixes the
/// coordinates it is not indifferent to.
fn box_optimum(objs: &[Vec<f64>], lo: &[f64], hi: &[f64]) -> Vec<f64> {
    let k = lo.len();
    let mut z = lo.to_vec();
    let mut decided = vec![false; k];
    for o in objs {
        for l in 0..k {
            if decided[l] {
                continue;
            }
            if o[l] > OBJECTIVE_ZERO {
                z[l] = lo[l];
                decided[l] = true;
            } else if o[l] < -OBJECTIVE_ZERO {
                z[l] = hi[l];
                decided[l] = true;
            }
        }
        if decided.iter().all(|&d| d) {
            break;
        }
    }
    z
}
