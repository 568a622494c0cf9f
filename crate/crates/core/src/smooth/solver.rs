use alloc::vec;
use alloc::vec::Vec;

use super::config::{SolveTrace, SolverConfig, Termination, TraceStep};
use super::direction::improving_direction;
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, dot, norm};
use crate::qcp::{QcpProblem, SolutionValue};

/// Objectives within `band` of the maximum at `x`, with their surrogates.
pub fn active_set(problem: &QcpProblem, x: &[f64], band: f64) -> Result<Vec<(usize, Vec<f64>)>> {
    if x.len() != problem.dim() {
        return Err(Error::DimensionMismatch {
            expected: problem.dim(),
            found: x.len(),
        });
    }
    let values: Vec<f64> = problem.objectives().iter().map(|f| f.eval(x)).collect();
    let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut out = Vec::new();
    for (i, (f, &v)) in problem.objectives().iter().zip(&values).enumerate() {
        if band.is_infinite() || v >= top - band {
            out.push((i, f.surrogate(x).ok_or(Error::MissingSurrogate(i))?));
        }
    }
    Ok(out)
}

/// Largest `t` keeping `x + t y` in the box and in every constraint family.
fn feasible_step(problem: &QcpProblem, x: &[f64], y: &[f64]) -> f64 {
    let mut t_max = problem.bounding_box().max_step(x, y);
    for c in problem.constraints() {
        if let Some(h) = c.halfspace() {
            let rate = dot(h.normal(), y);
            if rate < 0.0 {
                t_max = t_max.min((h.slack(x) + 1e-12).max(0.0) / -rate);
            }
            continue;
        }
        if c.contains(0.0, &add_scaled(x, t_max, y)) {
            continue;
        }
        let (mut lo, mut hi) = (0.0, t_max);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if c.contains(0.0, &add_scaled(x, mid, y)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        t_max = lo;
    }
    t_max
}

fn is_negligible(t: f64, y: &[f64], x: &[f64]) -> bool {
    !(t * norm(y) >= 1e-15 * (1.0 + norm(x)))
}

/// Step length along the improving direction `y`: the doubling/halving
/// search finds a large `t` with `Q(x + t y) <= Q(x)`, which is then scaled
/// by `config.step_shrink`. Zero means no progress was possible.
pub fn line_search(
    problem: &QcpProblem,
    x: &[f64],
    y: &[f64],
    config: &SolverConfig,
) -> Result<f64> {
    config.validate()?;
    let t0 = 1e-3 * problem.bounding_box().diameter() / norm(y).max(f64::MIN_POSITIVE);
    Ok(search(problem, x, y, config, t0))
}

fn search(problem: &QcpProblem, x: &[f64], y: &[f64], config: &SolverConfig, t0: f64) -> f64 {
    let q0 = problem.objective(x);
    let t_max = feasible_step(problem, x, y);
    if is_negligible(t_max, y, x) {
        return 0.0;
    }
    let q = |t: f64| problem.objective(&add_scaled(x, t, y));
    let mut t = t0.min(t_max);
    if q(t) <= q0 {
        while t < t_max {
            let next = (2.0 * t).min(t_max);
            if q(next) <= q0 {
                t = next;
            } else {
                break;
            }
        }
    } else {
        loop {
            t *= 0.5;
            if is_negligible(t, y, x) {
                return 0.0;
            }
            if q(t) <= q0 {
                break;
            }
        }
    }
    let shrunk = config.step_shrink * t;
    if q(shrunk) <= q0 {
        shrunk
    } else {
        t
    }
}

/// Inward normals of box faces and linear constraints within `delta` of `x`.
fn boundary_normals(problem: &QcpProblem, x: &[f64], delta: f64) -> Vec<Vec<f64>> {
    let d = problem.dim();
    let bbox = problem.bounding_box();
    let mut out = Vec::new();
    for k in 0..d {
        if x[k] - bbox.lo()[k] <= delta {
            let mut e = vec![0.0; d];
            e[k] = 1.0;
            out.push(e);
        }
        if bbox.hi()[k] - x[k] <= delta {
            let mut e = vec![0.0; d];
            e[k] = -1.0;
            out.push(e);
        }
    }
    for c in problem.constraints() {
        if let Some(h) = c.halfspace() {
            if h.signed_distance(x) <= delta {
                out.push(h.normal().to_vec());
            }
        }
    }
    out
}

fn project_into_box(problem: &QcpProblem, x: &mut [f64]) {
    let bbox = problem.bounding_box();
    for (k, v) in x.iter_mut().enumerate() {
        *v = v.clamp(bbox.lo()[k], bbox.hi()[k]);
    }
}

/// Descends from `x0` until no improving direction exists for the objectives
/// in the active band, the line search stalls, or the iteration budget runs
/// out.
pub fn minimize(
    problem: &QcpProblem,
    x0: &[f64],
    config: &SolverConfig,
) -> Result<(SolutionValue, SolveTrace)> {
    config.validate()?;
    if x0.len() != problem.dim() {
        return Err(Error::DimensionMismatch {
            expected: problem.dim(),
            found: x0.len(),
        });
    }
    let mut x = x0.to_vec();
    let mut level = problem.objective(&x);
    if !problem.is_feasible(&x) || !level.is_finite() {
        return Err(Error::InfeasibleStart);
    }
    let scale = 1.0 + problem.bounding_box().diameter();
    let mut prev_step = 1e-3 * problem.bounding_box().diameter();
    let mut widen = 1.0;
    // objectives that the last step could have overtaken are also active
    let mut recent_drop = 0.0;
    let mut zero_steps = 0;
    let mut iterations = Vec::new();
    let mut termination = Termination::MaxIterations;

    for _ in 0..config.max_iterations {
        let base = config.band_at(level) * widen;
        let band = base.max(2.0 * recent_drop);
        let active = active_set(problem, &x, band)?;
        let indices: Vec<usize> = active.iter().map(|(i, _)| *i).collect();
        let mut step = TraceStep {
            point: x.clone(),
            level,
            active: indices,
            direction: None,
            step: 0.0,
        };
        if problem.objectives().is_empty()
            || active
                .iter()
                .any(|(_, s)| !(norm(s) > 1e-300) || s.iter().any(|v| !v.is_finite()))
        {
            iterations.push(step);
            termination = Termination::Converged;
            break;
        }
        let mut surrogates: Vec<Vec<f64>> = active.into_iter().map(|(_, s)| s).collect();
        let delta = (1e-9 * scale).max(0.5 * prev_step);
        surrogates.extend(boundary_normals(problem, &x, delta));
        let Some(y) = improving_direction(&surrogates, config.direction, config.rng_seed)? else {
            if band > base {
                recent_drop = 0.0;
                continue;
            }
            iterations.push(step);
            termination = Termination::Converged;
            break;
        };
        let t = search(problem, &x, &y, config, 2.0 * prev_step);
        step.direction = Some(y.clone());
        let mut next = add_scaled(&x, t, &y);
        project_into_box(problem, &mut next);
        let next_level = problem.objective(&next);
        if is_negligible(t, &y, &x) || !problem.is_feasible(&next) || !(next_level < level) {
            if band > base {
                recent_drop = 0.0;
                continue;
            }
            iterations.push(step);
            zero_steps += 1;
            if zero_steps >= 2 {
                termination = Termination::NoImprovingDirection;
                break;
            }
            widen *= 16.0;
            prev_step = (0.5 * prev_step).max(1e-12 * scale);
            continue;
        }
        step.step = t;
        iterations.push(step);
        zero_steps = 0;
        widen = 1.0;
        prev_step = t;
        recent_drop = level - next_level;
        x = next;
        level = next_level;
    }
    if termination == Termination::MaxIterations {
        iterations.push(TraceStep {
            point: x.clone(),
            level,
            active: Vec::new(),
            direction: None,
            step: 0.0,
        });
    }
    Ok((
        SolutionValue::new(level, x),
        SolveTrace {
            iterations,
            termination,
        },
    ))
}
