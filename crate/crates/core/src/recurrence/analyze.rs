use alloc::vec;
use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{case_growth, case_growth_surrogate, Recurrence, TargetVector};
use crate::error::{Error, Result};
use crate::qcp::{BoundingBox, QcpProblem, QuasiconvexFunction};
use crate::smooth::{minimize, SolveTrace, SolverConfig, Termination};

/// Number of seeded random starting weights tried after the default one.
pub const RANDOM_RESTARTS: usize = 50;

/// Half-width of the search box for the free weight coordinates.
const WEIGHT_BOUND: f64 = 100.0;

/// Cases within this relative gap of the optimum are reported as tight.
const TIGHT_RELATIVE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    /// Growth base: `T(n t) = O(λ^n)`.
    pub lambda: f64,
    /// Optimal weights, normalized so that `w · t = 1`.
    pub weights: Vec<f64>,
    /// 0-based indices of the cases attaining `lambda`.
    pub tight_cases: Vec<usize>,
    pub trace: SolveTrace,
}

/// The hyperplane `w · t = 1`, parametrized by every coordinate except the
/// one where `|t|` is largest.
#[derive(Debug, Clone)]
struct Hyperplane {
    t: Vec<f64>,
    k: usize,
}

impl Hyperplane {
    fn new(t: &TargetVector) -> Self {
        let t = t.as_slice().to_vec();
        let k = (0..t.len())
            .max_by(|&a, &b| t[a].abs().total_cmp(&t[b].abs()))
            .unwrap_or(0);
        Self { t, k }
    }

    fn lift(&self, z: &[f64]) -> Vec<f64> {
        let mut w = Vec::with_capacity(self.t.len());
        let mut zi = z.iter();
        let mut rest = 0.0;
        for j in 0..self.t.len() {
            if j == self.k {
                w.push(0.0);
            } else {
                let v = *zi.next().unwrap_or(&0.0);
                rest += self.t[j] * v;
                w.push(v);
            }
        }
        w[self.k] = (1.0 - rest) / self.t[self.k];
        w
    }

    fn drop(&self, w: &[f64]) -> Vec<f64> {
        w.iter()
            .enumerate()
            .filter(|&(j, _)| j != self.k)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Moves `w` onto the hyperplane along `t`.
    fn project(&self, w: &[f64]) -> Vec<f64> {
        let tt: f64 = self.t.iter().map(|v| v * v).sum();
        let wt: f64 = self.t.iter().zip(w).map(|(a, b)| a * b).sum();
        w.iter()
            .zip(&self.t)
            .map(|(v, t)| v + (1.0 - wt) * t / tt)
            .collect()
    }

    /// Chain rule through `lift`.
    fn reduce(&self, g: &[f64]) -> Vec<f64> {
        let gk = g[self.k] / self.t[self.k];
        (0..self.t.len())
            .filter(|&j| j != self.k)
            .map(|j| g[j] - self.t[j] * gk)
            .collect()
    }
}

/// Largest characteristic root over all cases.
pub fn recurrence_growth(r: &Recurrence, w: &[f64]) -> f64 {
    r.cases()
        .iter()
        .map(|c| case_growth(c, w))
        .fold(1.0, f64::max)
}

/// Starting weights on `w · t = 1`: `t / |t|²` nudged away from zero
/// exponents, then seeded random points.
pub fn start_candidates(r: &Recurrence, t: &TargetVector, seed: u64) -> Result<Vec<Vec<f64>>> {
    check_dims(r, t)?;
    let plane = Hyperplane::new(t);
    let tt: f64 = t.as_slice().iter().map(|v| v * v).sum();
    let mut w: Vec<f64> = t.as_slice().iter().map(|v| v / tt).collect();
    for c in r.cases() {
        for (delta, a) in c.decrements().iter().zip(c.exponents(&w)) {
            if a <= 0.0 {
                for (wj, &dj) in w.iter_mut().zip(delta) {
                    if dj > 0 {
                        *wj += 0.1;
                    }
                }
            }
        }
    }
    let mut out = vec![plane.project(&w)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = t.as_slice().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for _ in 0..RANDOM_RESTARTS {
        let w: Vec<f64> = (0..t.dim())
            .map(|_| rng.random_range(-1.0..3.0) / scale)
            .collect();
        out.push(plane.project(&w));
    }
    Ok(out)
}

fn check_dims(r: &Recurrence, t: &TargetVector) -> Result<()> {
    if r.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: t.dim(),
        });
    }
    Ok(())
}

/// Minimizes the largest characteristic root over `w · t = 1`, starting
/// from the first candidate weight vector with a finite value.
pub fn analyze(r: &Recurrence, t: &TargetVector, config: &SolverConfig) -> Result<AnalysisReport> {
    let start = start_candidates(r, t, config.rng_seed)?
        .into_iter()
        .find(|w| recurrence_growth(r, w).is_finite())
        .ok_or(Error::AllCasesInfinite)?;
    analyze_from(r, t, &start, config)
}

/// [`analyze`] from a given start, which must satisfy `w · t = 1` (it is
/// projected onto that hyperplane) and give every case a finite root.
pub fn analyze_from(
    r: &Recurrence,
    t: &TargetVector,
    start: &[f64],
    config: &SolverConfig,
) -> Result<AnalysisReport> {
    check_dims(r, t)?;
    let plane = Hyperplane::new(t);
    let start = plane.project(start);
    if !recurrence_growth(r, &start).is_finite() {
        return Err(Error::AllCasesInfinite);
    }
    let (weights, trace) = if r.dim() == 1 {
        let trace = SolveTrace {
            iterations: Vec::new(),
            termination: Termination::Converged,
        };
        (start, trace)
    } else {
        let objectives = r
            .cases()
            .iter()
            .map(|c| {
                let (c1, c2) = (c.clone(), c.clone());
                let (p1, p2) = (plane.clone(), plane.clone());
                QuasiconvexFunction::new(r.dim() - 1, move |z| case_growth(&c1, &p1.lift(z)))
                    .with_surrogate(move |z| {
                        let w = p2.lift(z);
                        match case_growth_surrogate(&c2, &w, case_growth(&c2, &w)) {
                            Ok(g) => p2.reduce(&g),
                            Err(_) => vec![0.0; z.len()],
                        }
                    })
            })
            .collect();
        let bbox = BoundingBox::cube(r.dim() - 1, WEIGHT_BOUND)?;
        let problem = QcpProblem::new(objectives, Vec::new(), bbox)?;
        let (value, trace) = minimize(&problem, &plane.drop(&start), config)?;
        (plane.lift(&value.point), trace)
    };
    let roots: Vec<f64> = r.cases().iter().map(|c| case_growth(c, &weights)).collect();
    let lambda = roots.iter().copied().fold(1.0, f64::max);
    let band = config.band_at(lambda).max(TIGHT_RELATIVE * lambda);
    let tight_cases = (0..roots.len())
        .filter(|&i| roots[i] >= lambda - band)
        .collect();
    Ok(AnalysisReport {
        lambda,
        weights,
        tight_cases,
        trace,
    })
}
