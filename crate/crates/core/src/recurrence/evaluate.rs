use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Recurrence;
use crate::error::{Error, Result};

/// Largest coordinate magnitude [`evaluate_recurrence`] accepts.
pub const DEFAULT_CAP: i64 = 60;

type BaseFn = dyn Fn(&[i64]) -> Option<BigUint>;

/// Values of `T` where the recursion stops.
pub enum BasePolicy {
    /// `T = 0` if any coordinate is negative, `T = 1` if some case would
    /// step below zero, otherwise recurse.
    Default,
    /// Returns `Some` at base points and `None` to recurse.
    Custom(Box<BaseFn>),
}

impl BasePolicy {
    /// Bases for the `(n, k)` maximal-independent-set recurrence:
    /// `T(0, 0) = 1` and `T(n, k) = 0` when `k < 0` or `k > n`.
    pub fn kmis() -> Self {
        Self::Custom(Box::new(|x: &[i64]| {
            let (n, k) = (x[0], x[1]);
            if k < 0 || k > n {
                Some(BigUint::zero())
            } else if n == 0 && k == 0 {
                Some(BigUint::one())
            } else {
                None
            }
        }))
    }
}

impl core::fmt::Debug for BasePolicy {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::Default => f.write_str("Default"),
            Self::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

pub fn evaluate_recurrence(r: &Recurrence, x: &[i64], base: &BasePolicy) -> Result<BigUint> {
    evaluate_recurrence_capped(r, x, base, DEFAULT_CAP)
}

/// Exact `T(x)` by memoized recursion. Fails if `x` or any point reached
/// has a coordinate beyond `±cap`.
pub fn evaluate_recurrence_capped(
    r: &Recurrence,
    x: &[i64],
    base: &BasePolicy,
    cap: i64,
) -> Result<BigUint> {
    if x.len() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: x.len(),
        });
    }
    let mut memo = BTreeMap::new();
    eval(r, x.to_vec(), base, cap, &mut memo)
}

fn eval(
    r: &Recurrence,
    x: Vec<i64>,
    base: &BasePolicy,
    cap: i64,
    memo: &mut BTreeMap<Vec<i64>, BigUint>,
) -> Result<BigUint> {
    if let Some(&v) = x.iter().find(|v| v.abs() > cap) {
        return Err(Error::CapExceeded(v));
    }
    if let Some(v) = memo.get(&x) {
        return Ok(v.clone());
    }
    let stop = match base {
        BasePolicy::Custom(f) => f(&x),
        BasePolicy::Default => {
            if x.iter().any(|&v| v < 0) {
                Some(BigUint::zero())
            } else if r.cases().iter().any(|c| {
                c.decrements()
                    .iter()
                    .any(|d| x.iter().zip(d).any(|(a, b)| a - b < 0))
            }) {
                Some(BigUint::one())
            } else {
                None
            }
        }
    };
    let value = match stop {
        Some(v) => v,
        None => {
            let mut best = BigUint::zero();
            for c in r.cases() {
                let mut sum = BigUint::zero();
                for d in c.decrements() {
                    let y: Vec<i64> = x.iter().zip(d).map(|(a, b)| a - b).collect();
                    sum += eval(r, y, base, cap, memo)?;
                }
                if sum > best {
                    best = sum;
                }
            }
            best
        }
    };
    memo.insert(x, value.clone());
    Ok(value)
}
