//! Generic randomized solver for LP-type problems.

use alloc::vec::Vec;
use core::cell::Cell;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qcp::SolutionValue;

/// A set of constraint indices together with the value it determines.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    /// Sorted constraint indices.
    pub indices: Vec<usize>,
    pub value: SolutionValue,
}

impl Basis {
    pub fn new(mut indices: Vec<usize>, value: SolutionValue) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { indices, value }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// The two problem-specific primitives of an LP-type problem.
///
/// `f` must be monotone (`A ⊆ B` implies `f(A) <= f(B)`) and local; the
/// solver does not check either property.
pub trait LpTypeOracle {
    /// Combinatorial dimension: the largest basis size.
    fn dim(&self) -> usize;

    /// Whether adding constraint `index` would change the value of `basis`.
    fn violates(&self, basis: &Basis, index: usize) -> bool;

    /// Basis of a set of at most `dim() + 1` constraints. Must be
    /// deterministic in `indices`.
    fn solve_small(&self, indices: &[usize]) -> Result<Basis>;
}

/// Call counts from one run of [`lp_type_solve_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LpTypeStats {
    pub violation_tests: usize,
    pub basis_computations: usize,
}

/// Basis of the full constraint set `0..n`.
pub fn lp_type_solve<O: LpTypeOracle + ?Sized>(n: usize, oracle: &O, seed: u64) -> Result<Basis> {
    lp_type_solve_with_stats(n, oracle, seed).map(|(b, _)| b)
}

pub fn lp_type_solve_with_stats<O: LpTypeOracle + ?Sized>(
    n: usize,
    oracle: &O,
    seed: u64,
) -> Result<(Basis, LpTypeStats)> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let counted = Counted {
        inner: oracle,
        tests: Cell::new(0),
        solves: Cell::new(0),
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut basis = counted.solve_small(&order[..1])?;
    basis = insert_all(&order, basis, &counted)?;
    // A final sweep guards against inconsistent tolerances in the oracle;
    // every repair strictly raises the value, so this terminates.
    while let Some(h) = (0..n).find(|&h| !basis.indices.contains(&h) && counted.violates(&basis, h))
    {
        let next = counted.solve_small(&with_index(&basis, h))?;
        basis = insert_all(&order, next, &counted)?;
    }
    let stats = LpTypeStats {
        violation_tests: counted.tests.get(),
        basis_computations: counted.solves.get(),
    };
    Ok((basis, stats))
}

/// Processes `prefix` in order; whenever a constraint is violated the basis
/// is recomputed with it and the constraints before it are re-checked.
fn insert_all<O: LpTypeOracle + ?Sized>(
    prefix: &[usize],
    mut basis: Basis,
    oracle: &Counted<'_, O>,
) -> Result<Basis> {
    for (i, &h) in prefix.iter().enumerate() {
        if basis.indices.contains(&h) || !oracle.violates(&basis, h) {
            continue;
        }
        let candidate = with_index(&basis, h);
        if candidate.len() > oracle.dim() + 1 {
            return Err(Error::InvalidParameter(alloc::format!(
                "basis of size {} exceeds the declared dimension {}",
                basis.len(),
                oracle.dim()
            )));
        }
        let next = oracle.solve_small(&candidate)?;
        basis = insert_all(&prefix[..i], next, oracle)?;
    }
    Ok(basis)
}

fn with_index(basis: &Basis, h: usize) -> Vec<usize> {
    let mut idx = basis.indices.clone();
    idx.push(h);
    idx.sort_unstable();
    idx
}

struct Counted<'a, O: ?Sized> {
    inner: &'a O,
    tests: Cell<usize>,
    solves: Cell<usize>,
}

impl<O: LpTypeOracle + ?Sized> LpTypeOracle for Counted<'_, O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn violates(&self, basis: &Basis, index: usize) -> bool {
        self.tests.set(self.tests.get() + 1);
        self.inner.violates(basis, index)
    }

    fn solve_small(&self, indices: &[usize]) -> Result<Basis> {
        self.solves.set(self.solves.get() + 1);
        self.inner.solve_small(indices)
    }
}
