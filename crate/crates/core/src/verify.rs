//! Independent classical checks: exhaustive linear search over the register
//! and the closed-form Grover success probability. Used to validate the
//! statevector pipeline from outside.

use crate::error::Result;
use crate::grover::{grover_iterations, speedup_ratio};

/// Cost comparison between worst-case linear search (N_c = 2^n checks) and
/// the planned Grover iteration count.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchComparison {
    pub n: usize,
    pub classical_iterations: u64,
    pub grover_iterations: u64,
    pub speedup: f64,
    pub solutions: Vec<u64>,
}

/// Checks every value in 0..2^n, returning the solutions in ascending order.
pub fn brute_force_search<F: Fn(u64) -> bool>(predicate: F, n: usize) -> Vec<u64> {
    assert!((1..=crate::statevector::MAX_QUBITS).contains(&n));
    (0..1u64 << n).filter(|&x| predicate(x)).collect()
}

/// Marked-state probability after k Grover iterations with l solutions in N
/// states: sin^2((2k+1) asin(sqrt(l/N))).
pub fn closed_form_probability(state_count: u64, solutions: u64, k: u64) -> f64 {
    let theta = (solutions as f64 / state_count as f64).sqrt().asin();
    ((2 * k + 1) as f64 * theta).sin().powi(2)
}

/// Fills the cost fields from the iteration formulas; the solution list is
/// left empty (no predicate involved).
pub fn compare_costs(n: usize, solutions: u64) -> Result<SearchComparison> {
    let state_count = 1u64 << n;
    let grover = grover_iterations(state_count, solutions)?;
    let speedup = speedup_ratio(state_count, solutions)?;
    Ok(SearchComparison {
        n,
        classical_iterations: state_count,
        grover_iterations: grover,
        speedup,
        solutions: Vec::new(),
    })
}
