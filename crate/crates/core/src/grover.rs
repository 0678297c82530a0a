//! Iteration-count arithmetic, the diffusion operator and the full search
//! loop with per-iteration amplitude snapshots.
//!
//! The planned iteration count is floor((pi/4) sqrt(N/l)). Running past it
//! over-rotates and the marked-state probability starts decreasing; the
//! trajectory follows sin^2((2k+1) asin(sqrt(l/N))).

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::hadamard_all;
use crate::kernels;
use crate::oracle::Oracle;
use crate::statevector::{index_to_label, StateVector};

/// Planned search parameters for an n-qubit register with l solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverPlan {
    pub n: usize,
    /// N = 2^n basis states.
    pub state_count: u64,
    /// Expected solution count l.
    pub solutions: u64,
    /// Planned iterations N_G.
    pub iterations: u64,
    /// Speedup N / N_G over worst-case linear search; None when N_G = 0.
    pub speedup: Option<f64>,
}

impl GroverPlan {
    pub fn new(n: usize, solutions: u64) -> Result<Self> {
        if n == 0 || n > crate::statevector::MAX_QUBITS {
            return Err(Error::InvalidWidth(n));
        }
        let state_count = 1u64 << n;
        let iterations = grover_iterations(state_count, solutions)?;
        let speedup =
            (iterations >= 1).then(|| state_count as f64 / iterations as f64);
        Ok(GroverPlan { n, state_count, solutions, iterations, speedup })
    }
}

/// floor((pi/4) sqrt(N/l)). A result of 0 (l close to N) means the uniform
/// superposition alone already measures a solution with probability l/N.
pub fn grover_iterations(state_count: u64, solutions: u64) -> Result<u64> {
    if solutions == 0 {
        return Err(Error::NoSolutions);
    }
    if solutions > state_count {
        return Err(Error::InvalidCount { l: solutions, state_count });
    }
    let ratio = state_count as f64 / solutions as f64;
    Ok((FRAC_PI_4 * ratio.sqrt()).floor() as u64)
}

/// N / N_G, the iteration-count advantage over worst-case linear search.
pub fn speedup_ratio(state_count: u64, solutions: u64) -> Result<f64> {
    let iterations = grover_iterations(state_count, solutions)?;
    if iterations == 0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(state_count as f64 / iterations as f64)
}

/// Reflects the state about the uniform superposition: amps' = 2 mean - amps.
/// Equivalent to the H X multi-controlled-Z X H gate ladder up to a -1
/// global phase.
pub fn apply_diffusion(state: &mut StateVector) {
    kernels::invert_about_mean(state.amps_mut());
}

/// One recorded register state within a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    /// 0 for the initial superposition, k for Grover iteration k.
    pub iteration: u64,
    pub amps: Vec<Complex64>,
    pub probs: Vec<f64>,
}

/// Full trace of one Grover run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub plan: GroverPlan,
    /// Initial superposition plus the state after each full iteration;
    /// always iterations + 1 entries.
    pub snapshots: Vec<Snapshot>,
    /// Intra-iteration state right after the oracle, before diffusion; one
    /// entry per iteration. Makes the oracle's sign flip visible.
    pub post_oracle: Vec<Snapshot>,
    pub final_distribution: Vec<f64>,
    pub argmax: u64,
    pub argmax_label: String,
}

/// Runs hadamard_all then `iterations` rounds of oracle + diffusion,
/// recording a snapshot after initialization and after every iteration.
/// `iterations_override` replaces the planned count (e.g. to show
/// over-rotation).
pub fn run_grover(
    n: usize,
    oracle: &Oracle,
    solutions: u64,
    iterations_override: Option<u64>,
) -> Result<RunReport> {
    if oracle.n() != n {
        return Err(Error::WidthMismatch { state: n, oracle: oracle.n() });
    }
    let plan = GroverPlan::new(n, solutions)?;
    let iterations = iterations_override.unwrap_or(plan.iterations);

    let mut state = StateVector::zero_state(n)?;
    state.apply_all(&hadamard_all(n))?;

    let snapshot = |iteration: u64, state: &StateVector| Snapshot {
        iteration,
        amps: state.amps().to_vec(),
        probs: state.probabilities(),
    };

    let mut snapshots = vec![snapshot(0, &state)];
    let mut post_oracle = Vec::with_capacity(iterations as usize);
    for k in 1..=iterations {
        oracle.apply(&mut state)?;
        post_oracle.push(snapshot(k, &state));
        apply_diffusion(&mut state);
        snapshots.push(snapshot(k, &state));
    }

    let final_distribution = state.probabilities();
    let argmax = state.argmax();
    let argmax_label = index_to_label(argmax, n);
    Ok(RunReport { plan, snapshots, post_oracle, final_distribution, argmax, argmax_label })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::EquationProblem;

    fn uniform(n: usize) -> StateVector {
        let mut s = StateVector::zero_state(n).unwrap();
        s.apply_all(&hadamard_all(n)).unwrap();
        s
    }

    #[test]
    fn iteration_counts() {
        assert_eq!(grover_iterations(4, 1).unwrap(), 1);
        assert_eq!(grover_iterations(8, 1).unwrap(), 2);
        assert_eq!(grover_iterations(4, 4).unwrap(), 0);
    }

    #[test]
    fn iteration_count_errors() {
        assert!(matches!(grover_iterations(4, 0), Err(Error::NoSolutions)));
        assert!(matches!(
            grover_iterations(4, 5),
            Err(Error::InvalidCount { l: 5, state_count: 4 })
        ));
    }

    #[test]
    fn speedup_values() {
        assert!((speedup_ratio(4, 1).unwrap() - 4.0).abs() < 1e-12);
        assert!((speedup_ratio(1 << 10, 1).unwrap() - 40.96).abs() < 1e-12);
        assert!((speedup_ratio(1 << 20, 1).unwrap() - 1048576.0 / 804.0).abs() < 1e-9);
        assert!(matches!(speedup_ratio(4, 4), Err(Error::UndefinedRatio)));
    }

    #[test]
    fn diffusion_amplifies_marked_state() {
        // oracle output for the 2-qubit problem marking |01>
        let mut s = StateVector::from_amplitudes(
            [0.5, -0.5, 0.5, 0.5].iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        )
        .unwrap();
        apply_diffusion(&mut s);
        assert!((s.amps()[1].norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn diffusion_fixes_uniform_state() {
        let s0 = uniform(3);
        let mut s = s0.clone();
        apply_diffusion(&mut s);
        for (a, b) in s.amps().iter().zip(s0.amps()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn diffusion_is_involution() {
        let mut s = StateVector::basis_state(3, 5).unwrap();
        s.apply(&crate::gates::Gate::hadamard(0)).unwrap();
        let s0 = s.clone();
        apply_diffusion(&mut s);
        apply_diffusion(&mut s);
        for (a, b) in s.amps().iter().zip(s0.amps()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn two_qubit_run_finds_01_with_certainty() {
        let oracle = Oracle::for_equation(EquationProblem::new(2, 2, 3).unwrap());
        let report = run_grover(2, &oracle, 1, None).unwrap();
        assert_eq!(report.plan.iterations, 1);
        assert_eq!(report.argmax_label, "01");
        assert!(report.final_distribution[1] >= 1.0 - 1e-9);
        assert_eq!(report.snapshots.len(), 2);
        assert_eq!(report.post_oracle.len(), 1);
        // oracle sign flip visible in the intra-iteration snapshot
        assert!((report.post_oracle[0].amps[1].re + 0.5).abs() < 1e-12);
    }

    #[test]
    fn three_qubit_run_finds_001() {
        let oracle = Oracle::for_equation(EquationProblem::new(3, 5, 6).unwrap());
        let report = run_grover(3, &oracle, 1, None).unwrap();
        assert_eq!(report.plan.iterations, 2);
        assert_eq!(report.argmax_label, "001");
        assert!((report.final_distribution[1] - 0.9453125).abs() < 1e-3);
    }

    #[test]
    fn over_rotation_drops_probability() {
        let oracle = Oracle::for_equation(EquationProblem::new(2, 2, 3).unwrap());
        let report = run_grover(2, &oracle, 1, Some(2)).unwrap();
        // sin^2(5 pi / 6) = 0.25
        assert!((report.final_distribution[1] - 0.25).abs() < 1e-9);
    }

    #[test]
    fn zero_iteration_plan_returns_bare_superposition() {
        let problem = EquationProblem::new(2, 0, 0).unwrap();
        let oracle = Oracle::for_equation(problem);
        let report = run_grover(2, &oracle, 4, None).unwrap();
        assert_eq!(report.plan.iterations, 0);
        assert_eq!(report.snapshots.len(), 1);
        for p in &report.final_distribution {
            assert!((p - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn unmarked_states_share_one_amplitude() {
        let oracle = Oracle::for_equation(EquationProblem::new(4, 9, 2).unwrap());
        let solution = EquationProblem::new(4, 9, 2).unwrap().solution();
        let report = run_grover(4, &oracle, 1, None).unwrap();
        for snap in &report.snapshots {
            let unmarked: Vec<Complex64> = snap
                .amps
                .iter()
                .enumerate()
                .filter(|(i, _)| *i as u64 != solution)
                .map(|(_, a)| *a)
                .collect();
            for a in &unmarked {
                assert!((a - unmarked[0]).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn snapshots_stay_normalized() {
        let oracle = Oracle::for_equation(EquationProblem::new(5, 11, 30).unwrap());
        let report = run_grover(5, &oracle, 1, None).unwrap();
        for snap in report.snapshots.iter().chain(&report.post_oracle) {
            assert!((snap.probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }
}
