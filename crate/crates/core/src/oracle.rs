//! Phase oracles built from a compute stage, a single pattern-controlled Z
//! phase core, and the mirrored uncompute stage.
//!
//! For the equation (x + a) mod 2^n = b the compute stage is one modular
//! adder +a and the phase core compares the shifted register against the
//! literal pattern of b. No ancilla qubits are needed because the adder is
//! in place; uncomputing it leaves only the sign change on solutions.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gates::{reversed_inverses, Gate};
use crate::statevector::{index_to_label, StateVector};

type Predicate = Arc<dyn Fn(u64) -> bool + Send + Sync>;

/// Searching for x in (x + a) mod 2^n = b. Under modular semantics there is
/// always exactly one solution, x = (b - a) mod 2^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquationProblem {
    n: usize,
    a: u64,
    b: u64,
}

impl EquationProblem {
    pub fn new(n: usize, a: u64, b: u64) -> Result<Self> {
        if n == 0 || n > crate::statevector::MAX_QUBITS {
            return Err(Error::InvalidWidth(n));
        }
        let modulus = 1u64 << n;
        for value in [a, b] {
            if value >= modulus {
                return Err(Error::InvalidProblem { value, n });
            }
        }
        Ok(EquationProblem { n, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn solution(&self) -> u64 {
        let modulus = 1u64 << self.n;
        (self.b + modulus - self.a) % modulus
    }

    pub fn predicate(&self, x: u64) -> bool {
        let modulus = 1u64 << self.n;
        (x + self.a) % modulus == self.b
    }
}

/// A gate sequence equivalent to the diagonal operator |x> -> (-1)^f(x) |x>,
/// together with the predicate f it marks (kept for verification).
#[derive(Clone)]
pub struct Oracle {
    n: usize,
    compute: Vec<Gate>,
    pattern: String,
    predicate: Predicate,
    /// Clarification labels with no effect on the circuit.
    annotations: Vec<String>,
}

impl Oracle {
    /// Any (compute sequence, phase pattern, predicate) triple; the pattern
    /// must cover the full register.
    pub fn new(
        n: usize,
        compute: Vec<Gate>,
        pattern: impl Into<String>,
        predicate: impl Fn(u64) -> bool + Send + Sync + 'static,
    ) -> Result<Self> {
        let pattern = pattern.into();
        Gate::pattern_cz(pattern.clone()).validate(n)?;
        for g in &compute {
            g.validate(n)?;
        }
        Ok(Oracle { n, compute, pattern, predicate: Arc::new(predicate), annotations: Vec::new() })
    }

    /// Oracle for (x + a) mod 2^n = b: add a, flip the phase of the state
    /// matching b, subtract a again.
    pub fn for_equation(problem: EquationProblem) -> Self {
        let n = problem.n();
        let pattern = index_to_label(problem.b(), n);
        let mut oracle = Oracle::new(
            n,
            vec![Gate::add_const(problem.a(), n)],
            pattern,
            move |x| problem.predicate(x),
        )
        .expect("equation constants validated by EquationProblem");
        oracle.annotations = vec![
            format!("a = {}", index_to_label(problem.a(), n)),
            format!("b = {}", index_to_label(problem.b(), n)),
        ];
        oracle
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> &str {
        &self.pattern
    }

    pub fn compute(&self) -> &[Gate] {
        &self.compute
    }

    pub fn annotations(&self) -> &[String] {
        &self.annotations
    }

    pub fn predicate(&self, x: u64) -> bool {
        (self.predicate)(x)
    }

    /// compute ++ [phase core] ++ reversed inverses of compute.
    pub fn gate_sequence(&self) -> Vec<Gate> {
        let mut gates = self.compute.clone();
        gates.push(Gate::pattern_cz(self.pattern.clone()));
        gates.extend(reversed_inverses(&self.compute));
        gates
    }

    /// Applies the full oracle circuit to `state`.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        if state.n() != self.n {
            return Err(Error::WidthMismatch { state: state.n(), oracle: self.n });
        }
        state.apply_all(&self.gate_sequence())
    }

    /// True iff compute followed by its reversed inverses is the identity on
    /// every basis state.
    pub fn uncompute_identity(&self) -> bool {
        let mut circuit = self.compute.clone();
        circuit.extend(reversed_inverses(&self.compute));
        circuit_is_identity(self.n, &circuit)
    }
}

/// Checks a circuit against the identity on basis states: exhaustive for
/// n <= 10, a 256-state deterministic sample beyond that.
pub fn circuit_is_identity(n: usize, circuit: &[Gate]) -> bool {
    let count = 1u64 << n;
    let basis_states: Vec<u64> = if n <= 10 {
        (0..count).collect()
    } else {
        (0..256u64).map(|i| i.wrapping_mul(0x9e3779b97f4a7c15) % count).collect()
    };
    basis_states.into_iter().all(|x| {
        let mut s = StateVector::basis_state(n, x).expect("valid width");
        s.apply_all(circuit).expect("validated gates");
        (s.amps()[x as usize].re - 1.0).abs() < 1e-10 && s.amps()[x as usize].im.abs() < 1e-10
    })
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle")
            .field("n", &self.n)
            .field("compute", &self.compute)
            .field("pattern", &self.pattern)
            .field("annotations", &self.annotations)
            .finish()
    }
}
