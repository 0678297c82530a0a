//! The reversible gate set: Hadamard, Pauli X/Z, pattern-controlled Z and
//! the in-place modular add-constant permutation.
//!
//! The pattern-controlled Z negates the amplitude of the one basis state
//! whose MSB-first bit string equals the pattern. It is the usual
//! decomposition of X gates on the pattern's 0-bits around an all-ones
//! multi-controlled Z, collapsed into a single diagonal gate.
//!
//! Add-constant is modular: |x> -> |(x + k) mod 2^m> on an m-qubit field.
//! The solved equation is therefore (x + a) mod 2^n = b; carries out of the
//! register wrap around.

use crate::error::{Error, Result};

/// One reversible primitive. Qubit 0 is the least-significant bit of the
/// basis index; patterns are written MSB-first (so pattern "10" matches
/// basis index 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    Hadamard { target: usize },
    PauliX { target: usize },
    PauliZ { target: usize },
    /// Full-register phase flip on the basis state matching `pattern`.
    PatternControlledZ { pattern: String },
    /// Modular adder on the contiguous qubit field `start..start+width`.
    AddConst { k: u64, start: usize, width: usize },
}

impl Gate {
    pub fn hadamard(target: usize) -> Self {
        Gate::Hadamard { target }
    }

    pub fn pauli_x(target: usize) -> Self {
        Gate::PauliX { target }
    }

    pub fn pauli_z(target: usize) -> Self {
        Gate::PauliZ { target }
    }

    pub fn pattern_cz(pattern: impl Into<String>) -> Self {
        Gate::PatternControlledZ { pattern: pattern.into() }
    }

    /// Adder over the full `width`-qubit register starting at qubit 0.
    pub fn add_const(k: u64, width: usize) -> Self {
        Gate::AddConst { k, start: 0, width }
    }

    /// The inverse gate, drawn from the same closed set. Everything except
    /// the adder is self-inverse; the adder inverts to the complementary
    /// constant 2^width - k mod 2^width.
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::AddConst { k, start, width } => {
                let modulus = 1u64 << width;
                Gate::AddConst { k: (modulus - k % modulus) % modulus, start: *start, width: *width }
            }
            other => other.clone(),
        }
    }

    /// Checks targets against a register of `n` qubits.
    pub(crate) fn validate(&self, n: usize) -> Result<()> {
        match self {
            Gate::Hadamard { target } | Gate::PauliX { target } | Gate::PauliZ { target } => {
                if *target >= n {
                    return Err(Error::InvalidGate(format!(
                        "target qubit {target} out of range for {n}-qubit register"
                    )));
                }
            }
            Gate::PatternControlledZ { pattern } => {
                if pattern.len() != n || !pattern.bytes().all(|b| b == b'0' || b == b'1') {
                    return Err(Error::InvalidPattern { pattern: pattern.clone(), expected: n });
                }
            }
            Gate::AddConst { k, start, width } => {
                if *width == 0 || start + width > n {
                    return Err(Error::InvalidGate(format!(
                        "adder field {start}..{} out of range for {n}-qubit register",
                        start + width
                    )));
                }
                if *k >= 1u64 << width {
                    return Err(Error::InvalidConstant { k: *k, width: *width });
                }
            }
        }
        Ok(())
    }
}

/// Hadamard on every qubit; maps |0...0> to the uniform superposition.
pub fn hadamard_all(n: usize) -> Vec<Gate> {
    (0..n).map(Gate::hadamard).collect()
}

/// The mirrored inverse of a gate sequence: inverses in reverse order.
pub fn reversed_inverses(gates: &[Gate]) -> Vec<Gate> {
    gates.iter().rev().map(Gate::inverse).collect()
}
