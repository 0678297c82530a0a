//! Statevector simulation of Grover's search algorithm with phase oracles
//! built from reversible arithmetic, solving equations of the form
//! `(x + a) mod 2^n = b`.
//!
//! The oracle follows the compute / phase-flip / uncompute pattern: an
//! in-place modular adder shifts the register, a pattern-controlled Z
//! negates the amplitude of the basis state matching `b`, and the mirrored
//! inverse adder restores the register. The full Grover loop (uniform
//! superposition, oracle, inversion about the mean) runs on a dense
//! double-precision statevector of up to 24 qubits.
//!
//! Every run can be cross-checked against classical brute-force search and
//! the closed-form success probability `sin^2((2k+1) asin(sqrt(l/N)))`.

pub mod cli;
pub mod error;
pub mod gates;
pub mod grover;
#[doc(hidden)]
pub mod kernels;
pub mod oracle;
pub mod statevector;
pub mod verify;

pub use error::Error;
pub use gates::Gate;
pub use grover::{GroverPlan, RunReport};
pub use oracle::{EquationProblem, Oracle};
pub use statevector::StateVector;
