use thiserror::Error;

/// Errors raised by statevector construction, gate application and the
/// Grover planning arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid register width {0}: must be between 1 and 24 qubits")]
    InvalidWidth(usize),
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("invalid add constant {k}: must satisfy 0 <= k < 2^{width}")]
    InvalidConstant { k: u64, width: usize },
    #[error("invalid pattern {pattern:?}: expected {expected} binary digits")]
    InvalidPattern { pattern: String, expected: usize },
    #[error("invalid problem: constant {value} does not fit in {n} bits")]
    InvalidProblem { value: u64, n: usize },
    #[error("solution count must be at least 1")]
    NoSolutions,
    #[error("solution count {l} exceeds state count {state_count}")]
    InvalidCount { l: u64, state_count: u64 },
    #[error("speedup ratio undefined: planned iteration count is 0")]
    UndefinedRatio,
    #[error("state width {state} does not match oracle width {oracle}")]
    WidthMismatch { state: usize, oracle: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
