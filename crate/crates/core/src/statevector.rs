//! Dense statevector of an n-qubit register and in-place gate application.
//!
//! Qubit 0 is the least-significant bit of the basis index. Display labels
//! are MSB-first bit strings, so index 2 on a 2-qubit register is written
//! "10". Amplitudes are double-precision complex values and no global-phase
//! normalization is performed; phase oracles make signs meaningful.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gates::Gate;
use crate::kernels;

pub const MAX_QUBITS: usize = 24;

/// 2^n complex amplitudes of an n-qubit register, unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0> on `n` qubits.
    pub fn zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    /// The basis state |index> on `n` qubits.
    pub fn basis_state(n: usize, index: u64) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidWidth(n));
        }
        let len = 1usize << n;
        assert!((index as usize) < len, "basis index out of range");
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[index as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Wraps raw amplitudes; the length must be 2^n for 1 <= n <= 24.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidWidth(0));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_QUBITS {
            return Err(Error::InvalidWidth(n));
        }
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm(&self) -> f64 {
        kernels::norm_sqr(&self.amps).sqrt()
    }

    /// Applies one gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n)?;
        match gate {
            Gate::Hadamard { target } => kernels::hadamard(&mut self.amps, *target),
            Gate::PauliX { target } => kernels::pauli_x(&mut self.amps, *target),
            Gate::PauliZ { target } => kernels::pauli_z(&mut self.amps, *target),
            Gate::PatternControlledZ { pattern } => {
                let idx = label_to_index(pattern).expect("validated pattern");
                self.amps[idx as usize] = -self.amps[idx as usize];
            }
            Gate::AddConst { k, start, width } => {
                kernels::add_const(&mut self.amps, *k, *start, *width)
            }
        }
        Ok(())
    }

    pub fn apply_all(&mut self, gates: &[Gate]) -> Result<()> {
        for g in gates {
            self.apply(g)?;
        }
        Ok(())
    }

    /// |amps[i]|^2 for every basis state.
    pub fn probabilities(&self) -> Vec<f64> {
        kernels::probabilities(&self.amps)
    }

    /// Index of the most probable basis state (lowest index on ties).
    pub fn argmax(&self) -> u64 {
        let probs = self.probabilities();
        let mut best = 0usize;
        for (i, p) in probs.iter().enumerate() {
            if *p > probs[best] {
                best = i;
            }
        }
        best as u64
    }

    /// Samples `shots` measurements. Deterministic for a fixed seed; counts
    /// sum to `shots`.
    pub fn sample(&self, shots: u64, seed: u64) -> BTreeMap<String, u64> {
        let probs = self.probabilities();
        let mut cumulative = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for p in &probs {
            acc += p;
            cumulative.push(acc);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts: BTreeMap<String, u64> = BTreeMap::new();
        for _ in 0..shots {
            // 53 random bits -> uniform f64 in [0, 1)
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            let idx = cumulative.partition_point(|c| *c <= u).min(probs.len() - 1);
            *counts.entry(index_to_label(idx as u64, self.n)).or_insert(0) += 1;
        }
        counts
    }
}

/// MSB-first bit string of `index` on an `n`-qubit register.
pub fn index_to_label(index: u64, n: usize) -> String {
    (0..n).rev().map(|q| if index >> q & 1 == 1 { '1' } else { '0' }).collect()
}

/// Parses an MSB-first bit string back to its basis index.
pub fn label_to_index(label: &str) -> Result<u64> {
    if label.is_empty() || !label.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::InvalidPattern { pattern: label.to_string(), expected: label.len() });
    }
    Ok(label.bytes().fold(0u64, |acc, b| acc << 1 | u64::from(b - b'0')))
}
