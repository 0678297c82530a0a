//! Low-level amplitude kernels. Each kernel has a sequential form and, with
//! the `parallel` feature, a rayon form; the unsuffixed entry points dispatch
//! on statevector size. All parallel forms are elementwise or use ordered
//! chunk reduction, so results are bit-identical to the sequential forms.

use num_complex::Complex64;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many amplitudes the rayon overhead outweighs the work.
pub const PAR_THRESHOLD: usize = 1 << 14;

const CHUNK: usize = 1 << 12;

#[cfg(feature = "parallel")]
#[inline]
fn parallel(len: usize) -> bool {
    len >= PAR_THRESHOLD
}

// -- Hadamard butterfly -----------------------------------------------------

pub fn hadamard(amps: &mut [Complex64], target: usize) {
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        hadamard_par(amps, target);
        return;
    }
    hadamard_seq(amps, target);
}

pub fn hadamard_seq(amps: &mut [Complex64], target: usize) {
    let stride = 1usize << target;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for block in amps.chunks_mut(2 * stride) {
        let (lo, hi) = block.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            let (x, y) = (*a, *b);
            *a = (x + y) * s;
            *b = (x - y) * s;
        }
    }
}

#[cfg(feature = "parallel")]
pub fn hadamard_par(amps: &mut [Complex64], target: usize) {
    let stride = 1usize << target;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    amps.par_chunks_mut(2 * stride).for_each(|block| {
        let (lo, hi) = block.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            let (x, y) = (*a, *b);
            *a = (x + y) * s;
            *b = (x - y) * s;
        }
    });
}

// -- Pauli X (bit flip on one qubit) ----------------------------------------

pub fn pauli_x(amps: &mut [Complex64], target: usize) {
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        pauli_x_par(amps, target);
        return;
    }
    pauli_x_seq(amps, target);
}

pub fn pauli_x_seq(amps: &mut [Complex64], target: usize) {
    let stride = 1usize << target;
    for block in amps.chunks_mut(2 * stride) {
        let (lo, hi) = block.split_at_mut(stride);
        lo.swap_with_slice(hi);
    }
}

#[cfg(feature = "parallel")]
pub fn pauli_x_par(amps: &mut [Complex64], target: usize) {
    let stride = 1usize << target;
    amps.par_chunks_mut(2 * stride).for_each(|block| {
        let (lo, hi) = block.split_at_mut(stride);
        lo.swap_with_slice(hi);
    });
}

// -- Pauli Z (phase flip where the target bit is 1) -------------------------

pub fn pauli_z(amps: &mut [Complex64], target: usize) {
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        pauli_z_par(amps, target);
        return;
    }
    pauli_z_seq(amps, target);
}

pub fn pauli_z_seq(amps: &mut [Complex64], target: usize) {
    let stride = 1usize << target;
    for block in amps.chunks_mut(2 * stride) {
        for a in &mut block[stride..] {
            *a = -*a;
        }
    }
}

#[cfg(feature = "parallel")]
pub fn pauli_z_par(amps: &mut [Complex64], target: usize) {
    let stride = 1usize << target;
    amps.par_chunks_mut(2 * stride).for_each(|block| {
        for a in &mut block[stride..] {
            *a = -*a;
        }
    });
}

// -- Modular add-constant on a contiguous bit field -------------------------

/// Permutes amplitudes by |x> -> |(x + k) mod 2^width> on the bit field
/// `start..start+width` of the basis index.
pub fn add_const(amps: &mut Vec<Complex64>, k: u64, start: usize, width: usize) {
    let mask = (1u64 << width) - 1;
    let field = mask << start;
    // destination index j receives the amplitude of the pre-image x - k
    let source = |j: usize| -> usize {
        let j = j as u64;
        let x = (j >> start) & mask;
        let pre = (x.wrapping_sub(k)) & mask;
        ((j & !field) | (pre << start)) as usize
    };
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        let out: Vec<Complex64> = (0..amps.len())
            .into_par_iter()
            .map(|j| amps[source(j)])
            .collect();
        *amps = out;
        return;
    }
    let out: Vec<Complex64> = (0..amps.len()).map(|j| amps[source(j)]).collect();
    *amps = out;
}

// -- Inversion about the mean ----------------------------------------------

pub fn invert_about_mean(amps: &mut [Complex64]) {
    let mean = mean(amps);
    let two_mean = mean * 2.0;
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        amps.par_iter_mut().for_each(|a| *a = two_mean - *a);
        return;
    }
    for a in amps.iter_mut() {
        *a = two_mean - *a;
    }
}

/// Mean amplitude, reduced over fixed-size chunks in order so the parallel
/// path sums in the same association as the sequential one.
pub fn mean(amps: &[Complex64]) -> Complex64 {
    let total = sum_chunked(amps);
    total / amps.len() as f64
}

fn sum_chunked(amps: &[Complex64]) -> Complex64 {
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        let partials: Vec<Complex64> = amps
            .par_chunks(CHUNK)
            .map(|c| c.iter().sum())
            .collect();
        return partials.iter().sum();
    }
    amps.chunks(CHUNK).map(|c| c.iter().sum::<Complex64>()).sum()
}

// -- Norm and probabilities -------------------------------------------------

pub fn norm_sqr(amps: &[Complex64]) -> f64 {
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        let partials: Vec<f64> = amps
            .par_chunks(CHUNK)
            .map(|c| c.iter().map(|a| a.norm_sqr()).sum())
            .collect();
        return partials.iter().sum();
    }
    amps.chunks(CHUNK)
        .map(|c| c.iter().map(|a| a.norm_sqr()).sum::<f64>())
        .sum()
}

pub fn probabilities(amps: &[Complex64]) -> Vec<f64> {
    #[cfg(feature = "parallel")]
    if parallel(amps.len()) {
        return amps.par_iter().map(|a| a.norm_sqr()).collect();
    }
    amps.iter().map(|a| a.norm_sqr()).collect()
}
