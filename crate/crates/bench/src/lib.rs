//! Fixtures shared by the benchmarks.

use monogamy_core::qstate::haar_random_state;
use monogamy_core::{CoeffParams, CorrelationVector, PureState};

pub fn coeffs() -> CoeffParams {
    CoeffParams::new(0.9, 2.0, 2.0).expect("valid constants")
}

/// Geometric vector `v[j] = 0.8^j * 0.9`, which satisfies the pairwise hypothesis.
pub fn chain_vector(n: usize) -> CorrelationVector {
    CorrelationVector::new((0..n).map(|j| 0.9 * 0.8f64.powi(j as i32)).collect()).expect("valid vector")
}

pub fn haar_state(num_qubits: usize, seed: u64) -> PureState {
    haar_random_state(num_qubits, seed).expect("valid qubit count")
}
