//! Dense few-qubit states.
//!
//! Qubit 0 is the leftmost label in ket notation, so `|q0 q1 q2>` has basis
//! index `q0*4 + q1*2 + q2` (big-endian).

use std::f64::consts::TAU;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{invalid, Result};

/// Largest supported register.
pub const MAX_QUBITS: usize = 12;

/// Tolerance for constructive identities (normalization, trace, hermiticity).
pub const IDENTITY_TOL: f64 = 1e-12;

/// Tolerance for spectral quantities. Eigenvalues in `(-SPECTRAL_TOL, 0)` are
/// clamped to zero.
pub const SPECTRAL_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A normalized state vector on `num_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps `amplitudes`, which must already be normalized.
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_register(num_qubits)?;
        if amplitudes.len() != 1 << num_qubits {
            return Err(invalid(format!("{} amplitudes given for {num_qubits} qubits", amplitudes.len())));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > IDENTITY_TOL {
            return Err(invalid(format!("state norm^2 is {norm_sqr}, expected 1")));
        }
        Ok(Self { num_qubits, amplitudes })
    }

    /// Rescales `amplitudes` to unit norm.
    pub fn normalized(num_qubits: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(invalid("cannot normalize a zero or non-finite vector"));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::new(num_qubits, amplitudes)
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_register(num_qubits)?;
        let dim = 1 << num_qubits;
        if index >= dim {
            return Err(invalid(format!("basis index {index} out of range for dim {dim}")));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { num_qubits, amplitudes })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `self ⊗ other`, with `other` occupying the higher qubit indices.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let num_qubits = self.num_qubits + other.num_qubits;
        check_register(num_qubits)?;
        let amplitudes = self.amplitudes.iter().flat_map(|a| other.amplitudes.iter().map(move |b| a * b)).collect();
        Ok(PureState { num_qubits, amplitudes })
    }

    /// Reduced density matrix on `keep`.
    ///
    /// Works directly on the amplitudes: `rho[i][j] = sum_e psi[i,e] conj(psi[j,e])`.
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let split = QubitSplit::new(self.num_qubits, keep)?;
        let kept_dim = split.kept.len();
        let mut rho = DMatrix::from_element(kept_dim, kept_dim, ZERO);
        for (i, &ki) in split.kept.iter().enumerate() {
            for (j, &kj) in split.kept.iter().enumerate().skip(i) {
                let s: Complex64 =
                    split.traced.iter().map(|&e| self.amplitudes[ki | e] * self.amplitudes[kj | e].conj()).sum();
                rho[(i, j)] = s;
                rho[(j, i)] = s.conj();
            }
        }
        Ok(DensityMatrix { entries: rho })
    }
}

/// A Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates `entries` against the density-matrix invariants.
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        let dim = entries.nrows();
        if dim == 0 || entries.ncols() != dim {
            return Err(invalid(format!(
                "density matrix must be square and nonempty, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        if dim > 1 << MAX_QUBITS {
            return Err(invalid(format!("dimension {dim} exceeds 2^{MAX_QUBITS}")));
        }
        for i in 0..dim {
            for j in i..dim {
                if (entries[(i, j)] - entries[(j, i)].conj()).norm() > IDENTITY_TOL {
                    return Err(invalid(format!("matrix is not Hermitian at ({i}, {j})")));
                }
            }
        }
        let trace: Complex64 = entries.diagonal().iter().sum();
        if (trace - Complex64::new(1.0, 0.0)).norm() > IDENTITY_TOL {
            return Err(invalid(format!("trace is {trace}, expected 1")));
        }
        let dm = Self { entries };
        let min_eig = dm.raw_eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min_eig < -SPECTRAL_TOL {
            return Err(invalid(format!("matrix has negative eigenvalue {min_eig:e}")));
        }
        Ok(dm)
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 || dim > 1 << MAX_QUBITS {
            return Err(invalid(format!("unsupported dimension {dim}")));
        }
        let p = Complex64::new(1.0 / dim as f64, 0.0);
        Ok(Self { entries: DMatrix::from_diagonal_element(dim, dim, p) })
    }

    /// Diagonal (classical) state with the given probabilities.
    pub fn from_probabilities(probs: &[f64]) -> Result<Self> {
        if probs.iter().any(|&p| p < 0.0 || !p.is_finite()) {
            return Err(invalid("probabilities must be finite and nonnegative"));
        }
        let diag = nalgebra::DVector::from_iterator(probs.len(), probs.iter().map(|&p| Complex64::new(p, 0.0)));
        Self::new(DMatrix::from_diagonal(&diag))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    /// Number of qubits if the dimension is a power of two.
    pub fn num_qubits(&self) -> Option<usize> {
        let dim = self.dim();
        dim.is_power_of_two().then(|| dim.trailing_zeros() as usize)
    }

    /// Eigenvalues in descending order, with roundoff negatives clamped to 0.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut eig: Vec<f64> = self.raw_eigenvalues().into_iter().map(clamp_spectral).collect();
        eig.sort_by(|a, b| b.total_cmp(a));
        eig
    }

    /// Eigenpairs `(p_i, |e_i>)` in descending order of `p_i`, eigenvalues clamped.
    pub fn eigenpairs(&self) -> Vec<(f64, Vec<Complex64>)> {
        let eig = SymmetricEigen::new(self.entries.clone());
        let mut pairs: Vec<(f64, Vec<Complex64>)> = eig
            .eigenvalues
            .iter()
            .zip(eig.eigenvectors.column_iter())
            .map(|(&p, v)| (clamp_spectral(p), v.iter().copied().collect()))
            .collect();
        pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
        pairs
    }

    fn raw_eigenvalues(&self) -> Vec<f64> {
        SymmetricEigen::new(self.entries.clone()).eigenvalues.iter().copied().collect()
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        // Hermitian, so Tr(rho^2) = sum |rho_ij|^2.
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let dim = self.dim() * other.dim();
        if dim > 1 << MAX_QUBITS {
            return Err(invalid(format!("tensor product dimension {dim} exceeds 2^{MAX_QUBITS}")));
        }
        Ok(DensityMatrix { entries: self.entries.kronecker(&other.entries) })
    }

    /// Reduced density matrix on `keep`.
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let num_qubits =
            self.num_qubits().ok_or_else(|| invalid(format!("dimension {} is not a qubit register", self.dim())))?;
        let split = QubitSplit::new(num_qubits, keep)?;
        let kept_dim = split.kept.len();
        let rho = DMatrix::from_fn(kept_dim, kept_dim, |i, j| {
            let (ki, kj) = (split.kept[i], split.kept[j]);
            split.traced.iter().map(|&e| self.entries[(ki | e, kj | e)]).sum()
        });
        Ok(DensityMatrix { entries: rho })
    }
}

/// Borrowed view over either state representation.
#[derive(Debug, Clone, Copy)]
pub enum StateRef<'a> {
    Pure(&'a PureState),
    Mixed(&'a DensityMatrix),
}

impl<'a> From<&'a PureState> for StateRef<'a> {
    fn from(s: &'a PureState) -> Self {
        StateRef::Pure(s)
    }
}

impl<'a> From<&'a DensityMatrix> for StateRef<'a> {
    fn from(s: &'a DensityMatrix) -> Self {
        StateRef::Mixed(s)
    }
}

/// Generalized Schmidt amplitudes of a three-qubit pure state:
/// `l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtParams {
    lambdas: [f64; 5],
    phi: f64,
}

impl SchmidtParams {
    /// `phi` is reduced into `[0, 2pi)`.
    pub fn new(lambdas: [f64; 5], phi: f64) -> Result<Self> {
        if lambdas.iter().any(|&l| l < 0.0 || !l.is_finite()) {
            return Err(invalid("Schmidt amplitudes must be finite and nonnegative"));
        }
        if !phi.is_finite() {
            return Err(invalid("phase must be finite"));
        }
        let norm_sqr: f64 = lambdas.iter().map(|l| l * l).sum();
        if (norm_sqr - 1.0).abs() > IDENTITY_TOL {
            return Err(invalid(format!("sum of squared amplitudes is {norm_sqr}, expected 1")));
        }
        Ok(Self { lambdas, phi: phi.rem_euclid(TAU) })
    }

    /// `l0 = l3 = 1/2`, `l2 = sqrt(2)/2`, `l1 = l4 = 0`.
    pub fn worked_example() -> Self {
        Self { lambdas: [0.5, 0.0, std::f64::consts::FRAC_1_SQRT_2, 0.5, 0.0], phi: 0.0 }
    }

    /// Uniform on the positive orthant of the unit 4-sphere, phase uniform.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut lambdas = [0.0; 5];
            for l in &mut lambdas {
                let g: f64 = rng.sample(StandardNormal);
                *l = g.abs();
            }
            let norm = lambdas.iter().map(|l| l * l).sum::<f64>().sqrt();
            if norm < 1e-150 {
                continue;
            }
            lambdas.iter_mut().for_each(|l| *l /= norm);
            let phi = rng.random_range(0.0..TAU);
            if let Ok(p) = Self::new(lambdas, phi) {
                return p;
            }
        }
    }

    pub fn lambdas(&self) -> [f64; 5] {
        self.lambdas
    }

    pub fn lambda(&self, i: usize) -> f64 {
        self.lambdas[i]
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Builds the three-qubit generalized Schmidt state.
pub fn schmidt_state(params: &SchmidtParams) -> PureState {
    let [l0, l1, l2, l3, l4] = params.lambdas;
    let mut amplitudes = vec![ZERO; 8];
    amplitudes[0b000] = Complex64::new(l0, 0.0);
    amplitudes[0b100] = Complex64::from_polar(l1, params.phi);
    amplitudes[0b101] = Complex64::new(l2, 0.0);
    amplitudes[0b110] = Complex64::new(l3, 0.0);
    amplitudes[0b111] = Complex64::new(l4, 0.0);
    PureState { num_qubits: 3, amplitudes }
}

/// `|psi><psi|`.
pub fn density_of(state: &PureState) -> DensityMatrix {
    let psi = nalgebra::DVector::from_column_slice(&state.amplitudes);
    DensityMatrix { entries: &psi * psi.adjoint() }
}

/// Traces out every qubit not in `keep`. `total_qubits` must match the state.
pub fn partial_trace<'a>(state: impl Into<StateRef<'a>>, total_qubits: usize, keep: &[usize]) -> Result<DensityMatrix> {
    match state.into() {
        StateRef::Pure(s) => {
            if s.num_qubits != total_qubits {
                return Err(invalid(format!("state has {} qubits, caller claimed {total_qubits}", s.num_qubits)));
            }
            s.reduce(keep)
        }
        StateRef::Mixed(dm) => {
            if dm.num_qubits() != Some(total_qubits) {
                return Err(invalid(format!(
                    "density matrix of dimension {} is not a {total_qubits}-qubit state",
                    dm.dim()
                )));
            }
            dm.reduce(keep)
        }
    }
}

/// Normalized vector of i.i.d. standard complex Gaussians, seeded.
pub fn haar_random_state(num_qubits: usize, seed: u64) -> Result<PureState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_random_state_with(num_qubits, &mut rng)
}

/// As [`haar_random_state`], drawing from a caller-owned generator.
pub fn haar_random_state_with<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> Result<PureState> {
    check_register(num_qubits)?;
    let amplitudes: Vec<Complex64> = (0..1usize << num_qubits)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(num_qubits, amplitudes)
}

/// `Tr(rho^2)`, in `[1/dim, 1]`.
pub fn purity(dm: &DensityMatrix) -> f64 {
    dm.purity()
}

fn check_register(num_qubits: usize) -> Result<()> {
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(invalid(format!("register size {num_qubits} outside 1..={MAX_QUBITS}")));
    }
    Ok(())
}

fn clamp_spectral(p: f64) -> f64 {
    if p < 0.0 && p > -SPECTRAL_TOL {
        0.0
    } else {
        p
    }
}

/// Basis-index offsets for the kept and traced halves of a register.
struct QubitSplit {
    kept: Vec<usize>,
    traced: Vec<usize>,
}

impl QubitSplit {
    fn new(num_qubits: usize, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() || keep.len() >= num_qubits {
            return Err(invalid(format!(
                "keep set must be a nonempty strict subset of {num_qubits} qubits, got {keep:?}"
            )));
        }
        let mut mask = 0usize;
        for &q in keep {
            if q >= num_qubits {
                return Err(invalid(format!("qubit {q} out of range for {num_qubits} qubits")));
            }
            let bit = 1 << (num_qubits - 1 - q);
            if mask & bit != 0 {
                return Err(invalid(format!("qubit {q} listed twice in keep set")));
            }
            mask |= bit;
        }
        let full = (1usize << num_qubits) - 1;
        Ok(Self { kept: subset_offsets(mask), traced: subset_offsets(full & !mask) })
    }
}

/// Every index whose set bits lie inside `mask`, in increasing order.
/// Increasing order of the submask equals big-endian order of the kept qubits.
fn subset_offsets(mask: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(1 << mask.count_ones());
    let mut sub = 0usize;
    loop {
        out.push(sub);
        if sub == mask {
            break;
        }
        sub = (sub.wrapping_sub(mask)) & mask;
    }
    out
}
