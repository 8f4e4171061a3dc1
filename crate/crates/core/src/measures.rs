//! Bipartite correlation measures: concurrence, Tsallis-q entropy and
//! entanglement, and a numeric search for the Tsallis-q entanglement of
//! assistance.

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::qstate::{DensityMatrix, PureState, SchmidtParams};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Joint and pairwise values of one measure on the three-qubit Schmidt family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyCorrelations {
    /// Value across the `A|BC` cut.
    pub q_joint: f64,
    pub q_ab: f64,
    pub q_ac: f64,
}

impl FamilyCorrelations {
    /// Pairwise values sorted in descending order.
    pub fn pairs_descending(&self) -> [f64; 2] {
        if self.q_ab >= self.q_ac {
            [self.q_ab, self.q_ac]
        } else {
            [self.q_ac, self.q_ab]
        }
    }
}

/// Search settings for [`teoa_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EoaConfig {
    /// Number of pure states in each candidate ensemble (raised to the rank if smaller).
    pub ensemble_size: usize,
    pub restarts: usize,
    /// Iteration cap for the local refinement of each restart.
    pub max_iterations: usize,
    /// Refinement stops once the perturbation step falls below this.
    pub step_tolerance: f64,
    pub seed: u64,
}

impl Default for EoaConfig {
    fn default() -> Self {
        Self { ensemble_size: 8, restarts: 32, max_iterations: 5000, step_tolerance: 1e-9, seed: 0 }
    }
}

/// Best value found by [`teoa_oracle`]. Always a lower bound on the true maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EoaEstimate {
    pub value: f64,
    /// False if any restart hit `max_iterations` before its step shrank below tolerance.
    pub converged: bool,
}

/// `sqrt(2 (1 - Tr rho_cut^2))` for the reduction of `state` onto `cut`.
pub fn concurrence_pure(state: &PureState, cut: &[usize]) -> Result<f64> {
    let purity = state.reduce(cut)?.purity();
    Ok((2.0 * (1.0 - purity)).max(0.0).sqrt())
}

fn spin_flip() -> Matrix4<Complex64> {
    // sigma_y ⊗ sigma_y is real: antidiagonal (-1, 1, 1, -1).
    let mut yy = Matrix4::zeros();
    yy[(0, 3)] = Complex64::new(-1.0, 0.0);
    yy[(1, 2)] = Complex64::new(1.0, 0.0);
    yy[(2, 1)] = Complex64::new(1.0, 0.0);
    yy[(3, 0)] = Complex64::new(-1.0, 0.0);
    yy
}

fn as_matrix4(dm: &DensityMatrix) -> Result<Matrix4<Complex64>> {
    if dm.dim() != 4 {
        return Err(invalid(format!("expected a two-qubit state, got dimension {}", dm.dim())));
    }
    Ok(Matrix4::from_fn(|i, j| dm.entries()[(i, j)]))
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// With `rho = W W^†` (columns of `W` are the scaled eigenvectors
/// `sqrt(p_i) e_i`), the square roots of the eigenvalues of
/// `rho (Y⊗Y) rho* (Y⊗Y)` are the singular values of the small symmetric
/// matrix `W^T (Y⊗Y) W`. Working with those singular values avoids taking
/// square roots of roundoff-level eigenvalues.
pub fn concurrence_wootters(dm: &DensityMatrix) -> Result<f64> {
    as_matrix4(dm)?;
    let columns: Vec<Vec<Complex64>> = dm
        .eigenpairs()
        .into_iter()
        .filter(|(p, _)| *p > WOOTTERS_RANK_TOL)
        .map(|(p, v)| v.into_iter().map(|z| z * p.sqrt()).collect())
        .collect();
    if columns.is_empty() {
        return Ok(0.0);
    }
    let w = DMatrix::from_fn(4, columns.len(), |i, j| columns[j][i]);
    let yy = DMatrix::from_fn(4, 4, |i, j| spin_flip()[(i, j)]);
    let tau = w.transpose() * yy * &w;
    let mut mu: Vec<f64> = tau.singular_values().iter().copied().collect();
    mu.sort_by(|a, b| b.total_cmp(a));
    let rest: f64 = mu[1..].iter().sum();
    Ok((mu[0] - rest).clamp(0.0, 1.0))
}

/// Eigenvalues of `rho` at or below this are treated as zero when factoring.
const WOOTTERS_RANK_TOL: f64 = 1e-15;

/// Tsallis-q entropy `(1 - sum p^q) / (q - 1)`, von Neumann (natural log) at `q = 1`.
///
/// Evaluated as `-sum p expm1((q-1) ln p) / (q-1)`, which stays accurate as `q -> 1`.
pub fn tsallis_entropy(dm: &DensityMatrix, q: f64) -> Result<f64> {
    check_q(q)?;
    Ok(tsallis_of_spectrum(&dm.eigenvalues(), q))
}

pub(crate) fn tsallis_of_spectrum(probs: &[f64], q: f64) -> f64 {
    let s: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| {
            let lp = p.ln();
            if q == 1.0 {
                -p * lp
            } else {
                -p * ((q - 1.0) * lp).exp_m1() / (q - 1.0)
            }
        })
        .sum();
    s.max(0.0)
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(invalid(format!("Tsallis index must be positive and finite, got {q}")));
    }
    Ok(())
}

/// Tsallis-q entanglement of a pure state across `cut`: the entropy of the cut marginal.
pub fn tsallis_entanglement_pure(state: &PureState, cut: &[usize], q: f64) -> Result<f64> {
    check_q(q)?;
    tsallis_entropy(&state.reduce(cut)?, q)
}

/// Tsallis-q entanglement of an unnormalized two-qubit vector `w`, divided through by `|w|^2`.
fn tsallis_two_qubit(w: &[Complex64; 4], norm_sqr: f64, q: f64) -> f64 {
    let det = (w[0] * w[3] - w[1] * w[2]).norm() / norm_sqr;
    // Marginal spectrum (1 ± sqrt(1 - 4 det^2)) / 2.
    let disc = (1.0 - 4.0 * det * det).max(0.0).sqrt();
    tsallis_of_spectrum(&[0.5 * (1.0 + disc), 0.5 * (1.0 - disc)], q)
}

/// Lower bound on the Tsallis-q entanglement of assistance of a two-qubit state.
///
/// Every size-`m` ensemble of a rank-`r` state is obtained from the scaled
/// eigenvectors `v_i = sqrt(p_i) e_i` through an `m×r` isometry `U`:
/// `w_k = sum_i U_ki v_i`. Restart 0 starts from the eigen-ensemble, the rest
/// from random isometries; each is refined by random isometry perturbations
/// with a decaying step. Restart `i` draws from its own seed, so adding
/// restarts never lowers the result.
pub fn teoa_oracle(dm: &DensityMatrix, q: f64, config: &EoaConfig) -> Result<EoaEstimate> {
    check_q(q)?;
    if dm.dim() != 4 {
        return Err(invalid(format!("expected a two-qubit state, got dimension {}", dm.dim())));
    }
    if config.ensemble_size == 0 || config.restarts == 0 {
        return Err(invalid("ensemble_size and restarts must be at least 1"));
    }
    if config.step_tolerance.is_nan() || config.step_tolerance <= 0.0 {
        return Err(invalid("step_tolerance must be positive"));
    }

    let scaled: Vec<[Complex64; 4]> = dm
        .eigenpairs()
        .into_iter()
        .filter(|(p, _)| *p > 1e-14)
        .map(|(p, v)| {
            let s = p.sqrt();
            [v[0] * s, v[1] * s, v[2] * s, v[3] * s]
        })
        .collect();
    let rank = scaled.len();
    let m = config.ensemble_size.max(rank);
    let objective = |u: &DMatrix<Complex64>| ensemble_value(u, &scaled, q);

    let mut best = f64::NEG_INFINITY;
    let mut converged = true;
    for restart in 0..config.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, restart as u64));
        let start = if restart == 0 {
            DMatrix::from_fn(m, rank, |i, j| if i == j { Complex64::new(1.0, 0.0) } else { ZERO })
        } else {
            random_isometry(m, rank, &mut rng)
        };
        let (value, done) = refine(start, &objective, config, &mut rng);
        best = best.max(value);
        converged &= done;
    }
    Ok(EoaEstimate { value: best, converged })
}

fn ensemble_value(u: &DMatrix<Complex64>, scaled: &[[Complex64; 4]], q: f64) -> f64 {
    let mut total = 0.0;
    for k in 0..u.nrows() {
        let mut w = [ZERO; 4];
        for (i, v) in scaled.iter().enumerate() {
            let c = u[(k, i)];
            for (wa, va) in w.iter_mut().zip(v) {
                *wa += c * va;
            }
        }
        let p: f64 = w.iter().map(|z| z.norm_sqr()).sum();
        if p > 1e-300 {
            total += p * tsallis_two_qubit(&w, p, q);
        }
    }
    total
}

fn refine<F>(mut u: DMatrix<Complex64>, objective: &F, config: &EoaConfig, rng: &mut ChaCha8Rng) -> (f64, bool)
where
    F: Fn(&DMatrix<Complex64>) -> f64,
{
    const FAILURES_PER_DECAY: usize = 20;
    let mut value = objective(&u);
    let mut step = 0.5;
    let mut failures = 0;
    for _ in 0..config.max_iterations {
        if step < config.step_tolerance {
            return (value, true);
        }
        let noise = gaussian_matrix(u.nrows(), u.ncols(), rng);
        let candidate = orthonormalize_columns(&u + noise * Complex64::new(step, 0.0));
        let v = objective(&candidate);
        if v > value {
            u = candidate;
            value = v;
            failures = 0;
        } else {
            failures += 1;
            if failures == FAILURES_PER_DECAY {
                step *= 0.5;
                failures = 0;
            }
        }
    }
    (value, step < config.step_tolerance)
}

fn gaussian_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

fn random_isometry(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    orthonormalize_columns(gaussian_matrix(rows, cols, rng))
}

/// Modified Gram-Schmidt on the columns.
fn orthonormalize_columns(mut a: DMatrix<Complex64>) -> DMatrix<Complex64> {
    for j in 0..a.ncols() {
        for i in 0..j {
            let proj = a.column(i).dotc(&a.column(j));
            let ci = a.column(i).clone_owned();
            a.column_mut(j).axpy(-proj, &ci, Complex64::new(1.0, 0.0));
        }
        let n = a.column(j).norm();
        a.column_mut(j).unscale_mut(n);
    }
    a
}

/// SplitMix64 finalizer over `(seed, index)`.
pub(crate) fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Closed-form concurrences of the Schmidt family, in the published B/C labeling:
/// `C_{A|BC} = 2 l0 sqrt(l2^2 + l3^2 + l4^2)`, `C_AB = 2 l0 l2`, `C_AC = 2 l0 l3`.
pub fn family_correlations_concurrence(params: &SchmidtParams) -> FamilyCorrelations {
    let [l0, _, l2, l3, l4] = params.lambdas();
    FamilyCorrelations {
        q_joint: 2.0 * l0 * (l2 * l2 + l3 * l3 + l4 * l4).sqrt(),
        q_ab: 2.0 * l0 * l2,
        q_ac: 2.0 * l0 * l3,
    }
}

/// Closed-form Tsallis-2 entanglement of assistance of the Schmidt family, in
/// the published labeling.
pub fn family_correlations_teoa2(params: &SchmidtParams) -> FamilyCorrelations {
    let [l0, _, l2, l3, l4] = params.lambdas();
    let l0s = l0 * l0;
    FamilyCorrelations {
        q_joint: 2.0 * l0s * (l2 * l2 + l3 * l3 + l4 * l4),
        q_ab: 2.0 * l0s * (l2 * l2 + l4 * l4),
        q_ac: 2.0 * l0s * (l3 * l3 + l4 * l4),
    }
}
