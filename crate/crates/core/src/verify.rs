//! End-to-end checks: random sweeps over states, correlation vectors and the
//! Schmidt family, plus the two figure tables and the lemma grid.
//!
//! Every sample draws from its own generator seeded by `(seed, index)`, so
//! parallel evaluation returns the same reports in the same order as a
//! serial run.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    self, baseline_rhs, monogamy_condition, monogamy_rhs_cor1, monogamy_rhs_thm1, polygamy_rhs_cor3, polygamy_rhs_thm2,
    tail_condition, BaselineKind, CoeffParams, ConditionReport, CorrelationVector,
};
use crate::error::{invalid, Result};
use crate::measures::{
    concurrence_pure, concurrence_wootters, family_correlations_concurrence, family_correlations_teoa2, mix_seed,
    teoa_oracle, tsallis_entanglement_pure, EoaConfig, FamilyCorrelations,
};
use crate::qstate::{haar_random_state_with, schmidt_state, PureState, SchmidtParams};

/// Slack tolerance for state-derived checks.
pub const STATE_SLACK_TOL: f64 = 1e-10;

/// Slack tolerance for pure arithmetic checks.
pub const ARITH_SLACK_TOL: f64 = 1e-12;

/// Rejection sampling gives up after this many attempts per requested sample.
pub const REJECTION_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    States,
    Vectors,
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Concurrence,
    Tsallis2Assist,
}

impl Measure {
    /// Concurrence is checked as a monogamy relation, Tsallis-2 assistance as polygamy.
    pub fn direction(self) -> Direction {
        match self {
            Measure::Concurrence => Direction::Monogamy,
            Measure::Tsallis2Assist => Direction::Polygamy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Joint term bounded from below.
    Monogamy,
    /// Joint term bounded from above.
    Polygamy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorSampler {
    /// Uniform components on `[0, 1]`, sorted descending.
    SortedUniform,
    /// `v[0]` uniform, `v[j+1] = k^delta * u * v[j]` with `u` uniform on
    /// `[0, 1]` plus point masses at 1 (condition saturated) and 0 (zero tail).
    GeometricChain,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub samples: usize,
    /// Number of `B` parties in vectors mode; total parties (including `A`) in states mode.
    pub num_parties: usize,
    pub coeffs: CoeffParams,
    pub exponents: Vec<f64>,
    pub seed: u64,
    pub measure: Measure,
    /// Used by vectors mode; the other modes take the measure's direction.
    pub direction: Direction,
    pub sampler: VectorSampler,
    /// Entanglement-of-assistance search for the family diagnostic; `None` skips it.
    pub eoa: Option<EoaConfig>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(invalid("samples must be at least 1"));
        }
        if self.num_parties < 2 {
            return Err(invalid("num_parties must be at least 2"));
        }
        if self.exponents.is_empty() {
            return Err(invalid("at least one exponent is required"));
        }
        Ok(())
    }

    fn effective_direction(&self) -> Direction {
        match self.mode {
            SweepMode::Vectors => self.direction,
            _ => self.measure.direction(),
        }
    }
}

/// Bounds that appear in a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Hamming-weight bound at the configured `delta`.
    Theorem,
    /// Index-power bound (claimed under the tail condition).
    Corollary,
    Baseline(BaselineKind),
}

/// One `(sample, exponent)` comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub sample_index: usize,
    pub exponent: f64,
    pub direction: Direction,
    /// Pairwise correlations after descending relabeling.
    pub values: Vec<f64>,
    /// Joint term raised to the exponent (vectors mode: `(sum Q^gamma)^(x/gamma)`).
    pub lhs: f64,
    pub condition: ConditionReport,
    pub tail_condition_holds: bool,
    pub rhs_thm: f64,
    /// Monogamy: always evaluated. Polygamy: only when the tail condition holds.
    pub rhs_cor: Option<f64>,
    pub rhs_baselines: BTreeMap<BaselineKind, f64>,
    /// `lhs - rhs_thm` (monogamy) or `rhs_thm - lhs` (polygamy).
    pub slack: f64,
    /// False when the hypothesis fails; the bound is then not claimed.
    pub claimed: bool,
    /// Theorem vs baselines vs corollary ordering held on this sample.
    pub chain_holds: bool,
    /// A zero correlation was raised to exponent zero.
    pub zero_power: bool,
    /// Bounds ordered tightest first.
    pub tightness_rank: Vec<BoundKind>,
    /// Closed form vs first-principles value (family mode).
    pub residual: Option<f64>,
    /// Closed form vs the assistance search (family mode, Tsallis only; not asserted).
    pub diagnostic_residual: Option<f64>,
}

impl BoundReport {
    pub fn rhs_plain(&self) -> Option<f64> {
        self.rhs_baselines.get(&BaselineKind::PlainSum).copied()
    }

    pub fn rhs_delta1(&self) -> Option<f64> {
        self.rhs_baselines.get(&BaselineKind::HammingDelta1).copied()
    }

    /// A claimed bound whose slack is below `-tol`.
    pub fn violates(&self, tol: f64) -> bool {
        self.claimed && self.slack < -tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub reports: Vec<BoundReport>,
    /// Candidates drawn (vectors mode may draw more than `samples`).
    pub attempts: usize,
    pub condition_passed: usize,
    pub condition_failed: usize,
}

impl SweepResult {
    pub fn acceptance_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.condition_passed as f64 / self.attempts as f64
        }
    }

    pub fn violations(&self, tol: f64) -> impl Iterator<Item = &BoundReport> {
        self.reports.iter().filter(move |r| r.violates(tol))
    }
}

/// Evaluates every bound on a descending correlation vector against `lhs`.
pub fn bound_report(
    sample_index: usize,
    values: &CorrelationVector,
    lhs: f64,
    exponent: f64,
    direction: Direction,
    coeffs: &CoeffParams,
    with_alpha_half: bool,
) -> Result<BoundReport> {
    let condition = monogamy_condition(values, coeffs);
    let tail_holds = tail_condition(values, coeffs).holds;
    let mut rhs_baselines = BTreeMap::new();
    rhs_baselines.insert(BaselineKind::PlainSum, baseline_rhs(values, exponent, BaselineKind::PlainSum, coeffs)?);
    rhs_baselines
        .insert(BaselineKind::HammingDelta1, baseline_rhs(values, exponent, BaselineKind::HammingDelta1, coeffs)?);

    let (rhs_thm, rhs_cor, slack) = match direction {
        Direction::Monogamy => {
            if with_alpha_half && exponent >= 2.0 {
                rhs_baselines.insert(
                    BaselineKind::AlphaHalfPowers,
                    baseline_rhs(values, exponent, BaselineKind::AlphaHalfPowers, coeffs)?,
                );
            }
            let thm = monogamy_rhs_thm1(values, exponent, coeffs)?;
            let cor = monogamy_rhs_cor1(values, exponent, coeffs)?;
            (thm, Some(cor), lhs - thm)
        }
        Direction::Polygamy => {
            let thm = polygamy_rhs_thm2(values, exponent, coeffs)?;
            let cor = polygamy_rhs_cor3(values, exponent, coeffs).ok();
            (thm, cor, thm - lhs)
        }
    };

    let close = |a: f64, b: f64| a >= b - ARITH_SLACK_TOL * a.abs().max(b.abs()).max(1.0);
    let plain = rhs_baselines[&BaselineKind::PlainSum];
    let delta1 = rhs_baselines[&BaselineKind::HammingDelta1];
    let chain_holds = match direction {
        Direction::Monogamy => {
            close(rhs_thm, delta1) && close(delta1, plain) && rhs_cor.is_none_or(|c| close(c, rhs_thm))
        }
        Direction::Polygamy => close(delta1, rhs_thm) && rhs_cor.is_none_or(|c| close(rhs_thm, c)),
    };

    let mut ranked: Vec<(BoundKind, f64)> = vec![(BoundKind::Theorem, rhs_thm)];
    if tail_holds {
        if let Some(c) = rhs_cor {
            ranked.push((BoundKind::Corollary, c));
        }
    }
    ranked.extend(rhs_baselines.iter().map(|(k, v)| (BoundKind::Baseline(*k), *v)));
    match direction {
        Direction::Monogamy => ranked.sort_by(|a, b| b.1.total_cmp(&a.1)),
        Direction::Polygamy => ranked.sort_by(|a, b| a.1.total_cmp(&b.1)),
    }

    Ok(BoundReport {
        sample_index,
        exponent,
        direction,
        values: values.values().to_vec(),
        lhs,
        claimed: condition.holds,
        condition,
        tail_condition_holds: tail_holds,
        rhs_thm,
        rhs_cor,
        rhs_baselines,
        slack,
        chain_holds,
        zero_power: bounds::zero_power_triggered(values, exponent),
        tightness_rank: ranked.into_iter().map(|(k, _)| k).collect(),
        residual: None,
        diagnostic_residual: None,
    })
}

fn power(x: f64, e: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(seed, index as u64))
}

fn tally(reports: Vec<Vec<BoundReport>>, attempts: usize) -> SweepResult {
    let mut passed = 0;
    let mut failed = 0;
    for per_sample in &reports {
        match per_sample.first() {
            Some(r) if r.claimed => passed += 1,
            Some(_) => failed += 1,
            None => {}
        }
    }
    SweepResult {
        reports: reports.into_iter().flatten().collect(),
        attempts,
        condition_passed: passed,
        condition_failed: failed,
    }
}

/// Concurrence reports for one three-qubit state: `C_{A|BC}` from the pure
/// state, `C_AB` and `C_AC` by Wootters, pairs relabeled descending.
pub fn evaluate_state(
    state: &PureState,
    sample_index: usize,
    coeffs: &CoeffParams,
    exponents: &[f64],
) -> Result<Vec<BoundReport>> {
    if state.num_qubits() != 3 {
        return Err(invalid("state sweeps use three-qubit states"));
    }
    let joint = concurrence_pure(state, &[0])?;
    let c_ab = concurrence_wootters(&state.reduce(&[0, 1])?)?;
    let c_ac = concurrence_wootters(&state.reduce(&[0, 2])?)?;
    let v = CorrelationVector::new(vec![c_ab, c_ac])?.with_joint(joint)?.sorted_descending();
    exponents
        .iter()
        .map(|&a| bound_report(sample_index, &v, power(joint, a), a, Direction::Monogamy, coeffs, true))
        .collect()
}

/// Monogamy of concurrence on Haar-random three-qubit states.
pub fn sweep_random_states(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    if config.measure != Measure::Concurrence || config.num_parties != 3 {
        return Err(invalid("state sweeps support only the concurrence measure on three parties"));
    }
    let per_sample: Vec<Vec<BoundReport>> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(config.seed, i);
            let state = haar_random_state_with(3, &mut rng)?;
            evaluate_state(&state, i, &config.coeffs, &config.exponents)
        })
        .collect::<Result<_>>()?;
    Ok(tally(per_sample, config.samples))
}

/// One candidate correlation vector for attempt `index`.
pub fn sample_vector(config: &SweepConfig, index: usize) -> CorrelationVector {
    let mut rng = sample_rng(config.seed, index);
    let n = config.num_parties;
    let values = match config.sampler {
        VectorSampler::SortedUniform => {
            let mut v: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
            v.sort_by(|a, b| b.total_cmp(a));
            v
        }
        VectorSampler::GeometricChain => {
            let kd = config.coeffs.k_delta();
            let mut v = Vec::with_capacity(n);
            let mut cur: f64 = rng.random();
            v.push(cur);
            for _ in 1..n {
                let roll: f64 = rng.random();
                let u = if roll < 0.125 {
                    1.0
                } else if roll < 0.1875 {
                    0.0
                } else {
                    rng.random()
                };
                cur = kd * cur * u;
                v.push(cur);
            }
            v
        }
    };
    CorrelationVector::new(values).expect("sampled values are in [0, 1]")
}

/// Algebraic cores on random condition-satisfying vectors.
pub fn sweep_random_vectors(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let direction = config.effective_direction();
    let gamma = config.coeffs.gamma();
    for &x in &config.exponents {
        let ok = match direction {
            Direction::Monogamy => x >= gamma,
            Direction::Polygamy => (0.0..=gamma).contains(&x),
        };
        if !ok {
            return Err(invalid(format!("exponent {x} is out of range for {direction:?} with gamma = {gamma}")));
        }
    }

    let cap = config.samples.saturating_mul(REJECTION_CAP);
    let mut accepted: Vec<(usize, CorrelationVector)> = Vec::with_capacity(config.samples);
    let mut attempts = 0;
    while accepted.len() < config.samples && attempts < cap {
        let batch = (config.samples - accepted.len()).max(64).min(cap - attempts);
        let found: Vec<(usize, CorrelationVector)> = (attempts..attempts + batch)
            .into_par_iter()
            .filter_map(|i| {
                let v = sample_vector(config, i);
                monogamy_condition(&v, &config.coeffs).holds.then_some((i, v))
            })
            .collect();
        attempts += batch;
        accepted.extend(found);
    }
    accepted.truncate(config.samples);
    if let Some((last, _)) = accepted.last() {
        if accepted.len() == config.samples {
            attempts = last + 1;
        }
    }

    let per_sample: Vec<Vec<BoundReport>> = accepted
        .par_iter()
        .enumerate()
        .map(|(idx, (_, v))| {
            config
                .exponents
                .iter()
                .map(|&x| {
                    let lhs = bounds::gamma_power_sum(v, x, &config.coeffs);
                    bound_report(idx, v, lhs, x, direction, &config.coeffs, false)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut result = tally(per_sample, attempts);
    result.condition_failed = attempts - result.condition_passed;
    Ok(result)
}

/// Reports for one member of the Schmidt family: closed-form values feed the
/// bounds, first-principles values give the residual.
pub fn evaluate_family(params: &SchmidtParams, sample_index: usize, config: &SweepConfig) -> Result<Vec<BoundReport>> {
    let state = schmidt_state(params);
    let (analytic, residual, diagnostic) = match config.measure {
        Measure::Concurrence => {
            let a = family_correlations_concurrence(params);
            let numeric = FamilyCorrelations {
                q_joint: concurrence_pure(&state, &[0])?,
                q_ab: concurrence_wootters(&state.reduce(&[0, 1])?)?,
                q_ac: concurrence_wootters(&state.reduce(&[0, 2])?)?,
            };
            (a, family_residual(&a, &numeric), None)
        }
        Measure::Tsallis2Assist => {
            let a = family_correlations_teoa2(params);
            let joint = tsallis_entanglement_pure(&state, &[0], 2.0)?;
            let residual = (a.q_joint - joint).abs();
            let diagnostic = match &config.eoa {
                Some(eoa) => {
                    let cfg = EoaConfig { seed: mix_seed(eoa.seed, sample_index as u64), ..*eoa };
                    let numeric = FamilyCorrelations {
                        q_joint: joint,
                        q_ab: teoa_oracle(&state.reduce(&[0, 1])?, 2.0, &cfg)?.value,
                        q_ac: teoa_oracle(&state.reduce(&[0, 2])?, 2.0, &cfg)?.value,
                    };
                    Some(family_residual(&a, &numeric))
                }
                None => None,
            };
            (a, residual, diagnostic)
        }
    };

    let direction = config.measure.direction();
    let v =
        CorrelationVector::new(vec![analytic.q_ab, analytic.q_ac])?.with_joint(analytic.q_joint)?.sorted_descending();
    config
        .exponents
        .iter()
        .map(|&x| {
            let mut r = bound_report(
                sample_index,
                &v,
                power(analytic.q_joint, x),
                x,
                direction,
                &config.coeffs,
                config.measure == Measure::Concurrence,
            )?;
            r.residual = Some(residual);
            r.diagnostic_residual = diagnostic;
            Ok(r)
        })
        .collect()
}

/// Largest deviation between two triples after sorting the pairs descending.
fn family_residual(a: &FamilyCorrelations, b: &FamilyCorrelations) -> f64 {
    let pa = a.pairs_descending();
    let pb = b.pairs_descending();
    (a.q_joint - b.q_joint).abs().max((pa[0] - pb[0]).abs()).max((pa[1] - pb[1]).abs())
}

/// Random members of the Schmidt family.
pub fn family_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let per_sample: Vec<Vec<BoundReport>> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(config.seed, i);
            evaluate_family(&SchmidtParams::sample(&mut rng), i, config)
        })
        .collect::<Result<_>>()?;
    Ok(tally(per_sample, config.samples))
}

/// Rows of `(exponent, v0, v1, v2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureTable {
    pub exponent_name: String,
    pub column_names: [String; 3],
    pub rows: Vec<(f64, [f64; 3])>,
}

impl FigureTable {
    /// True when `v0 >= v1 >= v2` (descending) or `v0 <= v1 <= v2` (ascending)
    /// holds within `tol` on every row.
    pub fn ordering_holds(&self, descending: bool, tol: f64) -> bool {
        self.rows.iter().all(
            |(_, [a, b, c])| {
                if descending {
                    a + tol >= *b && b + tol >= *c
                } else {
                    *a <= b + tol && *b <= c + tol
                }
            },
        )
    }
}

fn check_grid(grid: &[f64], lo: f64, hi: f64, name: &str) -> Result<()> {
    if grid.is_empty() {
        return Err(invalid(format!("{name} grid is empty")));
    }
    if grid.windows(2).any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater)) {
        return Err(invalid(format!("{name} grid must be strictly increasing")));
    }
    if let Some(x) = grid.iter().find(|x| !(**x >= lo && **x <= hi)) {
        return Err(invalid(format!("{name} = {x} outside [{lo}, {hi}]")));
    }
    Ok(())
}

/// Default concurrence-figure coefficients: `k = 0.9`, `delta = 2`, `gamma = 2`.
pub fn figure1_coeffs() -> CoeffParams {
    CoeffParams::new(0.9, 2.0, 2.0).expect("valid constants")
}

/// Default Tsallis-figure coefficients: `k = 0.8`, `delta = 2`, `gamma = 1`.
pub fn figure2_coeffs() -> CoeffParams {
    CoeffParams::new(0.8, 2.0, 1.0).expect("valid constants")
}

/// Concurrence figure: `y0 = C_{A|BC}^a`, `y1` the Hamming bound at the given
/// `delta`, `y2` the same bound at `delta = 1`.
pub fn figure1_data(alpha_grid: &[f64]) -> Result<FigureTable> {
    figure1_data_with(alpha_grid, &figure1_coeffs())
}

pub fn figure1_data_with(alpha_grid: &[f64], coeffs: &CoeffParams) -> Result<FigureTable> {
    check_grid(alpha_grid, coeffs.gamma(), f64::INFINITY, "alpha")?;
    let fam = family_correlations_concurrence(&SchmidtParams::worked_example());
    let v = CorrelationVector::new(fam.pairs_descending().to_vec())?;
    let rows = alpha_grid
        .iter()
        .map(|&a| {
            let y0 = power(fam.q_joint, a);
            let y1 = monogamy_rhs_thm1(&v, a, coeffs)?;
            let y2 = baseline_rhs(&v, a, BaselineKind::HammingDelta1, coeffs)?;
            Ok((a, [y0, y1, y2]))
        })
        .collect::<Result<_>>()?;
    Ok(FigureTable { exponent_name: "alpha".into(), column_names: ["y0".into(), "y1".into(), "y2".into()], rows })
}

/// Tsallis figure: `z0 = T_2^a(A|BC)^b`, `z1` the Hamming polygamy bound at the
/// given `delta`, `z2` the same at `delta = 1`.
pub fn figure2_data(beta_grid: &[f64]) -> Result<FigureTable> {
    figure2_data_with(beta_grid, &figure2_coeffs())
}

pub fn figure2_data_with(beta_grid: &[f64], coeffs: &CoeffParams) -> Result<FigureTable> {
    check_grid(beta_grid, 0.0, coeffs.gamma(), "beta")?;
    let fam = family_correlations_teoa2(&SchmidtParams::worked_example());
    let v = CorrelationVector::new(fam.pairs_descending().to_vec())?;
    let rows = beta_grid
        .iter()
        .map(|&b| {
            // z0 is a plain power: the joint assistance value is nonzero here.
            let z0 = fam.q_joint.powf(b);
            let z1 = polygamy_rhs_thm2(&v, b, coeffs)?;
            let z2 = baseline_rhs(&v, b, BaselineKind::HammingDelta1, coeffs)?;
            Ok((b, [z0, z1, z2]))
        })
        .collect::<Result<_>>()?;
    Ok(FigureTable { exponent_name: "beta".into(), column_names: ["z0".into(), "z1".into(), "z2".into()], rows })
}

/// `min, min + step, ...` up to `max`; the last point snaps to `max` when the
/// range is a whole number of steps.
pub fn exponent_grid(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite()) || !min.is_finite() || !max.is_finite() || max < min {
        return Err(invalid(format!("bad grid: min {min}, max {max}, step {step}")));
    }
    let span = (max - min) / step;
    let n = (span + 1e-9).floor() as usize;
    if n > 1_000_000 {
        return Err(invalid("grid has more than 10^6 points"));
    }
    let mut grid: Vec<f64> = (0..=n).map(|i| min + i as f64 * step).collect();
    if (span - n as f64).abs() < 1e-9 {
        grid[n] = max;
    }
    Ok(grid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaRow {
    pub kind: LemmaKind,
    pub k: f64,
    pub delta: f64,
    pub t: f64,
    pub exponent: f64,
    pub slack: f64,
}

/// Grid for the scalar lemmas; `t` is given as fractions of `k^delta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaGrid {
    pub ks: Vec<f64>,
    pub deltas: Vec<f64>,
    pub t_fractions: Vec<f64>,
    pub lower_exponents: Vec<f64>,
    pub upper_exponents: Vec<f64>,
}

impl Default for LemmaGrid {
    fn default() -> Self {
        Self {
            ks: (1..=10).map(|i| i as f64 / 10.0).collect(),
            deltas: vec![1.0, 1.5, 2.0, 3.0],
            t_fractions: vec![0.0, 0.25, 0.5, 0.75, 1.0],
            lower_exponents: vec![1.0, 1.5, 2.0, 3.0, 5.0],
            upper_exponents: vec![0.0, 0.25, 0.5, 0.75, 1.0],
        }
    }
}

/// Evaluates both lemma slacks on every grid point.
pub fn lemma_grid(grid: &LemmaGrid) -> Result<Vec<LemmaRow>> {
    let mut rows = Vec::new();
    for &k in &grid.ks {
        for &delta in &grid.deltas {
            let p = CoeffParams::new(k, delta, 1.0)?;
            for &frac in &grid.t_fractions {
                if !(0.0..=1.0).contains(&frac) {
                    return Err(invalid(format!("t fraction {frac} outside [0, 1]")));
                }
                let t = if frac == 1.0 { p.k_delta() } else { frac * p.k_delta() };
                for &x in &grid.lower_exponents {
                    let slack = bounds::lemma_lower_slack(t, x, &p)?;
                    rows.push(LemmaRow { kind: LemmaKind::Lower, k, delta, t, exponent: x, slack });
                }
                for &y in &grid.upper_exponents {
                    let slack = bounds::lemma_upper_slack(t, y, &p)?;
                    rows.push(LemmaRow { kind: LemmaKind::Upper, k, delta, t, exponent: y, slack });
                }
            }
        }
    }
    Ok(rows)
}
