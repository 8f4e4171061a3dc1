//! Hamming-weight monogamy and polygamy bounds.
//!
//! Everything here consumes only correlation values, so it is agnostic to
//! the measure and the local dimensions that produced them. For a vector
//! `Q_0 >= Q_1 >= ...` of pairwise correlations between `A` and parties
//! `B_j`, the bounds weight `Q_j^x` by a power of the coefficient
//!
//! ```text
//! K(x) = ((1 + k^delta)^(x/gamma) - 1) / k^(delta x / gamma)
//! ```
//!
//! where the power is the Hamming weight of `j` (theorem forms) or `j`
//! itself (corollary forms). `K >= 1` above `gamma`, `K <= 1` below it.
//!
//! A correlation of exactly zero contributes nothing, including at exponent
//! zero; see [`zero_power_triggered`].

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// The `(k, delta, gamma)` triple behind every coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffParams {
    k: f64,
    delta: f64,
    gamma: f64,
}

impl CoeffParams {
    pub fn new(k: f64, delta: f64, gamma: f64) -> Result<Self> {
        if !(k > 0.0 && k <= 1.0) {
            return Err(invalid(format!("k must lie in (0, 1], got {k}")));
        }
        if !(delta >= 1.0 && delta.is_finite()) {
            return Err(invalid(format!("delta must be >= 1, got {delta}")));
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(invalid(format!("gamma must be positive, got {gamma}")));
        }
        Ok(Self { k, delta, gamma })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `k^delta`, in `(0, 1]`.
    pub fn k_delta(&self) -> f64 {
        self.k.powf(self.delta)
    }

    /// Same `k` and `gamma` with `delta = 1`.
    pub fn with_unit_delta(&self) -> Self {
        Self { delta: 1.0, ..*self }
    }
}

/// Pairwise correlations `Q_{AB_0}, ..., Q_{AB_{N-1}}` and, optionally, the
/// joint value `Q_{A|B_0...B_{N-1}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationVector {
    values: Vec<f64>,
    joint: Option<f64>,
}

impl CorrelationVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("correlation vector needs at least one entry"));
        }
        if let Some(bad) = values.iter().find(|v| !(**v >= 0.0 && v.is_finite())) {
            return Err(invalid(format!("correlations must be finite and nonnegative, got {bad}")));
        }
        Ok(Self { values, joint: None })
    }

    pub fn with_joint(mut self, joint: f64) -> Result<Self> {
        if !(joint >= 0.0 && joint.is_finite()) {
            return Err(invalid(format!("joint correlation must be finite and nonnegative, got {joint}")));
        }
        self.joint = Some(joint);
        Ok(self)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn joint(&self) -> Option<f64> {
        self.joint
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Copy with the pairwise values relabeled in descending order.
    pub fn sorted_descending(&self) -> Self {
        let mut values = self.values.clone();
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values, joint: self.joint }
    }
}

/// Outcome of a hypothesis check: one margin per pairwise or tail condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub first_violation: Option<usize>,
    pub margins: Vec<f64>,
}

impl ConditionReport {
    fn from_margins(margins: Vec<f64>) -> Self {
        let first_violation = margins.iter().position(|m| m.is_nan() || *m < 0.0);
        Self { holds: first_violation.is_none(), first_violation, margins }
    }

    fn require(&self) -> Result<()> {
        match self.first_violation {
            None => Ok(()),
            Some(index) => Err(Error::ConditionViolated { index, margin: self.margins[index] }),
        }
    }
}

/// Baseline right-hand sides the new bounds are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaselineKind {
    /// `sum Q_j^x`.
    PlainSum,
    /// Hamming-weight bound with `delta = 1`.
    HammingDelta1,
    /// `sum (x/2)^j Q_j^x`, the concurrence bound for `x >= 2`.
    AlphaHalfPowers,
}

/// Number of set bits in `j`.
pub fn hamming_weight(j: u64) -> u32 {
    j.count_ones()
}

fn coefficient(k_delta: f64, ratio: f64) -> f64 {
    ((1.0 + k_delta).powf(ratio) - 1.0) / k_delta.powf(ratio)
}

/// `((1 + k^delta)^(x/gamma) - 1) / k^(delta x / gamma)`.
pub fn coeff_k(p: &CoeffParams, x: f64) -> f64 {
    if x == p.gamma {
        return 1.0;
    }
    coefficient(p.k_delta(), x / p.gamma)
}

/// `x^e` for a correlation value, with a zero correlation contributing 0 at any exponent.
fn corr_pow(x: f64, e: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

/// True when some zero correlation is raised to exponent zero, i.e. the
/// zero-contribution convention changed a term that `powf` would report as 1.
pub fn zero_power_triggered(v: &CorrelationVector, exponent: f64) -> bool {
    exponent == 0.0 && v.values.contains(&0.0)
}

fn check_lemma_t(t: f64, p: &CoeffParams) -> Result<()> {
    let kd = p.k_delta();
    if !(0.0..=kd).contains(&t) {
        return Err(invalid(format!("t = {t} outside [0, k^delta = {kd}]")));
    }
    Ok(())
}

/// `(1+t)^x - 1 - K_x t^x` for `x >= 1`, `0 <= t <= k^delta`; the coefficient
/// uses `x` directly. Nonnegative up to roundoff.
pub fn lemma_lower_slack(t: f64, x: f64, p: &CoeffParams) -> Result<f64> {
    check_lemma_t(t, p)?;
    if !(x >= 1.0 && x.is_finite()) {
        return Err(invalid(format!("lower lemma needs x >= 1, got {x}")));
    }
    let k = coefficient(p.k_delta(), x);
    Ok((1.0 + t).powf(x) - 1.0 - k * t.powf(x))
}

/// `1 + K_y t^y - (1+t)^y` for `0 <= y <= 1`, `0 <= t <= k^delta`. Nonnegative up to roundoff.
pub fn lemma_upper_slack(t: f64, y: f64, p: &CoeffParams) -> Result<f64> {
    check_lemma_t(t, p)?;
    if !(0.0..=1.0).contains(&y) {
        return Err(invalid(format!("upper lemma needs 0 <= y <= 1, got {y}")));
    }
    let k = coefficient(p.k_delta(), y);
    Ok(1.0 + k * t.powf(y) - (1.0 + t).powf(y))
}

/// Pairwise hypothesis `k^delta Q_j >= Q_{j+1}`; margin `j` is the difference.
pub fn monogamy_condition(v: &CorrelationVector, p: &CoeffParams) -> ConditionReport {
    let kd = p.k_delta();
    let margins = v.values.windows(2).map(|w| kd * w[0] - w[1]).collect();
    ConditionReport::from_margins(margins)
}

/// Suffix sums `S_i = sum_{l >= i} Q_l^gamma`, with a trailing zero.
fn gamma_suffix_sums(v: &CorrelationVector, gamma: f64) -> Vec<f64> {
    let mut out = vec![0.0; v.len() + 1];
    for i in (0..v.len()).rev() {
        out[i] = out[i + 1] + corr_pow(v.values[i], gamma);
    }
    out
}

/// Tail hypothesis `k^delta Q_i^gamma >= sum_{j>i} Q_j^gamma` for `i = 0..N-2`.
pub fn tail_condition(v: &CorrelationVector, p: &CoeffParams) -> ConditionReport {
    let kd = p.k_delta();
    let suffix = gamma_suffix_sums(v, p.gamma);
    let n = v.len();
    let margins = (0..n.saturating_sub(1)).map(|i| kd * corr_pow(v.values[i], p.gamma) - suffix[i + 1]).collect();
    ConditionReport::from_margins(margins)
}

/// Split hypothesis of the mixed polygamy bound: the tail condition for
/// `i <= m`, and the reversed `Q_j^gamma <= k^delta sum_{l>j} Q_l^gamma` for
/// `m < j <= N-2`.
pub fn mixed_condition(v: &CorrelationVector, p: &CoeffParams, m: usize) -> Result<ConditionReport> {
    let n = v.len();
    if n < 3 || m > n - 2 {
        return Err(invalid(format!("mixed condition needs N >= 3 and m <= N-2, got N = {n}, m = {m}")));
    }
    let kd = p.k_delta();
    let suffix = gamma_suffix_sums(v, p.gamma);
    let margins = (0..=n - 2)
        .map(|i| {
            let own = corr_pow(v.values[i], p.gamma);
            if i <= m {
                kd * own - suffix[i + 1]
            } else {
                kd * suffix[i + 1] - own
            }
        })
        .collect();
    Ok(ConditionReport::from_margins(margins))
}

fn check_monogamy_exponent(alpha: f64, p: &CoeffParams) -> Result<()> {
    if !(alpha >= p.gamma && alpha.is_finite()) {
        return Err(invalid(format!("monogamy exponent {alpha} must be >= gamma = {}", p.gamma)));
    }
    Ok(())
}

fn check_polygamy_exponent(beta: f64, p: &CoeffParams) -> Result<()> {
    if !(0.0..=p.gamma).contains(&beta) {
        return Err(invalid(format!("polygamy exponent {beta} must lie in [0, gamma = {}]", p.gamma)));
    }
    Ok(())
}

/// `sum_j K^{weight(j)} Q_j^x`.
fn weighted_sum(v: &CorrelationVector, x: f64, k: f64, weight: impl Fn(usize) -> u32) -> f64 {
    v.values.iter().enumerate().map(|(j, &q)| k.powi(weight(j) as i32) * corr_pow(q, x)).sum()
}

fn hamming_sum(v: &CorrelationVector, x: f64, k: f64) -> f64 {
    weighted_sum(v, x, k, |j| hamming_weight(j as u64))
}

fn index_sum(v: &CorrelationVector, x: f64, k: f64) -> f64 {
    weighted_sum(v, x, k, |j| j as u32)
}

/// Monogamy lower bound `sum_j K_alpha^{weight(j)} Q_j^alpha`, `alpha >= gamma`.
pub fn monogamy_rhs_thm1(v: &CorrelationVector, alpha: f64, p: &CoeffParams) -> Result<f64> {
    check_monogamy_exponent(alpha, p)?;
    Ok(hamming_sum(v, alpha, coeff_k(p, alpha)))
}

/// Monogamy lower bound with index powers, `sum_j K_alpha^j Q_j^alpha`.
/// Claimed under [`tail_condition`].
pub fn monogamy_rhs_cor1(v: &CorrelationVector, alpha: f64, p: &CoeffParams) -> Result<f64> {
    check_monogamy_exponent(alpha, p)?;
    Ok(index_sum(v, alpha, coeff_k(p, alpha)))
}

/// Polygamy upper bound `sum_j K_beta^{weight(j)} Q_j^beta`, `0 <= beta <= gamma`.
pub fn polygamy_rhs_thm2(v: &CorrelationVector, beta: f64, p: &CoeffParams) -> Result<f64> {
    check_polygamy_exponent(beta, p)?;
    Ok(hamming_sum(v, beta, coeff_k(p, beta)))
}

/// Mixed polygamy upper bound: index powers up to `m`, then `K^{m+2}` on
/// `Q_{m+1}..Q_{N-2}` and `K^{m+1}` on `Q_{N-1}`. Rejected unless
/// [`mixed_condition`] holds.
pub fn polygamy_rhs_cor2(v: &CorrelationVector, beta: f64, p: &CoeffParams, m: usize) -> Result<f64> {
    check_polygamy_exponent(beta, p)?;
    mixed_condition(v, p, m)?.require()?;
    let n = v.len();
    let k = coeff_k(p, beta);
    let head: f64 = (0..=m).map(|j| k.powi(j as i32) * corr_pow(v.values[j], beta)).sum();
    let middle: f64 = (m + 1..n - 1).map(|j| corr_pow(v.values[j], beta)).sum();
    let last = corr_pow(v.values[n - 1], beta);
    Ok(head + k.powi(m as i32 + 2) * middle + k.powi(m as i32 + 1) * last)
}

/// Polygamy upper bound with index powers, `sum_j K_beta^j Q_j^beta`.
/// Rejected unless [`tail_condition`] holds.
pub fn polygamy_rhs_cor3(v: &CorrelationVector, beta: f64, p: &CoeffParams) -> Result<f64> {
    check_polygamy_exponent(beta, p)?;
    tail_condition(v, p).require()?;
    Ok(index_sum(v, beta, coeff_k(p, beta)))
}

/// Baseline right-hand side of the given kind. `HammingDelta1` uses `p` with
/// `delta` forced to 1.
pub fn baseline_rhs(v: &CorrelationVector, exponent: f64, kind: BaselineKind, p: &CoeffParams) -> Result<f64> {
    if !(exponent >= 0.0 && exponent.is_finite()) {
        return Err(invalid(format!("baseline exponent must be finite and >= 0, got {exponent}")));
    }
    match kind {
        BaselineKind::PlainSum => Ok(v.values.iter().map(|&q| corr_pow(q, exponent)).sum()),
        BaselineKind::HammingDelta1 => Ok(hamming_sum(v, exponent, coeff_k(&p.with_unit_delta(), exponent))),
        BaselineKind::AlphaHalfPowers => {
            if exponent < 2.0 {
                return Err(invalid(format!("alpha_half_powers baseline needs exponent >= 2, got {exponent}")));
            }
            Ok(index_sum(v, exponent, exponent / 2.0))
        }
    }
}

/// `(sum Q_j^gamma)^(alpha/gamma) - sum_j K_alpha^{weight(j)} Q_j^alpha`.
pub fn algebraic_monogamy_slack(v: &CorrelationVector, alpha: f64, p: &CoeffParams) -> Result<f64> {
    check_monogamy_exponent(alpha, p)?;
    monogamy_condition(v, p).require()?;
    Ok(gamma_power_sum(v, alpha, p) - monogamy_rhs_thm1(v, alpha, p)?)
}

/// `sum_j K_beta^{weight(j)} Q_j^beta - (sum Q_j^gamma)^(beta/gamma)`.
pub fn algebraic_polygamy_slack(v: &CorrelationVector, beta: f64, p: &CoeffParams) -> Result<f64> {
    check_polygamy_exponent(beta, p)?;
    monogamy_condition(v, p).require()?;
    Ok(polygamy_rhs_thm2(v, beta, p)? - gamma_power_sum(v, beta, p))
}

/// `(sum Q_j^gamma)^(x/gamma)`, the surrogate for the joint term.
pub fn gamma_power_sum(v: &CorrelationVector, x: f64, p: &CoeffParams) -> f64 {
    let s: f64 = v.values.iter().map(|&q| corr_pow(q, p.gamma)).sum();
    corr_pow(s, x / p.gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn params(k: f64, delta: f64, gamma: f64) -> CoeffParams {
        CoeffParams::new(k, delta, gamma).unwrap()
    }

    fn vec_of(v: &[f64]) -> CorrelationVector {
        CorrelationVector::new(v.to_vec()).unwrap()
    }

    /// Bit count by repeated halving.
    fn oracle_weight(mut j: usize) -> i32 {
        let mut w = 0;
        while j > 0 {
            w += (j % 2) as i32;
            j /= 2;
        }
        w
    }

    fn oracle_coeff(k: f64, delta: f64, gamma: f64, x: f64) -> f64 {
        let kd = k.powf(delta);
        ((1.0 + kd).powf(x / gamma) - 1.0) / kd.powf(x / gamma)
    }

    #[test]
    fn hamming_weight_examples() {
        assert_eq!(hamming_weight(0), 0);
        assert_eq!(hamming_weight(5), 2);
        assert_eq!(hamming_weight(7), 3);
        for j in 0..4096u64 {
            assert!(u64::from(hamming_weight(j)) <= j);
            assert_eq!(hamming_weight(j) as i32, oracle_weight(j as usize));
        }
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(coeff_k(&params(0.9, 1.0, 2.0), 2.0), 1.0);
        // mpmath: 3.469135802469135802...
        assert_abs_diff_eq!(coeff_k(&params(0.9, 2.0, 2.0), 4.0), 3.4691358024691358, epsilon = 1e-13);
        // mpmath: 0.350781059358212171...
        assert_abs_diff_eq!(coeff_k(&params(0.8, 2.0, 1.0), 0.5), 0.350_781_059_358_212_2, epsilon = 1e-14);
    }

    #[test]
    fn params_validation() {
        assert!(CoeffParams::new(0.0, 1.0, 1.0).is_err());
        assert!(CoeffParams::new(1.1, 1.0, 1.0).is_err());
        assert!(CoeffParams::new(0.5, 0.9, 1.0).is_err());
        assert!(CoeffParams::new(0.5, 1.0, 0.0).is_err());
        assert!(CorrelationVector::new(vec![]).is_err());
        assert!(CorrelationVector::new(vec![0.1, -0.1]).is_err());
        assert!(CorrelationVector::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn lemma_examples() {
        let p = params(0.9, 2.0, 1.0);
        for x in [1.0, 2.0, 3.5] {
            assert_eq!(lemma_lower_slack(0.0, x, &p).unwrap(), 0.0);
            assert_abs_diff_eq!(lemma_lower_slack(p.k_delta(), x, &p).unwrap(), 0.0, epsilon = 1e-12);
        }
        // mpmath: 0.345679012345679012...
        assert_abs_diff_eq!(lemma_lower_slack(0.25, 2.0, &p).unwrap(), 0.345679012345679, epsilon = 1e-14);

        let q = params(0.8, 2.0, 1.0);
        assert_eq!(lemma_upper_slack(0.0, 0.5, &q).unwrap(), 0.0);
        assert_abs_diff_eq!(lemma_upper_slack(q.k_delta(), 0.5, &q).unwrap(), 0.0, epsilon = 1e-12);
        // mpmath: 0.0519552738569134748...
        let s = lemma_upper_slack(0.3, 0.5, &q).unwrap();
        assert!(s > 0.0);
        assert_abs_diff_eq!(s, 0.05195527385691347, epsilon = 1e-14);
    }

    #[test]
    fn lemma_domain_errors() {
        let p = params(0.8, 2.0, 1.0);
        assert!(lemma_lower_slack(0.7, 2.0, &p).is_err());
        assert!(lemma_lower_slack(-0.1, 2.0, &p).is_err());
        assert!(lemma_lower_slack(0.3, 0.5, &p).is_err());
        assert!(lemma_upper_slack(0.3, 1.5, &p).is_err());
    }

    #[test]
    fn lemma_grid_is_nonnegative() {
        for ki in 1..=10 {
            let k = ki as f64 / 10.0;
            for delta in [1.0, 1.5, 2.0, 3.0] {
                let p = params(k, delta, 1.0);
                let kd = p.k_delta();
                for frac in [0.0, 0.25, 0.5, 0.75, 1.0] {
                    let t = kd * frac;
                    for x in [1.0, 1.5, 2.0, 3.0, 5.0] {
                        let s = lemma_lower_slack(t, x, &p).unwrap();
                        assert!(s >= -1e-12, "lower k={k} d={delta} t={t} x={x}: {s}");
                    }
                    for y in [0.0, 0.25, 0.5, 0.75, 1.0] {
                        let s = lemma_upper_slack(t, y, &p).unwrap();
                        assert!(s >= -1e-12, "upper k={k} d={delta} t={t} y={y}: {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn monogamy_condition_examples() {
        let p = params(0.9, 2.0, 2.0);
        let r = monogamy_condition(&vec_of(&[FRAC_1_SQRT_2, 0.5]), &p);
        assert!(r.holds);
        assert_abs_diff_eq!(r.margins[0], 0.81 * FRAC_1_SQRT_2 - 0.5, epsilon = 1e-15);

        let r = monogamy_condition(&vec_of(&[1.0, 1.0]), &p);
        assert!(!r.holds);
        assert_eq!(r.first_violation, Some(0));

        let r = monogamy_condition(&vec_of(&[0.3]), &p);
        assert!(r.holds && r.margins.is_empty());
    }

    #[test]
    fn tail_condition_examples() {
        let unit = params(1.0, 1.0, 2.0);
        assert!(tail_condition(&vec_of(&[1.0, 0.5]), &unit).holds);
        assert!(!tail_condition(&vec_of(&[0.5, 1.0]), &unit).holds);

        let r = tail_condition(&vec_of(&[1.0, 0.6, 0.3]), &params(0.9, 2.0, 2.0));
        assert!(r.holds);
        assert_abs_diff_eq!(r.margins[0], 0.81 - 0.45, epsilon = 1e-15);
        assert_abs_diff_eq!(r.margins[1], 0.2916 - 0.09, epsilon = 1e-15);
    }

    #[test]
    fn thm1_examples() {
        let p = params(0.9, 2.0, 2.0);
        let v = vec_of(&[FRAC_1_SQRT_2, 0.5]);
        assert_abs_diff_eq!(monogamy_rhs_thm1(&v, 2.0, &p).unwrap(), 0.75, epsilon = 1e-15);
        // mpmath: 0.466820987654320987...
        assert_abs_diff_eq!(monogamy_rhs_thm1(&v, 4.0, &p).unwrap(), 0.466_820_987_654_321, epsilon = 1e-14);
        let single = vec_of(&[0.7, 0.0, 0.0, 0.0]);
        assert_abs_diff_eq!(monogamy_rhs_thm1(&single, 3.0, &p).unwrap(), 0.7f64.powi(3), epsilon = 1e-15);
        assert!(monogamy_rhs_thm1(&v, 1.5, &p).is_err());
    }

    #[test]
    fn cor1_examples() {
        let p = params(0.9, 2.0, 2.0);
        let v2 = vec_of(&[0.6, 0.4]);
        assert_eq!(monogamy_rhs_cor1(&v2, 3.0, &p).unwrap(), monogamy_rhs_thm1(&v2, 3.0, &p).unwrap());
        assert_abs_diff_eq!(monogamy_rhs_cor1(&vec_of(&[1.0; 4]), 2.0, &p).unwrap(), 4.0);
        // mpmath: 1.234094664130166848...
        let v = vec_of(&[0.8, 0.6, 0.4, 0.2]);
        let got = monogamy_rhs_cor1(&v, 4.0, &p).unwrap();
        assert_abs_diff_eq!(got, 1.2340946641301668, epsilon = 1e-13);
        let k = oracle_coeff(0.9, 2.0, 2.0, 4.0);
        let oracle: f64 = [0.8f64, 0.6, 0.4, 0.2].iter().enumerate().map(|(j, q)| k.powi(j as i32) * q.powi(4)).sum();
        assert_abs_diff_eq!(got, oracle, epsilon = 1e-13);
    }

    #[test]
    fn thm2_examples() {
        let p = params(0.8, 2.0, 1.0);
        let v = vec_of(&[0.25, 0.125]);
        assert_abs_diff_eq!(polygamy_rhs_thm2(&v, 1.0, &p).unwrap(), 0.375, epsilon = 1e-15);
        // mpmath: 0.624019832891996336...
        assert_abs_diff_eq!(polygamy_rhs_thm2(&v, 0.5, &p).unwrap(), 0.624_019_832_891_996_4, epsilon = 1e-14);
        assert_abs_diff_eq!(polygamy_rhs_thm2(&vec_of(&[0.3]), 0.4, &p).unwrap(), 0.3f64.powf(0.4));
        assert!(polygamy_rhs_thm2(&v, 1.2, &p).is_err());
        assert!(polygamy_rhs_thm2(&v, -0.1, &p).is_err());
    }

    #[test]
    fn cor2_examples() {
        // N = 3, m = 0: k^d v0 >= v1 + v2 and v1 <= k^d v2 (gamma = 1).
        let p = params(0.9, 1.0, 1.0);
        let v = vec_of(&[1.0, 0.3, 0.4]);
        let got = polygamy_rhs_cor2(&v, 0.5, &p, 0).unwrap();
        let k = oracle_coeff(0.9, 1.0, 1.0, 0.5);
        let oracle = 1.0 + k * k * 0.3f64.sqrt() + k * 0.4f64.sqrt();
        assert_abs_diff_eq!(got, oracle, epsilon = 1e-14);
        // mpmath: 1.339412727595827884...
        assert_abs_diff_eq!(got, 1.3394127275958279, epsilon = 1e-13);
        // and it bounds the surrogate joint term (mpmath: 1.303840481...)
        assert!(gamma_power_sum(&v, 0.5, &p) <= got);

        assert!(matches!(
            polygamy_rhs_cor2(&vec_of(&[1.0, 0.5, 0.1]), 0.5, &p, 0),
            Err(Error::ConditionViolated { index: 1, .. })
        ));
        assert!(polygamy_rhs_cor2(&vec_of(&[1.0, 0.5]), 0.5, &p, 0).is_err());

        // beta = gamma: all powers are 1.
        let q = params(0.9, 2.0, 1.0);
        let w = vec_of(&[1.0, 0.4, 0.2]);
        assert_abs_diff_eq!(polygamy_rhs_cor2(&w, 1.0, &q, 1).unwrap(), 1.6, epsilon = 1e-15);
    }

    #[test]
    fn cor3_examples() {
        let p = params(0.9, 2.0, 1.0);
        let v2 = vec_of(&[0.6, 0.3]);
        assert_eq!(polygamy_rhs_cor3(&v2, 0.5, &p).unwrap(), polygamy_rhs_thm2(&v2, 0.5, &p).unwrap());
        assert!(polygamy_rhs_cor3(&vec_of(&[1.0, 1.0, 1.0]), 0.5, &p).is_err());
        // mpmath: 1.284990245833932471...
        let v = vec_of(&[0.8, 0.4, 0.2]);
        assert_abs_diff_eq!(polygamy_rhs_cor3(&v, 0.7, &p).unwrap(), 1.2849902458339325, epsilon = 1e-13);
        // m = N-2 reduces to the index-power form.
        assert_abs_diff_eq!(
            polygamy_rhs_cor2(&v, 0.7, &p, 1).unwrap(),
            polygamy_rhs_cor3(&v, 0.7, &p).unwrap(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn baseline_examples() {
        let p = params(0.9, 2.0, 2.0);
        let v = vec_of(&[FRAC_1_SQRT_2, 0.5]);
        for a in [2.0, 3.0, 4.0, 5.0] {
            let y2 = FRAC_1_SQRT_2.powf(a) + (1.9f64.powf(a / 2.0) - 1.0) / 0.9f64.powf(a / 2.0) * 0.5f64.powf(a);
            assert_abs_diff_eq!(baseline_rhs(&v, a, BaselineKind::HammingDelta1, &p).unwrap(), y2, epsilon = 1e-14);
        }
        let q = params(0.8, 2.0, 1.0);
        let w = vec_of(&[0.25, 0.125]);
        for b in [0.1, 0.5, 0.9] {
            let z2 = 0.25f64.powf(b) + (1.8f64.powf(b) - 1.0) / 0.8f64.powf(b) * 0.125f64.powf(b);
            assert_abs_diff_eq!(baseline_rhs(&w, b, BaselineKind::HammingDelta1, &q).unwrap(), z2, epsilon = 1e-14);
        }
        assert_abs_diff_eq!(baseline_rhs(&vec_of(&[0.3]), 2.5, BaselineKind::PlainSum, &p).unwrap(), 0.3f64.powf(2.5));
        let h = baseline_rhs(&vec_of(&[0.9, 0.5, 0.2]), 3.0, BaselineKind::AlphaHalfPowers, &p).unwrap();
        assert_abs_diff_eq!(h, 0.729 + 1.5 * 0.125 + 2.25 * 0.008, epsilon = 1e-15);
        assert!(baseline_rhs(&v, 1.0, BaselineKind::AlphaHalfPowers, &p).is_err());
    }

    #[test]
    fn algebraic_slack_examples() {
        let unit = params(1.0, 1.0, 2.0);
        let v = vec_of(&[1.0, 0.5]);
        assert_abs_diff_eq!(algebraic_monogamy_slack(&v, 4.0, &unit).unwrap(), 0.375, epsilon = 1e-15);
        assert_abs_diff_eq!(algebraic_monogamy_slack(&v, 2.0, &unit).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            algebraic_monogamy_slack(&vec_of(&[0.4, 0.0, 0.0]), 3.0, &unit).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert!(matches!(
            algebraic_monogamy_slack(&vec_of(&[0.5, 1.0]), 4.0, &params(0.9, 1.0, 2.0)),
            Err(Error::ConditionViolated { index: 0, .. })
        ));

        let p = params(0.9, 1.0, 1.0);
        assert_abs_diff_eq!(algebraic_polygamy_slack(&v, 1.0, &p).unwrap(), 0.0, epsilon = 1e-15);
        // mpmath: 0.0573014699366437938...
        assert_abs_diff_eq!(algebraic_polygamy_slack(&v, 0.5, &p).unwrap(), 0.057_301_469_936_643_79, epsilon = 1e-14);
        assert_abs_diff_eq!(algebraic_polygamy_slack(&vec_of(&[0.3]), 0.25, &p).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn zero_power_convention() {
        let p = params(0.9, 1.0, 1.0);
        let v = vec_of(&[0.5, 0.0]);
        assert!(zero_power_triggered(&v, 0.0));
        assert!(!zero_power_triggered(&v, 0.5));
        assert_abs_diff_eq!(polygamy_rhs_thm2(&v, 0.0, &p).unwrap(), 1.0);
        let zeros = vec_of(&[0.0, 0.0]);
        assert_eq!(polygamy_rhs_thm2(&zeros, 0.0, &p).unwrap(), 0.0);
        assert_eq!(algebraic_polygamy_slack(&zeros, 0.0, &p).unwrap(), 0.0);
        assert_eq!(monogamy_rhs_thm1(&zeros, 2.0, &p).unwrap(), 0.0);
    }

    fn chain_vector(len: usize, kd: f64, seeds: &[f64]) -> CorrelationVector {
        let mut v = Vec::with_capacity(len);
        let mut cur = seeds[0];
        v.push(cur);
        for &u in &seeds[1..len] {
            cur *= kd * u;
            v.push(cur);
        }
        CorrelationVector::new(v).unwrap()
    }

    proptest! {
        #[test]
        fn coeff_is_one_at_gamma(k in 0.01f64..=1.0, delta in 1.0f64..4.0, gamma in 0.5f64..4.0) {
            prop_assert_eq!(coeff_k(&params(k, delta, gamma), gamma), 1.0);
        }

        #[test]
        fn coeff_ordering(k in 0.05f64..0.999, delta in 1.01f64..4.0, gamma in 1.0f64..3.0, r in 0.0f64..1.0) {
            let p = params(k, delta, gamma);
            let p1 = p.with_unit_delta();
            let above = gamma * (1.0 + 3.0 * r + 1e-3);
            prop_assert!(coeff_k(&p, above) >= coeff_k(&p1, above) - 1e-12);
            prop_assert!(coeff_k(&p1, above) >= 1.0 - 1e-12);
            let below = gamma * (1e-3 + 0.998 * r);
            prop_assert!(coeff_k(&p, below) <= coeff_k(&p1, below) + 1e-12);
            prop_assert!(coeff_k(&p1, below) <= 1.0 + 1e-12);
        }

        #[test]
        fn algebraic_cores_hold(
            n in 2usize..=16,
            seeds in prop::collection::vec(0.0f64..=1.0, 16),
            k in 0.1f64..=1.0,
            delta in 1.0f64..3.0,
            gamma in 1.0f64..3.0,
        ) {
            let p = params(k, delta, gamma);
            let v = chain_vector(n, p.k_delta(), &seeds);
            prop_assume!(monogamy_condition(&v, &p).holds);
            for mult in [1.0, 1.5, 2.0, 3.0] {
                prop_assert!(algebraic_monogamy_slack(&v, mult * gamma, &p).unwrap() >= -1e-10);
            }
            for frac in [0.0, 0.25, 0.5, 0.75, 1.0] {
                prop_assert!(algebraic_polygamy_slack(&v, frac * gamma, &p).unwrap() >= -1e-10);
            }
        }

        #[test]
        fn rhs_chains(
            values in prop::collection::vec(0.0f64..=1.0, 1..16),
            k in 0.1f64..0.99,
            gamma in 1.0f64..3.0,
            r in 0.0f64..1.0,
        ) {
            let p = params(k, 2.0, gamma);
            let v = CorrelationVector::new(values).unwrap();
            let alpha = gamma * (1.0 + 2.0 * r);
            let thm = monogamy_rhs_thm1(&v, alpha, &p).unwrap();
            let d1 = baseline_rhs(&v, alpha, BaselineKind::HammingDelta1, &p).unwrap();
            let plain = baseline_rhs(&v, alpha, BaselineKind::PlainSum, &p).unwrap();
            let cor = monogamy_rhs_cor1(&v, alpha, &p).unwrap();
            prop_assert!(thm >= d1 - 1e-12 && d1 >= plain - 1e-12 && cor >= thm - 1e-12);

            let beta = gamma * r;
            let thm2 = polygamy_rhs_thm2(&v, beta, &p).unwrap();
            let d1p = baseline_rhs(&v, beta, BaselineKind::HammingDelta1, &p).unwrap();
            prop_assert!(thm2 <= d1p + 1e-12);
            if let Ok(cor3) = polygamy_rhs_cor3(&v, beta, &p) {
                prop_assert!(cor3 <= thm2 + 1e-12);
            }
        }

        #[test]
        fn corollaries_hold_under_their_conditions(
            n in 3usize..=10,
            seeds in prop::collection::vec(0.0f64..=1.0, 10),
            k in 0.3f64..=1.0,
            gamma in 1.0f64..2.5,
            m_frac in 0.0f64..1.0,
            frac in 0.0f64..=1.0,
        ) {
            let p = params(k, 1.0, gamma);
            let v = CorrelationVector::new(seeds[..n].to_vec()).unwrap().sorted_descending();
            if tail_condition(&v, &p).holds {
                let alpha = gamma * (1.0 + 2.0 * frac);
                prop_assert!(gamma_power_sum(&v, alpha, &p) >= monogamy_rhs_cor1(&v, alpha, &p).unwrap() - 1e-10);
                let beta = gamma * frac;
                prop_assert!(gamma_power_sum(&v, beta, &p) <= polygamy_rhs_cor3(&v, beta, &p).unwrap() + 1e-10);
            }
            let m = ((n - 1) as f64 * m_frac) as usize;
            let m = m.min(n - 2);
            let unsorted = CorrelationVector::new(seeds[..n].to_vec()).unwrap();
            if let Ok(rhs) = polygamy_rhs_cor2(&unsorted, gamma * frac, &p, m) {
                prop_assert!(gamma_power_sum(&unsorted, gamma * frac, &p) <= rhs + 1e-10);
            }
        }
    }
}
