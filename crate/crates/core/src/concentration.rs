//! Monte Carlo checks of the conditional Hoeffding-type bound
//! `P(S_n >= t | E(S_n | xi) < t) <= exp(-2 t^2 / n)` and of the tail
//! decomposition `P(S_n >= t) <= exp(-2 t^2 / n) + P(E(S_n | xi) >= t)`.
//!
//! The bound is evaluated exactly as written, without centering. The
//! classical independent case is reported separately in its centered form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parallel::try_map_trials;
use crate::params::ProcessFamily;
use crate::rng::SeedSpec;
use crate::sim::sample_conditional;

/// Multiplier on binomial standard errors when comparing estimates to bounds.
pub const SLACK_SIGMAS: f64 = 3.0;

/// Minimum expected number of conditioning hits before a report is
/// considered adequately powered.
pub const MIN_CONDITIONING_HITS: f64 = 1000.0;

/// Which form of the exponential bound a report evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum BoundForm {
    /// `exp(-2 t^2 / n)`.
    Uncentered,
    /// `exp(-2 (t - mean)^2 / n)` for `t > mean = E S_n`.
    Centered { mean: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationReport {
    pub t: f64,
    pub n: usize,
    pub trials: usize,
    /// `#{S_n >= t, E(S_n|xi) < t} / #{E(S_n|xi) < t}`.
    pub empirical_conditional: f64,
    /// Always `exp(-2 t^2 / n)`.
    pub bound: f64,
    /// Empirical `P(E(S_n | xi) < t)`.
    pub conditioning_mass: f64,
    /// `bound + #{E(S_n|xi) >= t} / trials`.
    pub decomposition_rhs: f64,
    /// Empirical `P(S_n >= t)`.
    pub empirical_unconditional: f64,
    pub conditioning_count: usize,
    pub conditional_exceedances: usize,
    pub unconditional_exceedances: usize,
    pub conditional_slack: f64,
    pub unconditional_slack: f64,
    /// Set when `conditioning_mass * trials < MIN_CONDITIONING_HITS`.
    pub low_power: bool,
    pub form: BoundForm,
    /// The bound the pass decision used; differs from `bound` only for the
    /// centered form.
    pub applied_bound: f64,
    pub pass: bool,
}

/// `exp(-2 t^2 / n)`.
pub fn hoeffding_bound(t: f64, n: usize) -> f64 {
    (-2.0 * t * t / n as f64).exp()
}

/// `3 * sqrt(p (1 - p) / m)`.
fn binomial_slack(p: f64, m: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    SLACK_SIGMAS * (p * (1.0 - p) / m as f64).sqrt()
}

/// Per-trial `(S_n, E(S_n | xi))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialSums {
    pub sum: f64,
    pub conditional_mean: f64,
}

pub fn simulate_sums(family: &ProcessFamily, n: usize, trials: usize, seed: SeedSpec) -> Result<Vec<TrialSums>> {
    if !family.is_unit_valued() {
        return Err(Error::Domain(format!("family {} is not [0, 1]-valued", family.name())));
    }
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    family.validate()?;
    try_map_trials(trials, |i| {
        let s = seed.offset(i);
        let ms = family.generate(n, s)?;
        let x = sample_conditional(&ms, s);
        let conditional_mean = (0..n).map(|k| ms.expectation_at(k, |v| v)).sum();
        let sum = (0..n).map(|k| x.realized(k)).sum();
        Ok(TrialSums { sum, conditional_mean })
    })
}

/// Evaluates the conditional bound and the decomposition for one threshold
/// over precomputed trial sums.
pub fn evaluate_threshold(sums: &[TrialSums], n: usize, t: f64) -> Result<ConcentrationReport> {
    if !(t > 0.0) {
        return Err(Error::Precondition(format!("threshold t = {t} must be positive")));
    }
    let trials = sums.len();
    let mut conditioning = 0usize;
    let mut cond_hits = 0usize;
    let mut uncond_hits = 0usize;
    // Paired differences 1{S >= t} - 1{E >= t}, for the decomposition slack.
    let mut diff_sum = 0.0;
    let mut diff_sq = 0.0;
    for s in sums {
        let exceed = s.sum >= t;
        let conditioned = s.conditional_mean < t;
        if conditioned {
            conditioning += 1;
            if exceed {
                cond_hits += 1;
            }
        }
        if exceed {
            uncond_hits += 1;
        }
        let d = exceed as u8 as f64 - (!conditioned) as u8 as f64;
        diff_sum += d;
        diff_sq += d * d;
    }
    if conditioning == 0 {
        return Err(Error::DegenerateConditioning { t, trials });
    }
    let m = trials as f64;
    let bound = hoeffding_bound(t, n);
    let conditioning_mass = conditioning as f64 / m;
    let empirical_conditional = cond_hits as f64 / conditioning as f64;
    let empirical_unconditional = uncond_hits as f64 / m;
    let decomposition_rhs = bound + (trials - conditioning) as f64 / m;
    let conditional_slack = binomial_slack(empirical_conditional, conditioning);
    let diff_mean = diff_sum / m;
    let diff_var = if trials > 1 { (diff_sq - m * diff_mean * diff_mean).max(0.0) / (m - 1.0) } else { 0.0 };
    let unconditional_slack = SLACK_SIGMAS * (diff_var / m).sqrt();
    let pass = empirical_conditional <= bound + conditional_slack
        && empirical_unconditional <= decomposition_rhs + unconditional_slack;
    Ok(ConcentrationReport {
        t,
        n,
        trials,
        empirical_conditional,
        bound,
        conditioning_mass,
        decomposition_rhs,
        empirical_unconditional,
        conditioning_count: conditioning,
        conditional_exceedances: cond_hits,
        unconditional_exceedances: uncond_hits,
        conditional_slack,
        unconditional_slack,
        low_power: conditioning_mass * m < MIN_CONDITIONING_HITS,
        form: BoundForm::Uncentered,
        applied_bound: bound,
        pass,
    })
}

pub fn conditional_hoeffding(
    family: &ProcessFamily,
    n: usize,
    t: f64,
    trials: usize,
    seed: SeedSpec,
) -> Result<ConcentrationReport> {
    if !(t > 0.0) {
        return Err(Error::Precondition(format!("threshold t = {t} must be positive")));
    }
    let sums = simulate_sums(family, n, trials, seed)?;
    evaluate_threshold(&sums, n, t)
}

/// Several thresholds evaluated on the same simulated trials.
pub fn conditional_hoeffding_sweep(
    family: &ProcessFamily,
    n: usize,
    thresholds: &[f64],
    trials: usize,
    seed: SeedSpec,
) -> Result<Vec<ConcentrationReport>> {
    let sums = simulate_sums(family, n, trials, seed)?;
    thresholds.iter().map(|&t| evaluate_threshold(&sums, n, t)).collect()
}

/// I.i.d. uniform parameters make the `X_i` independent fair coins, so the
/// classical bound applies in its centered form `exp(-2 (t - n/2)^2 / n)` for
/// `t > E S_n = n / 2`.
pub fn independent_params_unconditional(
    n: usize,
    t: f64,
    trials: usize,
    seed: SeedSpec,
) -> Result<ConcentrationReport> {
    let mean = n as f64 / 2.0;
    if !(t > mean) {
        return Err(Error::Precondition(format!("threshold t = {t} must exceed E S_n = {mean}")));
    }
    let sums = simulate_sums(&ProcessFamily::IidUniform, n, trials, seed)?;
    let mut report = evaluate_threshold(&sums, n, t)?;
    let centered = (-2.0 * (t - mean).powi(2) / n as f64).exp();
    report.form = BoundForm::Centered { mean };
    report.applied_bound = centered;
    report.unconditional_slack = binomial_slack(report.empirical_unconditional, trials);
    report.pass = report.empirical_unconditional <= centered + report.unconditional_slack;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Mixing;

    fn seed() -> SeedSpec {
        SeedSpec::new(77, 0)
    }

    #[test]
    fn bound_is_exact() {
        assert_eq!(hoeffding_bound(60.0, 100), (-72.0f64).exp());
        assert_eq!(hoeffding_bound(5.0, 10), (-5.0f64).exp());
    }

    #[test]
    fn canonical_makes_conditional_vacuous() {
        let fam = ProcessFamily::Canonical(Box::new(ProcessFamily::IidUniform));
        let r = conditional_hoeffding(&fam, 100, 55.0, 20_000, seed()).unwrap();
        assert_eq!(r.empirical_conditional, 0.0);
        assert_eq!(r.conditional_exceedances, 0);
        assert!(r.pass);
    }

    #[test]
    fn decomposition_line_holds() {
        let fam = ProcessFamily::Exchangeable { mixing: Mixing::Uniform };
        let sums = simulate_sums(&fam, 100, 20_000, seed()).unwrap();
        for t in [30.0, 50.0, 55.0, 60.0, 70.0] {
            let r = evaluate_threshold(&sums, 100, t).unwrap();
            let expanded = r.empirical_conditional * r.conditioning_mass + (1.0 - r.conditioning_mass);
            assert!(r.empirical_unconditional <= expanded + 1e-12);
            assert_eq!(r.bound, (-2.0 * t * t / 100.0).exp());
        }
    }

    #[test]
    fn empty_conditioning_is_degenerate() {
        let fam = ProcessFamily::Exchangeable { mixing: Mixing::PointMass { at: 1.0 } };
        let err = conditional_hoeffding(&fam, 10, 5.0, 100, seed()).unwrap_err();
        assert!(matches!(err, Error::DegenerateConditioning { .. }));
        assert!(err.is_degenerate());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(independent_params_unconditional(100, 50.0, 10, seed()), Err(Error::Precondition(_))));
        assert!(conditional_hoeffding(&ProcessFamily::IidUniform, 10, 0.0, 10, seed()).is_err());
        let regime = ProcessFamily::RegimeSwitching {
            q: crate::measure::StochasticMatrix2::from_switching(0.1, 0.2).unwrap(),
            mu_1: 0.8,
            lambda_1: 0.3,
        };
        assert!(matches!(conditional_hoeffding(&regime, 10, 5.0, 10, seed()), Err(Error::Domain(_))));
    }

    #[test]
    fn low_power_flag() {
        let r = conditional_hoeffding(&ProcessFamily::IidUniform, 10, 5.0, 500, seed()).unwrap();
        assert!(r.low_power);
    }
}
