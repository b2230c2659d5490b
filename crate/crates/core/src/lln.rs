//! Law-of-large-numbers experiments for two-stage Bernoulli sequences.
//!
//! The forward direction checks that when the parameter sequence has a
//! constant Cesaro limit `p`, so does the observed sequence. The converse is
//! checked through the canonical disintegration, where `theta_i = X_i` holds
//! identically and the two running means must agree bit for bit.

use serde::{Deserialize, Serialize};

use crate::cesaro::{power_of_ten_checkpoints, running_means, CesaroSeries};
use crate::ecdf::{empirical_cdf_distance, uniform_cdf};
use crate::error::{Error, Result};
use crate::parallel::try_map_trials;
use crate::params::{iid_uniform_params, MeasureSequence, Mixing, ProcessFamily};
use crate::report::{ExperimentReport, Metric};
use crate::rng::SeedSpec;
use crate::sim::{canonical_disintegration, sample_conditional, Trajectory};

/// Multiplier on the CLT standard deviation used for statistical bands.
pub const BAND_SIGMAS: f64 = 3.0;

/// Fixed absolute band for regime-switching families, whose autocorrelation
/// inflates the variance of the running mean.
pub const REGIME_BAND: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Converse,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub target_p: f64,
    pub theta_cesaro_terminal: f64,
    pub x_cesaro_terminal: f64,
    pub band: f64,
    pub direction: Direction,
    pub pass: bool,
}

/// `3 * sqrt(0.25 / n)`: three standard deviations of a mean of `n`
/// conditionally independent indicators.
pub fn binomial_band(n: usize) -> f64 {
    BAND_SIGMAS * (0.25 / n as f64).sqrt()
}

/// The deviation band used by [`check_forward`] for `family` at horizon `n`.
pub fn forward_band(family: &ProcessFamily, n: usize) -> f64 {
    match family {
        ProcessFamily::RegimeSwitching { .. } => REGIME_BAND,
        ProcessFamily::Canonical(inner) => forward_band(inner, n),
        _ => binomial_band(n),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForwardCheck {
    pub family: String,
    pub n: usize,
    pub reports: Vec<CharacterizationReport>,
    /// Running means of `theta_i` and `1{X_i = 1}` per trial, at powers of ten.
    pub theta_series: Vec<CesaroSeries>,
    pub x_series: Vec<CesaroSeries>,
    pub pass: bool,
}

/// For a family whose parameter sequence has a known almost-sure Cesaro limit
/// `p`, checks that the observed frequency of state 1 lands within the band of
/// `p` in every trial.
pub fn check_forward(family: &ProcessFamily, n: usize, trials: usize, seed: SeedSpec) -> Result<ForwardCheck> {
    let Some(p) = family.indicator_limit() else {
        return Err(Error::Config(format!("family {} has no known constant Cesaro limit", family.name())));
    };
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    family.validate()?;
    let band = forward_band(family, n);
    let checkpoints = power_of_ten_checkpoints(n);
    let per_trial = try_map_trials(trials, |i| {
        let s = seed.offset(i);
        let ms = family.generate(n, s)?;
        let x = sample_conditional(&ms, s);
        let theta = CesaroSeries::from_terms(ms.state_one_weights(), &checkpoints)?;
        let xs = CesaroSeries::from_terms(x.indicators(), &checkpoints)?;
        Ok::<_, Error>((theta, xs))
    })?;
    let mut reports = Vec::with_capacity(trials);
    let mut theta_series = Vec::with_capacity(trials);
    let mut x_series = Vec::with_capacity(trials);
    for (theta, xs) in per_trial {
        let x_terminal = xs.last();
        reports.push(CharacterizationReport {
            target_p: p,
            theta_cesaro_terminal: theta.last(),
            x_cesaro_terminal: x_terminal,
            band,
            direction: Direction::Forward,
            pass: (x_terminal - p).abs() <= band,
        });
        theta_series.push(theta);
        x_series.push(xs);
    }
    let pass = reports.iter().all(|r| r.pass);
    Ok(ForwardCheck { family: family.name(), n, reports, theta_series, x_series, pass })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConverseCheck {
    pub report: CharacterizationReport,
    pub theta_series: CesaroSeries,
    pub x_series: CesaroSeries,
    /// Number of `n` at which the two running means were compared.
    pub compared: usize,
}

/// Samples `X` from `family`, extracts its canonical disintegration and
/// compares the running means of `theta_i = xi_i{1}` and `1{X_i = 1}` at
/// every `n`. Passes only on exact equality.
pub fn check_converse(family: &ProcessFamily, n: usize, seed: SeedSpec) -> Result<ConverseCheck> {
    let ms = family.generate(n, seed)?;
    if !ms.is_binary() {
        return Err(Error::Domain(format!(
            "converse check needs a two-point support containing 1, got {:?}",
            ms.support()
        )));
    }
    let x = sample_conditional(&ms, seed);
    converse_from_canonical(&x, &canonical_disintegration(&x))
}

fn converse_from_canonical(x: &Trajectory, canonical: &MeasureSequence) -> Result<ConverseCheck> {
    let thetas = canonical.state_one_weights();
    let indicators: Vec<f64> = x.indicators().collect();
    let theta_all = running_means(&thetas);
    let x_all = running_means(&indicators);
    let identical =
        theta_all.len() == x_all.len() && theta_all.iter().zip(&x_all).all(|(a, b)| a.to_bits() == b.to_bits());
    let checkpoints = power_of_ten_checkpoints(x.len());
    let theta_series = CesaroSeries::from_terms(thetas, &checkpoints)?;
    let x_series = CesaroSeries::from_terms(indicators, &checkpoints)?;
    let report = CharacterizationReport {
        target_p: x_series.last(),
        theta_cesaro_terminal: theta_series.last(),
        x_cesaro_terminal: x_series.last(),
        band: 0.0,
        direction: Direction::Converse,
        pass: identical,
    };
    Ok(ConverseCheck { report, theta_series, x_series, compared: x_all.len() })
}

/// Converse check on an explicit trajectory of labels in `{0, 1}`.
pub fn check_converse_trajectory(x: &Trajectory) -> Result<ConverseCheck> {
    if !x.is_binary() {
        return Err(Error::Domain(format!("support {:?} is not binary", x.support())));
    }
    converse_from_canonical(x, &canonical_disintegration(x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitDistributionReport {
    pub terminal_means: Vec<f64>,
    /// The parameter drawn in each trial.
    pub thetas: Vec<f64>,
    pub reference: String,
    pub ks_distance: f64,
    pub ks_threshold: f64,
    /// Standard deviation of the terminal means across trials.
    pub across_trial_sd: f64,
    /// Fraction of trials with `|mean - theta| <= 3 sqrt(theta (1 - theta) / n)`.
    pub conditional_coverage: f64,
    pub pass: bool,
}

pub const KS_THRESHOLD: f64 = 0.05;

/// Terminal means of exchangeable sequences follow the mixing law rather than
/// concentrating at a constant. Compares them against Uniform[0, 1].
pub fn exchangeable_limit_distribution(
    mixing: Mixing,
    n: usize,
    trials: usize,
    seed: SeedSpec,
    ks_threshold: f64,
) -> Result<LimitDistributionReport> {
    if trials < 100 {
        return Err(Error::Precondition(format!("need at least 100 trials, got {trials}")));
    }
    let family = ProcessFamily::Exchangeable { mixing };
    family.validate()?;
    let pairs = try_map_trials(trials, |i| {
        let s = seed.offset(i);
        let ms = family.generate(n, s)?;
        let theta = ms.state_one_weights()[0];
        let x = sample_conditional(&ms, s);
        Ok::<_, Error>((theta, x.indicators().sum::<f64>() / n as f64))
    })?;
    let (thetas, terminal_means): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    let ks_distance = empirical_cdf_distance(&terminal_means, uniform_cdf)?;
    let mean = terminal_means.iter().sum::<f64>() / trials as f64;
    let var = terminal_means.iter().map(|m| (m - mean).powi(2)).sum::<f64>() / (trials - 1) as f64;
    let covered = thetas
        .iter()
        .zip(&terminal_means)
        .filter(|(t, m)| (*m - *t).abs() <= BAND_SIGMAS * (*t * (1.0 - *t) / n as f64).sqrt())
        .count();
    Ok(LimitDistributionReport {
        terminal_means,
        thetas,
        reference: "uniform[0,1]".into(),
        ks_distance,
        ks_threshold,
        across_trial_sd: var.sqrt(),
        conditional_coverage: covered as f64 / trials as f64,
        pass: ks_distance <= ks_threshold,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomWalkOutcome {
    pub report: ExperimentReport,
    /// Partial sums `S_k = Z_0 + ... + Z_{k-1}` of the first trial, `k = 1..=n`.
    pub partial_sums: Vec<i64>,
    /// Steps `Z_k = 2 X_k - 1` of the first trial.
    pub steps: Vec<i64>,
    /// Pooled frequency of `+1` over all trials.
    pub plus_frequency: f64,
    /// Count of `+1` steps per trial.
    pub plus_counts: Vec<u64>,
}

/// Rademacher steps `Z = 2X - 1` built from i.i.d. uniform parameters.
pub fn random_walk_symmetry(n: usize, trials: usize, seed: SeedSpec) -> Result<RandomWalkOutcome> {
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    let per_trial = try_map_trials(trials, |i| {
        let s = seed.offset(i);
        let ms = iid_uniform_params(n, s)?;
        let x = sample_conditional(&ms, s);
        let steps: Vec<i64> = x.values().iter().map(|&v| 2 * v - 1).collect();
        Ok::<_, Error>(steps)
    })?;
    let plus_counts: Vec<u64> =
        per_trial.iter().map(|steps| steps.iter().filter(|&&z| z == 1).count() as u64).collect();
    let total = (n * trials) as f64;
    let plus_frequency = plus_counts.iter().sum::<u64>() as f64 / total;
    let sum_all: i64 = per_trial.iter().flat_map(|s| s.iter()).sum();
    let steps = per_trial.into_iter().next().unwrap_or_default();
    let mut acc = 0i64;
    let partial_sums = steps
        .iter()
        .map(|z| {
            acc += z;
            acc
        })
        .collect();

    let mut report = ExperimentReport::new("random-walk", seed.base_seed);
    report.push(Metric::within("freq_plus_one", plus_frequency, 0.5, binomial_band(n * trials)));
    // Var(Z) = 1, so the band on S_n / n is twice the indicator band.
    report.push(Metric::within("s_n_over_n", sum_all as f64 / total, 0.0, 2.0 * binomial_band(n * trials)));
    Ok(RandomWalkOutcome { report, partial_sums, steps, plus_frequency, plus_counts })
}
