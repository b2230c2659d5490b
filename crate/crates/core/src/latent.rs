//! Estimating functionals of a hidden process from its observations alone.

use serde::{Deserialize, Serialize};

use crate::cesaro::running_means;
use crate::error::{Error, Result};
use crate::lln::{binomial_band, REGIME_BAND};
use crate::measure::StochasticMatrix2;
use crate::params::{
    check_regime_levels, check_volatility, regime_functional_target, regime_pair_frequencies, regime_path,
    stationary_volatility_draw, submartingale_from_increments, submartingale_params, volatility_measures,
    volatility_path, z_grid, MeasureSequence, VolatilityParams, REGIME_SUPPORT,
};
use crate::rng::{Lane, SeedSpec};
use crate::sim::sample_conditional;

/// Steps simulated by the regime-chain oracle.
pub const REGIME_ORACLE_STEPS: usize = 1_000_000;

/// Independent stationary draws of `H` used by the volatility oracle.
pub const VOLATILITY_ORACLE_DRAWS: usize = 1_000_000;

/// Absolute band for the volatility time average.
pub const VOLATILITY_BAND: f64 = 0.02;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatentEstimateReport {
    /// Time average of `f(X_t)`.
    pub estimator: f64,
    pub target: f64,
    pub oracle: f64,
    /// `|estimator - target|`.
    pub abs_error: f64,
    pub band: f64,
    pub n: usize,
}

impl LatentEstimateReport {
    fn new(estimator: f64, target: f64, oracle: f64, band: f64, n: usize) -> Self {
        Self { estimator, target, oracle, abs_error: (estimator - target).abs(), band, n }
    }

    pub fn pass(&self) -> bool {
        self.abs_error <= self.band
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeEstimate {
    pub report: LatentEstimateReport,
    /// Hidden regimes, `0` for mu and `1` for lambda.
    pub regimes: Vec<u8>,
    /// Observations in `{-1, 1}`.
    pub observations: Vec<i64>,
    pub pair_frequencies: [[f64; 2]; 2],
    pub stationary: (f64, f64),
}

/// Frequency of state 1 against `mu_1 pi_mu + lambda_1 pi_lambda`. The
/// oracle runs a separate long regime chain on the oracle stream and averages
/// the per-step means of state 1.
pub fn estimate_regime_functional(
    q: &StochasticMatrix2,
    mu_1: f64,
    lambda_1: f64,
    n: usize,
    seed: SeedSpec,
) -> Result<RegimeEstimate> {
    check_regime_levels(mu_1, lambda_1)?;
    let target = regime_functional_target(q, mu_1, lambda_1)?;
    let stationary = crate::measure::stationary_distribution(q)?;

    let regimes = regime_path(q, n, &mut seed.stream(Lane::Parameters))?;
    let ms = crate::params::regime_switching_params(q, mu_1, lambda_1, n, seed)?;
    let x = sample_conditional(&ms, seed);
    let estimator = x.indicators().sum::<f64>() / n as f64;

    let oracle_path = regime_path(q, REGIME_ORACLE_STEPS, &mut seed.oracle().stream(Lane::Parameters))?;
    let oracle =
        oracle_path.iter().map(|&r| if r == 0 { mu_1 } else { lambda_1 }).sum::<f64>() / REGIME_ORACLE_STEPS as f64;

    debug_assert!(x.values().iter().all(|v| REGIME_SUPPORT.contains(v)));
    Ok(RegimeEstimate {
        report: LatentEstimateReport::new(estimator, target, oracle, REGIME_BAND, n),
        pair_frequencies: regime_pair_frequencies(&regimes),
        regimes,
        observations: x.values().to_vec(),
        stationary,
    })
}

/// The three aligned series of one submartingale coin path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubmartingaleEstimate {
    pub report: LatentEstimateReport,
    pub theta: Vec<f64>,
    pub outcomes: Vec<i64>,
    /// `(X_0 + ... + X_k) / (k + 1)`.
    pub running_mean: Vec<f64>,
}

/// Band for the terminal proportion of heads: the conditional binomial band
/// plus the envelope residual `2^-(n+1)`.
pub fn submartingale_band(n: usize) -> f64 {
    binomial_band(n) + 0.5f64.powi(n.min(2000) as i32 + 1)
}

pub fn estimate_submartingale_limit(n: usize, seed: SeedSpec) -> Result<SubmartingaleEstimate> {
    let ms = submartingale_params(n, seed)?;
    submartingale_estimate(ms, seed)
}

/// Test hook: the same estimate driven by explicit increments `u_k`.
pub fn estimate_submartingale_from_increments(us: &[f64], seed: SeedSpec) -> Result<SubmartingaleEstimate> {
    let ms = submartingale_from_increments(us, seed)?;
    submartingale_estimate(ms, seed)
}

fn submartingale_estimate(ms: MeasureSequence, seed: SeedSpec) -> Result<SubmartingaleEstimate> {
    let n = ms.len();
    let theta = ms.state_one_weights();
    let x = sample_conditional(&ms, seed);
    let indicators: Vec<f64> = x.indicators().collect();
    let running_mean = running_means(&indicators);
    let estimator = *running_mean.last().expect("n >= 1");
    let target = *theta.last().expect("n >= 1");
    Ok(SubmartingaleEstimate {
        report: LatentEstimateReport::new(estimator, target, target, submartingale_band(n), n),
        theta,
        outcomes: x.values().to_vec(),
        running_mean,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolatilityEstimate {
    pub report: LatentEstimateReport,
    pub h: Vec<f64>,
    /// Realized returns `exp(H_t / 2) Z_t`.
    pub returns: Vec<f64>,
    pub oracle_seed: SeedSpec,
}

/// `g(h) = mean_j f(exp(h / 2) z_j)`, the conditional mean of `f(X)` given `H = h`.
pub fn volatility_functional<F: Fn(f64) -> f64>(h: f64, grid: &[f64], f: F) -> f64 {
    let scale = (h / 2.0).exp();
    grid.iter().map(|z| f(scale * z)).sum::<f64>() / grid.len() as f64
}

/// Monte Carlo mean of `g(H)` over independent stationary draws of `H`.
pub fn volatility_oracle<F: Fn(f64) -> f64>(
    params: &VolatilityParams,
    f: F,
    draws: usize,
    seed: SeedSpec,
) -> Result<f64> {
    check_volatility(params.beta, params.w_max, params.truncation_terms)?;
    if draws == 0 {
        return Err(Error::Domain("oracle needs at least one draw".into()));
    }
    let grid = z_grid(params.z_levels, params.z_max);
    let mut stream = seed.stream(Lane::Parameters);
    let mut acc = 0.0;
    for _ in 0..draws {
        let h =
            stationary_volatility_draw(params.alpha, params.beta, params.w_max, params.truncation_terms, &mut stream);
        acc += volatility_functional(h, &grid, &f);
    }
    Ok(acc / draws as f64)
}

/// Time average of `f(X_t)` against the independent-copies oracle computed on
/// `seed.oracle()`.
pub fn estimate_volatility_functional<F: Fn(f64) -> f64>(
    params: &VolatilityParams,
    f: F,
    n: usize,
    seed: SeedSpec,
) -> Result<VolatilityEstimate> {
    let oracle_seed = seed.oracle();
    let oracle = volatility_oracle(params, &f, VOLATILITY_ORACLE_DRAWS, oracle_seed)?;
    let mut est = estimate_volatility_against(params, f, n, seed, oracle)?;
    est.oracle_seed = oracle_seed;
    Ok(est)
}

/// As [`estimate_volatility_functional`] with a precomputed target.
pub fn estimate_volatility_against<F: Fn(f64) -> f64>(
    params: &VolatilityParams,
    f: F,
    n: usize,
    seed: SeedSpec,
    target: f64,
) -> Result<VolatilityEstimate> {
    let path = volatility_path(params.alpha, params.beta, params.w_max, params.truncation_terms, n, seed)?;
    let ms = volatility_measures(&path, params.z_levels, params.z_max, seed)?;
    let x = sample_conditional(&ms, seed);
    let returns = x.realized_values();
    let estimator = returns.iter().map(|&r| f(r)).sum::<f64>() / n as f64;
    Ok(VolatilityEstimate {
        report: LatentEstimateReport::new(estimator, target, target, VOLATILITY_BAND, n),
        h: path.h,
        returns,
        oracle_seed: seed.oracle(),
    })
}

/// `E exp(W)` for `W` uniform on `[-w, w]`: `(e^w - e^-w) / (2w)`.
pub fn uniform_exp_moment(w_max: f64) -> f64 {
    if w_max == 0.0 {
        1.0
    } else {
        w_max.sinh() / w_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed() -> SeedSpec {
        SeedSpec::new(31337, 0)
    }

    #[test]
    fn regime_fixture() {
        let q = StochasticMatrix2::new([[0.9, 0.1], [0.2, 0.8]]).unwrap();
        let r = estimate_regime_functional(&q, 0.8, 0.3, 100_000, seed()).unwrap();
        assert!((r.report.target - 19.0 / 30.0).abs() < 1e-15);
        assert!(r.report.abs_error <= 0.02, "{:?}", r.report);
        assert!((r.report.oracle - r.report.target).abs() <= 0.01);
        assert_eq!(r.regimes.len(), 100_000);
    }

    #[test]
    fn submartingale_forced_zero() {
        let r = estimate_submartingale_from_increments(&[0.0; 40], seed()).unwrap();
        assert!(r.theta.iter().all(|&t| t == 0.0));
        assert!(r.outcomes.iter().all(|&x| x == 0));
        assert_eq!(r.report.estimator, 0.0);
    }

    #[test]
    fn submartingale_short_series_align() {
        let r = estimate_submartingale_limit(20, seed()).unwrap();
        assert_eq!(r.theta.len(), 20);
        assert_eq!(r.outcomes.len(), 20);
        assert_eq!(r.running_mean.len(), 20);
    }

    #[test]
    fn volatility_constant_f() {
        let p = VolatilityParams::default();
        let r = estimate_volatility_against(&p, |_| 3.0, 1000, seed(), 3.0).unwrap();
        assert_eq!(r.report.estimator, 3.0);
        assert_eq!(r.report.abs_error, 0.0);
        let oracle = volatility_oracle(&p, |_| 3.0, 1000, seed()).unwrap();
        assert!((oracle - 3.0).abs() < 1e-12);
    }

    #[test]
    fn exp_moment_closed_form() {
        let w: f64 = 1.0;
        assert!((uniform_exp_moment(w) - (w.exp() - (-w).exp()) / (2.0 * w)).abs() < 1e-15);
        assert_eq!(uniform_exp_moment(0.0), 1.0);
    }

    #[test]
    fn oracle_uses_disjoint_stream() {
        let p = VolatilityParams { beta: 0.0, ..Default::default() };
        let s = seed();
        let r = estimate_volatility_against(&p, |x| x * x, 10, s, 0.0).unwrap();
        assert_ne!(r.oracle_seed.stream_index, s.stream_index);
    }
}
