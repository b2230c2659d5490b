//! First-stage generators: random sequences of measures.
//!
//! A [`MeasureSequence`] stores its measures row-major over one shared
//! support, together with a [`Realization`] that maps a label at step `t` to
//! the real number an observer would record.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measure::{
    check_support, check_weights, stationary_distribution, FiniteMeasure, Label, Measure, StochasticMatrix2,
    BERNOULLI_SUPPORT,
};
use crate::rng::{Lane, SeedSpec, Stream};

/// Default number of terms kept from the stationary series for `H_0`.
pub const DEFAULT_TRUNCATION_TERMS: usize = 64;

/// Regime measures live on `{-1, 1}`.
pub const REGIME_SUPPORT: [Label; 2] = [-1, 1];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    IidUniform,
    Exchangeable,
    RegimeSwitching,
    Submartingale,
    Volatility,
    Canonical,
    Custom,
}

/// How a label observed at step `t` becomes a real value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Realization {
    /// The label itself.
    Labels,
    /// `scales[t] * levels[label]`; labels index `levels`.
    Scaled { levels: Arc<[f64]>, scales: Arc<[f64]> },
}

impl Realization {
    #[inline]
    pub fn value(&self, t: usize, label: Label) -> f64 {
        match self {
            Realization::Labels => label as f64,
            Realization::Scaled { levels, scales } => scales[t] * levels[label as usize],
        }
    }
}

/// Borrowed view of one measure in a sequence.
#[derive(Debug, Clone, Copy)]
pub struct MeasureView<'a> {
    support: &'a [Label],
    weights: &'a [f64],
}

impl Measure for MeasureView<'_> {
    fn support(&self) -> &[Label] {
        self.support
    }

    fn weights(&self) -> &[f64] {
        self.weights
    }
}

impl MeasureView<'_> {
    pub fn to_owned(&self) -> FiniteMeasure {
        FiniteMeasure::new(self.support.to_vec(), self.weights.to_vec()).expect("rows are validated on construction")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureSequence {
    support: Arc<[Label]>,
    weights: Vec<f64>,
    realization: Realization,
    family: FamilyTag,
    seed: SeedSpec,
}

impl MeasureSequence {
    /// Builds a sequence from flattened rows, validating every row.
    pub fn from_rows(
        support: impl Into<Arc<[Label]>>,
        weights: Vec<f64>,
        realization: Realization,
        family: FamilyTag,
        seed: SeedSpec,
    ) -> Result<Self> {
        let support = support.into();
        check_support(&support)?;
        let k = support.len();
        if weights.is_empty() || weights.len() % k != 0 {
            return Err(Error::InvalidMeasure(format!("{} weights do not form rows of {k}", weights.len())));
        }
        for row in weights.chunks_exact(k) {
            check_weights(&support, row)?;
        }
        let n = weights.len() / k;
        if let Realization::Scaled { levels, scales } = &realization {
            if scales.len() != n {
                return Err(Error::InvalidMeasure(format!("{} scales for {n} steps", scales.len())));
            }
            if support.iter().any(|&s| s < 0 || s as usize >= levels.len()) {
                return Err(Error::InvalidMeasure("labels must index the level table".into()));
            }
        }
        Ok(Self { support, weights, realization, family, seed })
    }

    /// Builds a sequence from owned measures, which must share one support.
    pub fn from_measures(measures: &[FiniteMeasure], seed: SeedSpec) -> Result<Self> {
        let Some(first) = measures.first() else {
            return Err(Error::InvalidMeasure("empty measure sequence".into()));
        };
        let support: Arc<[Label]> = first.support().into();
        let mut weights = Vec::with_capacity(measures.len() * support.len());
        for m in measures {
            if m.support() != &*support {
                return Err(Error::InvalidMeasure("measures do not share a support".into()));
            }
            weights.extend_from_slice(m.weights());
        }
        Self::from_rows(support, weights, Realization::Labels, FamilyTag::Custom, seed)
    }

    fn bernoulli(thetas: &[f64], family: FamilyTag, seed: SeedSpec) -> Result<Self> {
        let mut weights = Vec::with_capacity(2 * thetas.len());
        for &theta in thetas {
            if !(0.0..=1.0).contains(&theta) {
                return Err(Error::Domain(format!("Bernoulli parameter {theta} outside [0, 1]")));
            }
            weights.extend_from_slice(&[1.0 - theta, theta]);
        }
        Self::from_rows(BERNOULLI_SUPPORT.to_vec(), weights, Realization::Labels, family, seed)
    }

    pub fn len(&self) -> usize {
        self.weights.len() / self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn support(&self) -> &[Label] {
        &self.support
    }

    pub(crate) fn shared_support(&self) -> Arc<[Label]> {
        self.support.clone()
    }

    pub fn measure(&self, i: usize) -> MeasureView<'_> {
        let k = self.support.len();
        MeasureView { support: &self.support, weights: &self.weights[i * k..(i + 1) * k] }
    }

    pub fn measures(&self) -> impl ExactSizeIterator<Item = MeasureView<'_>> + '_ {
        self.weights.chunks_exact(self.support.len()).map(|w| MeasureView { support: &self.support, weights: w })
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn seed(&self) -> SeedSpec {
        self.seed
    }

    /// `xi_i(f)` where `f` acts on realized values.
    pub fn expectation_at<F: Fn(f64) -> f64>(&self, i: usize, f: F) -> f64 {
        self.measure(i).expectation(|s| f(self.realization.value(i, s)))
    }

    /// Weight of label `1` at each step, i.e. the parameter sequence `theta_i`
    /// for measures on `{0, 1}` or `{-1, 1}`.
    pub fn state_one_weights(&self) -> Vec<f64> {
        match self.support.iter().position(|&s| s == 1) {
            Some(pos) => self.measures().map(|m| m.weights()[pos]).collect(),
            None => vec![0.0; self.len()],
        }
    }

    /// True for two-point label-valued supports containing 1, i.e. coins on
    /// `{0, 1}` or `{-1, 1}`.
    pub fn is_binary(&self) -> bool {
        self.support.len() == 2 && self.support.contains(&1) && self.realization == Realization::Labels
    }
}

fn check_horizon(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("horizon must be at least 1".into()));
    }
    Ok(())
}

/// `theta_i` i.i.d. Uniform[0, 1].
pub fn iid_uniform_params(n: usize, seed: SeedSpec) -> Result<MeasureSequence> {
    check_horizon(n)?;
    let mut s = seed.stream(Lane::Parameters);
    let thetas: Vec<f64> = (0..n).map(|_| s.uniform()).collect();
    MeasureSequence::bernoulli(&thetas, FamilyTag::IidUniform, seed)
}

/// Law of the single parameter shared by an exchangeable sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Mixing {
    Uniform,
    PointMass {
        at: f64,
    },
    /// `high` with probability `p_high`, otherwise `low`.
    TwoPoint {
        low: f64,
        high: f64,
        p_high: f64,
    },
}

impl Mixing {
    pub fn validate(&self) -> Result<()> {
        let unit = |x: f64| (0.0..=1.0).contains(&x);
        match *self {
            Mixing::Uniform => Ok(()),
            Mixing::PointMass { at } if unit(at) => Ok(()),
            Mixing::TwoPoint { low, high, p_high } if unit(low) && unit(high) && unit(p_high) => Ok(()),
            other => Err(Error::Config(format!("unsupported mixing {other:?}"))),
        }
    }

    pub fn draw(&self, stream: &mut Stream) -> f64 {
        match *self {
            Mixing::Uniform => stream.uniform(),
            Mixing::PointMass { at } => at,
            Mixing::TwoPoint { low, high, p_high } => {
                if stream.uniform() < p_high {
                    high
                } else {
                    low
                }
            }
        }
    }

    /// Mean of the mixing law; equals the Cesaro limit only for point masses.
    pub fn mean(&self) -> f64 {
        match *self {
            Mixing::Uniform => 0.5,
            Mixing::PointMass { at } => at,
            Mixing::TwoPoint { low, high, p_high } => p_high * high + (1.0 - p_high) * low,
        }
    }

    /// CDF of the mixing law.
    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            Mixing::Uniform => x.clamp(0.0, 1.0),
            Mixing::PointMass { at } => (x >= at) as u8 as f64,
            Mixing::TwoPoint { low, high, p_high } => {
                let lo = if x >= low { 1.0 - p_high } else { 0.0 };
                let hi = if x >= high { p_high } else { 0.0 };
                lo + hi
            }
        }
    }
}

/// One `theta` drawn from `mixing`, repeated `n` times.
pub fn exchangeable_params(n: usize, mixing: Mixing, seed: SeedSpec) -> Result<MeasureSequence> {
    check_horizon(n)?;
    mixing.validate()?;
    let theta = mixing.draw(&mut seed.stream(Lane::Parameters));
    MeasureSequence::bernoulli(&vec![theta; n], FamilyTag::Exchangeable, seed)
}

/// Two-state chain started from its stationary law: `0` is regime mu, `1` is
/// regime lambda.
pub fn regime_path(q: &StochasticMatrix2, n: usize, stream: &mut Stream) -> Result<Vec<u8>> {
    check_horizon(n)?;
    let (pi_mu, _) = stationary_distribution(q)?;
    let mut regime = if stream.uniform() < pi_mu { 0 } else { 1 };
    let mut path = Vec::with_capacity(n);
    path.push(regime as u8);
    for _ in 1..n {
        regime = q.step(regime, stream.uniform());
        path.push(regime as u8);
    }
    Ok(path)
}

/// Regime-switching Bernoulli measures on `{-1, 1}`: weight `mu_1` on state 1
/// in regime mu, `lambda_1` in regime lambda.
pub fn regime_switching_params(
    q: &StochasticMatrix2,
    mu_1: f64,
    lambda_1: f64,
    n: usize,
    seed: SeedSpec,
) -> Result<MeasureSequence> {
    check_regime_levels(mu_1, lambda_1)?;
    let path = regime_path(q, n, &mut seed.stream(Lane::Parameters))?;
    Ok(regime_measures(&path, mu_1, lambda_1, seed))
}

pub(crate) fn check_regime_levels(mu_1: f64, lambda_1: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&mu_1) || !(0.0..=1.0).contains(&lambda_1) {
        return Err(Error::Domain(format!("regime levels ({mu_1}, {lambda_1}) outside [0, 1]")));
    }
    if mu_1 <= lambda_1 {
        return Err(Error::Convention { mu_1, lambda_1 });
    }
    Ok(())
}

/// Empirical law of consecutive regime pairs `(r_k, r_{k+1})`.
pub fn regime_pair_frequencies(path: &[u8]) -> [[f64; 2]; 2] {
    let mut counts = [[0usize; 2]; 2];
    for w in path.windows(2) {
        counts[w[0] as usize][w[1] as usize] += 1;
    }
    let total = path.len().saturating_sub(1).max(1) as f64;
    counts.map(|row| row.map(|c| c as f64 / total))
}

fn regime_measures(path: &[u8], mu_1: f64, lambda_1: f64, seed: SeedSpec) -> MeasureSequence {
    let mut weights = Vec::with_capacity(2 * path.len());
    for &r in path {
        let p = if r == 0 { mu_1 } else { lambda_1 };
        weights.extend_from_slice(&[1.0 - p, p]);
    }
    MeasureSequence::from_rows(REGIME_SUPPORT.to_vec(), weights, Realization::Labels, FamilyTag::RegimeSwitching, seed)
        .expect("levels validated")
}

/// `theta_0 = u_0 / 2`, `theta_k = theta_{k-1} + 2^-(k+1) u_k`.
pub fn submartingale_path(increments: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(increments.len());
    let mut theta = 0.0;
    let mut scale = 0.5;
    for &u in increments {
        theta += scale * u;
        out.push(theta);
        scale *= 0.5;
    }
    out
}

/// Upper envelope `1 - 2^-(k+1)` of the submartingale at step `k`.
pub fn submartingale_envelope(k: usize) -> f64 {
    1.0 - 0.5f64.powi(k as i32 + 1)
}

pub fn submartingale_params(n: usize, seed: SeedSpec) -> Result<MeasureSequence> {
    check_horizon(n)?;
    let mut s = seed.stream(Lane::Parameters);
    let us: Vec<f64> = (0..n).map(|_| s.uniform()).collect();
    submartingale_from_increments(&us, seed)
}

/// Test hook: the submartingale driven by caller-supplied `u_k` in `[0, 1]`.
pub fn submartingale_from_increments(us: &[f64], seed: SeedSpec) -> Result<MeasureSequence> {
    check_horizon(us.len())?;
    if let Some(u) = us.iter().find(|u| !(0.0..=1.0).contains(*u)) {
        return Err(Error::Domain(format!("increment {u} outside [0, 1]")));
    }
    MeasureSequence::bernoulli(&submartingale_path(us), FamilyTag::Submartingale, seed)
}

/// Latent log-volatility `H_t = alpha + beta H_{t-1} + W_t`, `W` uniform on
/// `[-w_max, w_max]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolatilityPath {
    pub h: Vec<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub w_max: f64,
    pub truncation_terms: usize,
}

impl VolatilityPath {
    /// `(|alpha| + w_max) / (1 - |beta|)`.
    pub fn stationary_bound(&self) -> f64 {
        volatility_bound(self.alpha, self.beta, self.w_max)
    }

    /// Checks both path invariants. The recursion is evaluated in floating
    /// point, so each comparison allows a few ulps.
    pub fn check(&self) -> Result<()> {
        let slack = 1.0 + 8.0 * f64::EPSILON;
        let bound = self.stationary_bound() * slack;
        if let Some((t, h)) = self.h.iter().enumerate().find(|(_, h)| h.abs() > bound) {
            return Err(Error::Domain(format!("|H_{t}| = {} exceeds {bound}", h.abs())));
        }
        for t in 1..self.h.len() {
            let w = self.h[t] - self.alpha - self.beta * self.h[t - 1];
            let tol = 8.0 * f64::EPSILON * (self.alpha.abs() + self.h[t].abs() + self.h[t - 1].abs() + self.w_max);
            if w.abs() > self.w_max + tol {
                return Err(Error::Domain(format!("innovation {w} at t = {t} outside the W support")));
            }
        }
        Ok(())
    }
}

pub fn volatility_bound(alpha: f64, beta: f64, w_max: f64) -> f64 {
    (alpha.abs() + w_max) / (1.0 - beta.abs())
}

pub(crate) fn check_volatility(beta: f64, w_max: f64, truncation_terms: usize) -> Result<()> {
    if !(beta.abs() < 1.0) {
        return Err(Error::Stationarity(beta));
    }
    if !(w_max >= 0.0) || !w_max.is_finite() {
        return Err(Error::Domain(format!("w_max = {w_max} must be a nonnegative finite number")));
    }
    if truncation_terms == 0 {
        return Err(Error::Domain("truncation_terms must be at least 1".into()));
    }
    Ok(())
}

/// One approximately stationary draw of `H_0` from the truncated series
/// `alpha / (1 - beta) + sum_{k < terms} beta^k W_{-k}`.
pub fn stationary_volatility_draw(
    alpha: f64,
    beta: f64,
    w_max: f64,
    truncation_terms: usize,
    stream: &mut Stream,
) -> f64 {
    let mut h = alpha / (1.0 - beta);
    let mut power = 1.0;
    for _ in 0..truncation_terms {
        h += power * stream.symmetric(w_max);
        power *= beta;
    }
    h
}

pub fn volatility_path(
    alpha: f64,
    beta: f64,
    w_max: f64,
    truncation_terms: usize,
    n: usize,
    seed: SeedSpec,
) -> Result<VolatilityPath> {
    check_horizon(n)?;
    check_volatility(beta, w_max, truncation_terms)?;
    let mut s = seed.stream(Lane::Parameters);
    let mut h = Vec::with_capacity(n);
    let mut prev = stationary_volatility_draw(alpha, beta, w_max, truncation_terms, &mut s);
    h.push(prev);
    for _ in 1..n {
        prev = alpha + beta * prev + s.symmetric(w_max);
        h.push(prev);
    }
    Ok(VolatilityPath { h, alpha, beta, w_max, truncation_terms })
}

/// `z_levels` equally spaced points in `[-z_max, z_max]`, exactly antisymmetric.
pub fn z_grid(z_levels: usize, z_max: f64) -> Vec<f64> {
    let d = (z_levels - 1) as f64;
    (0..z_levels).map(|j| z_max * (2.0 * j as f64 - d) / d).collect()
}

/// Conditional laws of `X_t = exp(H_t / 2) Z_t` with `Z` uniform on the grid.
pub fn volatility_measures(
    path: &VolatilityPath,
    z_levels: usize,
    z_max: f64,
    seed: SeedSpec,
) -> Result<MeasureSequence> {
    if z_levels < 2 {
        return Err(Error::Domain(format!("z_levels = {z_levels} must be at least 2")));
    }
    if !(z_max > 0.0) || !z_max.is_finite() {
        return Err(Error::Domain(format!("z_max = {z_max} must be positive")));
    }
    let n = path.h.len();
    let support: Vec<Label> = (0..z_levels as Label).collect();
    let w = 1.0 / z_levels as f64;
    let weights = vec![w; n * z_levels];
    let scales: Arc<[f64]> = path.h.iter().map(|h| (h / 2.0).exp()).collect();
    let realization = Realization::Scaled { levels: z_grid(z_levels, z_max).into(), scales };
    MeasureSequence::from_rows(support, weights, realization, FamilyTag::Volatility, seed)
}

/// Parameters of the stochastic volatility family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VolatilityParams {
    pub alpha: f64,
    pub beta: f64,
    pub w_max: f64,
    pub truncation_terms: usize,
    pub z_levels: usize,
    pub z_max: f64,
}

impl Default for VolatilityParams {
    fn default() -> Self {
        Self { alpha: 0.0, beta: 0.5, w_max: 1.0, truncation_terms: DEFAULT_TRUNCATION_TERMS, z_levels: 2, z_max: 1.0 }
    }
}

/// A process family together with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum ProcessFamily {
    IidUniform,
    Exchangeable {
        mixing: Mixing,
    },
    RegimeSwitching {
        q: StochasticMatrix2,
        mu_1: f64,
        lambda_1: f64,
    },
    Submartingale,
    Volatility(VolatilityParams),
    /// The canonical (Dirac) disintegration of a trajectory sampled from
    /// `inner`.
    Canonical(Box<ProcessFamily>),
}

impl ProcessFamily {
    pub fn tag(&self) -> FamilyTag {
        match self {
            ProcessFamily::IidUniform => FamilyTag::IidUniform,
            ProcessFamily::Exchangeable { .. } => FamilyTag::Exchangeable,
            ProcessFamily::RegimeSwitching { .. } => FamilyTag::RegimeSwitching,
            ProcessFamily::Submartingale => FamilyTag::Submartingale,
            ProcessFamily::Volatility(_) => FamilyTag::Volatility,
            ProcessFamily::Canonical(_) => FamilyTag::Canonical,
        }
    }

    pub fn name(&self) -> String {
        match self {
            ProcessFamily::Canonical(inner) => format!("canonical({})", inner.name()),
            ProcessFamily::IidUniform => "iid-uniform".into(),
            ProcessFamily::Exchangeable { .. } => "exchangeable".into(),
            ProcessFamily::RegimeSwitching { .. } => "regime-switch".into(),
            ProcessFamily::Submartingale => "submartingale".into(),
            ProcessFamily::Volatility(_) => "stochvol".into(),
        }
    }

    /// Checks parameters without drawing anything.
    pub fn validate(&self) -> Result<()> {
        match self {
            ProcessFamily::IidUniform | ProcessFamily::Submartingale => Ok(()),
            ProcessFamily::Exchangeable { mixing } => mixing.validate(),
            ProcessFamily::RegimeSwitching { q, mu_1, lambda_1 } => {
                check_regime_levels(*mu_1, *lambda_1)?;
                stationary_distribution(q).map(|_| ())
            }
            ProcessFamily::Volatility(p) => {
                check_volatility(p.beta, p.w_max, p.truncation_terms)?;
                if p.z_levels < 2 || !(p.z_max > 0.0) {
                    return Err(Error::Domain("z grid needs at least 2 levels and z_max > 0".into()));
                }
                Ok(())
            }
            ProcessFamily::Canonical(inner) => inner.validate(),
        }
    }

    pub fn generate(&self, n: usize, seed: SeedSpec) -> Result<MeasureSequence> {
        match self {
            ProcessFamily::IidUniform => iid_uniform_params(n, seed),
            ProcessFamily::Exchangeable { mixing } => exchangeable_params(n, *mixing, seed),
            ProcessFamily::RegimeSwitching { q, mu_1, lambda_1 } => {
                regime_switching_params(q, *mu_1, *lambda_1, n, seed)
            }
            ProcessFamily::Submartingale => submartingale_params(n, seed),
            ProcessFamily::Volatility(p) => {
                let path = volatility_path(p.alpha, p.beta, p.w_max, p.truncation_terms, n, seed)?;
                volatility_measures(&path, p.z_levels, p.z_max, seed)
            }
            ProcessFamily::Canonical(inner) => {
                let ms = inner.generate(n, seed)?;
                let hidden = crate::sim::sample_with_lane(&ms, seed, Lane::Auxiliary);
                Ok(crate::sim::canonical_disintegration(&hidden))
            }
        }
    }

    /// Almost-sure Cesaro limit of `1{X_i = 1}` when it is a known constant.
    pub fn indicator_limit(&self) -> Option<f64> {
        match self {
            ProcessFamily::IidUniform => Some(0.5),
            ProcessFamily::Exchangeable { mixing: Mixing::PointMass { at } } => Some(*at),
            ProcessFamily::Exchangeable { .. } => None,
            ProcessFamily::RegimeSwitching { q, mu_1, lambda_1 } => regime_functional_target(q, *mu_1, *lambda_1).ok(),
            ProcessFamily::Submartingale | ProcessFamily::Volatility(_) => None,
            ProcessFamily::Canonical(inner) => inner.indicator_limit(),
        }
    }

    /// True when realized values always lie in `[0, 1]`.
    pub fn is_unit_valued(&self) -> bool {
        match self {
            ProcessFamily::IidUniform | ProcessFamily::Exchangeable { .. } | ProcessFamily::Submartingale => true,
            ProcessFamily::RegimeSwitching { .. } | ProcessFamily::Volatility(_) => false,
            ProcessFamily::Canonical(inner) => inner.is_unit_valued(),
        }
    }
}

/// Fixture regime chain: `q = [[0.9, 0.1], [0.2, 0.8]]`, `mu_1 = 0.8`,
/// `lambda_1 = 0.3`.
pub fn fixture_regime() -> ProcessFamily {
    ProcessFamily::RegimeSwitching {
        q: StochasticMatrix2::new([[0.9, 0.1], [0.2, 0.8]]).expect("fixture matrix is stochastic"),
        mu_1: 0.8,
        lambda_1: 0.3,
    }
}

/// One representative of every process family, with default parameters.
pub fn reference_families() -> Vec<ProcessFamily> {
    vec![
        ProcessFamily::IidUniform,
        ProcessFamily::Exchangeable { mixing: Mixing::Uniform },
        fixture_regime(),
        ProcessFamily::Submartingale,
        ProcessFamily::Volatility(VolatilityParams::default()),
    ]
}

/// `mu_1 pi_mu + lambda_1 pi_lambda`.
pub fn regime_functional_target(q: &StochasticMatrix2, mu_1: f64, lambda_1: f64) -> Result<f64> {
    let (pi_mu, pi_lambda) = stationary_distribution(q)?;
    Ok(mu_1 * pi_mu + lambda_1 * pi_lambda)
}
