//! Probability measures on finite label sets.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// State label. Bernoulli measures live on `{0, 1}`, regime measures on
/// `{-1, 1}`, discretized continuous laws on `{0, .., k-1}`.
pub type Label = i64;

/// Absolute tolerance on total mass.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Shared read access to a finite measure, whether owned or a row of a
/// [`MeasureSequence`](crate::params::MeasureSequence).
pub trait Measure {
    fn support(&self) -> &[Label];
    fn weights(&self) -> &[f64];

    fn weight_of(&self, label: Label) -> f64 {
        self.support().iter().position(|&s| s == label).map_or(0.0, |i| self.weights()[i])
    }

    /// `sum_s f(s) * weight(s)`.
    fn expectation<F: Fn(Label) -> f64>(&self, f: F) -> f64 {
        self.support().iter().zip(self.weights()).map(|(&s, &w)| f(s) * w).sum()
    }

    /// Inverse-CDF lookup for a uniform `u`. States with zero weight are never
    /// returned, so Dirac measures sample deterministically.
    fn sample_index(&self, u: f64) -> usize {
        let weights = self.weights();
        let mut cumulative = 0.0;
        let mut last_positive = 0;
        for (i, &w) in weights.iter().enumerate() {
            if w > 0.0 {
                cumulative += w;
                last_positive = i;
                if u < cumulative {
                    return i;
                }
            }
        }
        last_positive
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteMeasure {
    support: Arc<[Label]>,
    weights: Vec<f64>,
}

impl FiniteMeasure {
    pub fn new(support: impl Into<Arc<[Label]>>, weights: Vec<f64>) -> Result<Self> {
        let support = support.into();
        check_support(&support)?;
        check_weights(&support, &weights)?;
        Ok(Self { support, weights })
    }

    /// Point mass at `at`, which must belong to `support`.
    pub fn dirac(support: impl Into<Arc<[Label]>>, at: Label) -> Result<Self> {
        let support = support.into();
        let Some(pos) = support.iter().position(|&s| s == at) else {
            return Err(Error::Domain(format!("label {at} not in support {support:?}")));
        };
        let mut weights = vec![0.0; support.len()];
        weights[pos] = 1.0;
        Self::new(support, weights)
    }

    pub fn into_parts(self) -> (Arc<[Label]>, Vec<f64>) {
        (self.support, self.weights)
    }
}

impl Measure for FiniteMeasure {
    fn support(&self) -> &[Label] {
        &self.support
    }

    fn weights(&self) -> &[f64] {
        &self.weights
    }
}

pub(crate) fn check_support(support: &[Label]) -> Result<()> {
    if support.is_empty() {
        return Err(Error::InvalidMeasure("empty support".into()));
    }
    for (i, a) in support.iter().enumerate() {
        if support[i + 1..].contains(a) {
            return Err(Error::InvalidMeasure(format!("duplicate label {a}")));
        }
    }
    Ok(())
}

pub(crate) fn check_weights(support: &[Label], weights: &[f64]) -> Result<()> {
    if weights.len() != support.len() {
        return Err(Error::InvalidMeasure(format!("{} weights for {} labels", weights.len(), support.len())));
    }
    if let Some(w) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
        return Err(Error::InvalidMeasure(format!("weight {w} outside [0, 1]")));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::InvalidMeasure(format!("weights sum to {total}")));
    }
    Ok(())
}

pub const BERNOULLI_SUPPORT: [Label; 2] = [0, 1];

/// The measure on `{0, 1}` giving weight `theta` to state 1.
pub fn bernoulli_measure(theta: f64) -> Result<FiniteMeasure> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::Domain(format!("Bernoulli parameter {theta} outside [0, 1]")));
    }
    FiniteMeasure::new(BERNOULLI_SUPPORT.to_vec(), vec![1.0 - theta, theta])
}

pub fn measure_expectation<M: Measure, F: Fn(Label) -> f64>(m: &M, f: F) -> f64 {
    m.expectation(f)
}

/// Row-stochastic 2x2 matrix; row and column 0 is regime "mu", 1 is "lambda".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StochasticMatrix2 {
    q: [[f64; 2]; 2],
}

impl StochasticMatrix2 {
    pub fn new(q: [[f64; 2]; 2]) -> Result<Self> {
        for row in &q {
            if row.iter().any(|p| !(0.0..=1.0).contains(p)) {
                return Err(Error::InvalidMeasure(format!("transition row {row:?} has entries outside [0, 1]")));
            }
            if (row[0] + row[1] - 1.0).abs() > NORMALIZATION_TOL {
                return Err(Error::InvalidMeasure(format!("transition row {row:?} does not sum to 1")));
            }
        }
        Ok(Self { q })
    }

    /// Matrix with the given switching probabilities `mu -> lambda` and
    /// `lambda -> mu`.
    pub fn from_switching(q01: f64, q10: f64) -> Result<Self> {
        Self::new([[1.0 - q01, q01], [q10, 1.0 - q10]])
    }

    pub fn entry(&self, from: usize, to: usize) -> f64 {
        self.q[from][to]
    }

    pub fn rows(&self) -> [[f64; 2]; 2] {
        self.q
    }

    pub fn is_irreducible(&self) -> bool {
        self.q[0][1] > 0.0 && self.q[1][0] > 0.0
    }

    /// Next regime from `from` given a uniform `u`.
    #[inline]
    pub fn step(&self, from: usize, u: f64) -> usize {
        if u < self.q[from][0] {
            0
        } else {
            1
        }
    }
}

/// `(pi_mu, pi_lambda)` with `pi Q = pi`, from the closed form
/// `pi_mu = q10 / (q01 + q10)`.
pub fn stationary_distribution(q: &StochasticMatrix2) -> Result<(f64, f64)> {
    if !q.is_irreducible() {
        return Err(Error::NonErgodic { q01: q.entry(0, 1), q10: q.entry(1, 0) });
    }
    let (q01, q10) = (q.entry(0, 1), q.entry(1, 0));
    let pi0 = q10 / (q01 + q10);
    Ok((pi0, q01 / (q01 + q10)))
}
