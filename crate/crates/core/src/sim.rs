//! Second stage: conditionally independent draws given a measure sequence.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cesaro::CesaroSeries;
use crate::error::{Error, Result};
use crate::measure::{Label, Measure};
use crate::params::{FamilyTag, MeasureSequence, Realization};
use crate::rng::{Lane, SeedSpec};

/// Identifies the measure sequence a trajectory was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SourceId {
    pub family: FamilyTag,
    pub seed: SeedSpec,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    values: Vec<Label>,
    support: Arc<[Label]>,
    realization: Realization,
    source: SourceId,
    seed: SeedSpec,
}

impl Trajectory {
    pub fn values(&self) -> &[Label] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> &[Label] {
        &self.support
    }

    pub fn source(&self) -> SourceId {
        self.source
    }

    pub fn seed(&self) -> SeedSpec {
        self.seed
    }

    pub fn realized(&self, t: usize) -> f64 {
        self.realization.value(t, self.values[t])
    }

    pub fn realized_values(&self) -> Vec<f64> {
        (0..self.len()).map(|t| self.realized(t)).collect()
    }

    /// Label-valued two-point support containing 1.
    pub fn is_binary(&self) -> bool {
        self.support.len() == 2 && self.support.contains(&1) && self.realization == Realization::Labels
    }

    /// `1{X_t = 1}` for every step.
    pub fn indicators(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(|&v| (v == 1) as u8 as f64)
    }
}

/// Draws `X_i ~ xi_i` independently for every `i`, using the observation lane
/// of `seed`. One uniform is consumed per step.
pub fn sample_conditional(ms: &MeasureSequence, seed: SeedSpec) -> Trajectory {
    sample_with_lane(ms, seed, Lane::Observations)
}

pub(crate) fn sample_with_lane(ms: &MeasureSequence, seed: SeedSpec, lane: Lane) -> Trajectory {
    let mut stream = seed.stream(lane);
    let support = ms.support();
    let values = ms.measures().map(|m| support[m.sample_index(stream.uniform())]).collect();
    Trajectory {
        values,
        support: ms.shared_support(),
        realization: ms.realization().clone(),
        source: SourceId { family: ms.family(), seed: ms.seed(), len: ms.len() },
        seed,
    }
}

/// The Dirac disintegration `xi_i = delta_{X_i}` on the trajectory's support.
pub fn canonical_disintegration(t: &Trajectory) -> MeasureSequence {
    let k = t.support.len();
    let mut weights = vec![0.0; t.len() * k];
    for (i, v) in t.values.iter().enumerate() {
        let pos = t.support.iter().position(|s| s == v).expect("values lie in the support");
        weights[i * k + pos] = 1.0;
    }
    MeasureSequence::from_rows(t.support.clone(), weights, t.realization.clone(), FamilyTag::Canonical, t.seed)
        .expect("one-hot rows are valid measures")
}

/// `1{x > 0}`: state 1 for coins, an up move for signed observations.
pub fn positive_indicator(x: f64) -> f64 {
    (x > 0.0) as u8 as f64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualSeries {
    pub partial_means: CesaroSeries,
    pub f_tag: String,
    /// `max_i |Z_i|`; never exceeds `2 * sup |f|` over the realized support.
    pub max_abs_term: f64,
    pub f_sup_norm: f64,
}

/// Terms `Z_i = f(X_i) - xi_i(f)` with `f` applied to realized values.
pub fn residual_terms<F: Fn(f64) -> f64>(t: &Trajectory, ms: &MeasureSequence, f: F) -> Result<Vec<f64>> {
    if t.len() != ms.len() {
        return Err(Error::Pairing { trajectory: t.len(), measures: ms.len() });
    }
    Ok((0..t.len()).map(|i| f(t.realized(i)) - ms.expectation_at(i, &f)).collect())
}

/// Partial means of the residual series at each checkpoint.
pub fn residual_series<F: Fn(f64) -> f64>(
    t: &Trajectory,
    ms: &MeasureSequence,
    f: F,
    f_tag: &str,
    checkpoints: &[usize],
) -> Result<ResidualSeries> {
    let terms = residual_terms(t, ms, &f)?;
    let max_abs_term = terms.iter().fold(0.0f64, |m, z| m.max(z.abs()));
    let mut f_sup_norm = 0.0f64;
    for i in 0..ms.len() {
        for &s in ms.support() {
            f_sup_norm = f_sup_norm.max(f(ms.realization().value(i, s)).abs());
        }
    }
    Ok(ResidualSeries {
        partial_means: CesaroSeries::from_terms(terms, checkpoints)?,
        f_tag: f_tag.to_string(),
        max_abs_term,
        f_sup_norm,
    })
}
