//! Simulation and verification toolkit for sequences that are conditionally
//! independent given a random sequence of probability measures.
//!
//! Sampling is two-stage: a [`params`] generator produces the measures
//! `xi_0, xi_1, ...`, then [`sim::sample_conditional`] draws each `X_i` from
//! `xi_i` independently. The [`lln`], [`concentration`] and [`latent`]
//! modules build statistical experiments on top of that mechanism.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cesaro;
pub mod concentration;
pub mod ecdf;
pub mod error;
pub mod latent;
pub mod lln;
pub mod measure;
pub mod parallel;
pub mod params;
pub mod report;
pub mod rng;
pub mod sim;

pub use cesaro::CesaroSeries;
pub use error::{Error, Result};
pub use measure::{
    bernoulli_measure, measure_expectation, stationary_distribution, FiniteMeasure, Label, Measure, StochasticMatrix2,
};
pub use params::{MeasureSequence, Mixing, ProcessFamily, VolatilityParams};
pub use report::{ExperimentReport, Metric};
pub use rng::SeedSpec;
pub use sim::{canonical_disintegration, residual_series, sample_conditional, Trajectory};
