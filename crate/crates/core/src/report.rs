use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub target: f64,
    pub band: f64,
    pub pass: bool,
}

impl Metric {
    /// Passes when `|value - target| <= band`.
    pub fn within(name: impl Into<String>, value: f64, target: f64, band: f64) -> Self {
        Self { name: name.into(), value, target, band, pass: (value - target).abs() <= band }
    }

    /// Passes when `value <= target + band`.
    pub fn at_most(name: impl Into<String>, value: f64, target: f64, band: f64) -> Self {
        Self { name: name.into(), value, target, band, pass: value <= target + band }
    }

    /// Passes when `value >= target - band`.
    pub fn at_least(name: impl Into<String>, value: f64, target: f64, band: f64) -> Self {
        Self { name: name.into(), value, target, band, pass: value >= target - band }
    }

    pub fn exact(name: impl Into<String>, pass: bool) -> Self {
        let v = pass as u8 as f64;
        Self { name: name.into(), value: v, target: 1.0, band: 0.0, pass }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub config: BTreeMap<String, String>,
    pub metrics: Vec<Metric>,
    pub wall_time_secs: f64,
    pub seed: u64,
}

impl ExperimentReport {
    pub fn new(experiment: impl Into<String>, seed: u64) -> Self {
        Self { experiment: experiment.into(), config: BTreeMap::new(), metrics: Vec::new(), wall_time_secs: 0.0, seed }
    }

    pub fn push(&mut self, metric: Metric) {
        self.metrics.push(metric);
    }

    /// Conjunction of all metric passes.
    pub fn pass(&self) -> bool {
        self.metrics.iter().all(|m| m.pass)
    }

    pub fn metric(&self, name: &str) -> Option<&Metric> {
        self.metrics.iter().find(|m| m.name == name)
    }
}
