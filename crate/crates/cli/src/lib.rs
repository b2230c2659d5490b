//! Experiment runner: configuration, dispatch and file emission.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod output;
pub mod run;

pub use config::{ExperimentConfig, ExperimentKind};
pub use error::CliError;
pub use run::{execute, run};

/// One catalog line per experiment, in stable order.
pub fn catalog_lines() -> Vec<String> {
    ExperimentKind::ALL.iter().map(|k| format!("{} — {}: {}", k.name(), k.reproduces(), k.summary())).collect()
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub reproduces: &'static str,
    pub summary: &'static str,
}

pub fn catalog() -> Vec<CatalogEntry> {
    ExperimentKind::ALL
        .iter()
        .map(|k| CatalogEntry { name: k.name(), reproduces: k.reproduces(), summary: k.summary() })
        .collect()
}
