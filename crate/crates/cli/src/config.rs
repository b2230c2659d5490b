//! Flat `key = value` experiment configuration.
//!
//! Lines are `key = value`; blank lines and lines starting with `#` are
//! ignored. Command-line `--set key=value` overrides are applied after the
//! file, in order.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use prodis::params::{Mixing, ProcessFamily, VolatilityParams, DEFAULT_TRUNCATION_TERMS};
use prodis::StochasticMatrix2;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExperimentKind {
    RandomWalk,
    Exchangeable,
    RegimeSwitch,
    Submartingale,
    Stochvol,
    Hoeffding,
    CharacterizationForward,
    CharacterizationConverse,
    Residual,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 9] = [
        ExperimentKind::RandomWalk,
        ExperimentKind::Exchangeable,
        ExperimentKind::RegimeSwitch,
        ExperimentKind::Submartingale,
        ExperimentKind::Stochvol,
        ExperimentKind::Hoeffding,
        ExperimentKind::CharacterizationForward,
        ExperimentKind::CharacterizationConverse,
        ExperimentKind::Residual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::RandomWalk => "random-walk",
            ExperimentKind::Exchangeable => "exchangeable",
            ExperimentKind::RegimeSwitch => "regime-switch",
            ExperimentKind::Submartingale => "submartingale",
            ExperimentKind::Stochvol => "stochvol",
            ExperimentKind::Hoeffding => "hoeffding",
            ExperimentKind::CharacterizationForward => "characterization-forward",
            ExperimentKind::CharacterizationConverse => "characterization-converse",
            ExperimentKind::Residual => "residual",
        }
    }

    /// The worked example or result each experiment reproduces.
    pub fn reproduces(self) -> &'static str {
        match self {
            ExperimentKind::RandomWalk => "Example 4.2",
            ExperimentKind::Exchangeable => "Example 4.3",
            ExperimentKind::RegimeSwitch => "Example 4.6",
            ExperimentKind::Submartingale => "Figure 1",
            ExperimentKind::Stochvol => "Example 4.8",
            ExperimentKind::Hoeffding => "Example 4.4",
            ExperimentKind::CharacterizationForward => "Theorem 1 (if)",
            ExperimentKind::CharacterizationConverse => "Theorem 1 (only if)",
            ExperimentKind::Residual => "Theorem 3.8",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            ExperimentKind::RandomWalk => "Rademacher steps from uniformly random coin biases",
            ExperimentKind::Exchangeable => "terminal means of exchangeable coins follow the mixing law",
            ExperimentKind::RegimeSwitch => "frequency of ups under a hidden two-state Markov regime",
            ExperimentKind::Submartingale => "coin whose bias is an increasing bounded submartingale",
            ExperimentKind::Stochvol => "latent volatility functional estimated from returns",
            ExperimentKind::Hoeffding => "conditional exponential tail bound and its decomposition",
            ExperimentKind::CharacterizationForward => "parameter Cesaro limit p implies observed frequency p",
            ExperimentKind::CharacterizationConverse => "canonical disintegration reproduces the observed means",
            ExperimentKind::Residual => "running means of f(X_i) - xi_i(f) vanish",
        }
    }

    fn default_n(self) -> usize {
        match self {
            ExperimentKind::Submartingale => 20,
            ExperimentKind::Hoeffding => 100,
            ExperimentKind::Exchangeable | ExperimentKind::CharacterizationConverse => 10_000,
            _ => 100_000,
        }
    }

    fn default_trials(self) -> usize {
        match self {
            ExperimentKind::Exchangeable => 10_000,
            ExperimentKind::Hoeffding => 100_000,
            _ => 1,
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CliError::Config(format!("unknown experiment '{s}'")))
    }
}

/// A scalar function applied to realized observation values.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `1{x > 0}`.
    Indicator,
    Identity,
    Square,
    Const(f64),
    /// Lookup keyed by integer label.
    Table(BTreeMap<i64, f64>),
}

impl FunctionSpec {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FunctionSpec::Indicator => (x > 0.0) as u8 as f64,
            FunctionSpec::Identity => x,
            FunctionSpec::Square => x * x,
            FunctionSpec::Const(c) => *c,
            FunctionSpec::Table(t) => t.get(&(x as i64)).copied().unwrap_or(f64::NAN),
        }
    }

    pub fn tag(&self) -> String {
        match self {
            FunctionSpec::Indicator => "indicator".into(),
            FunctionSpec::Identity => "identity".into(),
            FunctionSpec::Square => "square".into(),
            FunctionSpec::Const(c) => format!("const:{c}"),
            FunctionSpec::Table(t) => {
                let cells: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("table:{}", cells.join(";"))
            }
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Config(format!("cannot parse function '{s}'"));
        match s {
            "indicator" => Ok(FunctionSpec::Indicator),
            "identity" => Ok(FunctionSpec::Identity),
            "square" => Ok(FunctionSpec::Square),
            _ => {
                if let Some(c) = s.strip_prefix("const:") {
                    return c.trim().parse().map(FunctionSpec::Const).map_err(|_| bad());
                }
                let Some(cells) = s.strip_prefix("table:") else {
                    return Err(bad());
                };
                let mut table = BTreeMap::new();
                for cell in cells.split(';').filter(|c| !c.trim().is_empty()) {
                    let (k, v) = cell.split_once('=').ok_or_else(bad)?;
                    let k: i64 = k.trim().parse().map_err(|_| bad())?;
                    let v: f64 = v.trim().parse().map_err(|_| bad())?;
                    if !v.is_finite() || table.insert(k, v).is_some() {
                        return Err(bad());
                    }
                }
                if table.is_empty() {
                    return Err(bad());
                }
                Ok(FunctionSpec::Table(table))
            }
        }
    }
}

fn parse_mixing(s: &str) -> Result<Mixing, CliError> {
    let bad = || {
        CliError::Config(format!("cannot parse mixing '{s}' (uniform | point:<c> | two-point:<low>:<high>:<p_high>)"))
    };
    let nums = |rest: &str| -> Result<Vec<f64>, CliError> {
        rest.split(':').map(|x| x.trim().parse::<f64>().map_err(|_| bad())).collect()
    };
    let mixing = if s == "uniform" {
        Mixing::Uniform
    } else if let Some(rest) = s.strip_prefix("point:") {
        match nums(rest)?.as_slice() {
            [at] => Mixing::PointMass { at: *at },
            _ => return Err(bad()),
        }
    } else if let Some(rest) = s.strip_prefix("two-point:") {
        match nums(rest)?.as_slice() {
            [low, high, p_high] => Mixing::TwoPoint { low: *low, high: *high, p_high: *p_high },
            _ => return Err(bad()),
        }
    } else {
        return Err(bad());
    };
    mixing.validate().map_err(|e| CliError::Config(e.to_string()))?;
    Ok(mixing)
}

fn mixing_text(m: &Mixing) -> String {
    match m {
        Mixing::Uniform => "uniform".into(),
        Mixing::PointMass { at } => format!("point:{at}"),
        Mixing::TwoPoint { low, high, p_high } => format!("two-point:{low}:{high}:{p_high}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    IidUniform,
    Exchangeable,
    RegimeSwitch,
    Submartingale,
    Stochvol,
}

impl FamilyName {
    const ALL: [FamilyName; 5] = [
        FamilyName::IidUniform,
        FamilyName::Exchangeable,
        FamilyName::RegimeSwitch,
        FamilyName::Submartingale,
        FamilyName::Stochvol,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyName::IidUniform => "iid-uniform",
            FamilyName::Exchangeable => "exchangeable",
            FamilyName::RegimeSwitch => "regime-switch",
            FamilyName::Submartingale => "submartingale",
            FamilyName::Stochvol => "stochvol",
        }
    }
}

impl FromStr for FamilyName {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| CliError::Config(format!("unknown family '{s}'")))
    }
}

pub const KNOWN_KEYS: [&str; 23] = [
    "experiment",
    "n",
    "trials",
    "seed",
    "output_dir",
    "family",
    "canonical",
    "q00",
    "q01",
    "q10",
    "q11",
    "mu_1",
    "lambda_1",
    "alpha",
    "beta",
    "w_max",
    "z_levels",
    "z_max",
    "truncation_terms",
    "t",
    "mixing",
    "f",
    "ks_threshold",
];

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub n: usize,
    pub trials: usize,
    pub base_seed: u64,
    pub output_dir: PathBuf,
    pub family: FamilyName,
    pub canonical: bool,
    pub q: [[f64; 2]; 2],
    pub mu_1: f64,
    pub lambda_1: f64,
    pub volatility: VolatilityParams,
    pub t: Option<f64>,
    pub mixing: Mixing,
    pub f: FunctionSpec,
    pub ks_threshold: f64,
}

/// Raw key/value pairs in insertion order of last assignment.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    entries: BTreeMap<String, String>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut raw = RawConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", lineno + 1)))?;
            raw.set(k.trim(), v.trim())?;
        }
        Ok(raw)
    }

    /// Applies one `key=value` override.
    pub fn apply_override(&mut self, kv: &str) -> Result<(), CliError> {
        let (k, v) = kv.split_once('=').ok_or_else(|| CliError::Config(format!("override '{kv}' is not key=value")))?;
        self.set(k.trim(), v.trim())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        if !KNOWN_KEYS.contains(&key) {
            return Err(CliError::Config(format!("unknown key '{key}'")));
        }
        self.entries.insert(key.to_string(), value.to_string());
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn num<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.get(key)
            .map(|v| v.parse::<T>().map_err(|_| CliError::Config(format!("key '{key}': cannot parse '{v}'"))))
            .transpose()
    }
}

fn finite(key: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Config(format!("key '{key}' must be finite")))
    }
}

fn unit(key: &str, v: f64) -> Result<f64, CliError> {
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(CliError::Config(format!("key '{key}' = {v} must lie in [0, 1]")))
    }
}

impl ExperimentConfig {
    pub fn from_raw(raw: &RawConfig) -> Result<Self, CliError> {
        let experiment: ExperimentKind =
            raw.get("experiment").ok_or_else(|| CliError::Config("missing key 'experiment'".into()))?.parse()?;
        let n = raw.num::<usize>("n")?.unwrap_or(experiment.default_n());
        let trials = raw.num::<usize>("trials")?.unwrap_or(experiment.default_trials());
        let base_seed = raw.num::<u64>("seed")?.unwrap_or(DEFAULT_SEED);
        let output_dir = PathBuf::from(raw.get("output_dir").unwrap_or("out"));
        let family: FamilyName = raw.get("family").unwrap_or("iid-uniform").parse()?;
        let canonical = match raw.get("canonical") {
            None | Some("false") => false,
            Some("true") => true,
            Some(v) => return Err(CliError::Config(format!("key 'canonical': expected true or false, got '{v}'"))),
        };

        let q01 = unit("q01", raw.num("q01")?.unwrap_or(0.1))?;
        let q10 = unit("q10", raw.num("q10")?.unwrap_or(0.2))?;
        let q00 = unit("q00", raw.num("q00")?.unwrap_or(1.0 - q01))?;
        let q11 = unit("q11", raw.num("q11")?.unwrap_or(1.0 - q10))?;
        let q = [[q00, q01], [q10, q11]];
        StochasticMatrix2::new(q).map_err(|e| CliError::Config(e.to_string()))?;

        let mu_1 = unit("mu_1", raw.num("mu_1")?.unwrap_or(0.8))?;
        let lambda_1 = unit("lambda_1", raw.num("lambda_1")?.unwrap_or(0.3))?;
        let volatility = VolatilityParams {
            alpha: finite("alpha", raw.num("alpha")?.unwrap_or(0.0))?,
            beta: finite("beta", raw.num("beta")?.unwrap_or(0.5))?,
            w_max: finite("w_max", raw.num("w_max")?.unwrap_or(1.0))?,
            truncation_terms: raw.num("truncation_terms")?.unwrap_or(DEFAULT_TRUNCATION_TERMS),
            z_levels: raw.num("z_levels")?.unwrap_or(2),
            z_max: finite("z_max", raw.num("z_max")?.unwrap_or(1.0))?,
        };
        let t = raw.num::<f64>("t")?;
        let mixing = parse_mixing(raw.get("mixing").unwrap_or("uniform"))?;
        let f_default = match experiment {
            ExperimentKind::Stochvol => "square",
            _ => "indicator",
        };
        let f: FunctionSpec = raw.get("f").unwrap_or(f_default).parse()?;
        let ks_threshold = raw.num::<f64>("ks_threshold")?.unwrap_or(prodis::lln::KS_THRESHOLD);

        let config = Self {
            experiment,
            n,
            trials,
            base_seed,
            output_dir,
            family,
            canonical,
            q,
            mu_1,
            lambda_1,
            volatility,
            t,
            mixing,
            f,
            ks_threshold,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn load(text: &str, overrides: &[String]) -> Result<Self, CliError> {
        let mut raw = RawConfig::parse(text)?;
        for kv in overrides {
            raw.apply_override(kv)?;
        }
        Self::from_raw(&raw)
    }

    /// Checks the preconditions of the operation the experiment dispatches to.
    /// Reducible transition matrices are left to the run, which reports them
    /// as a degenerate model.
    fn validate(&self) -> Result<(), CliError> {
        let err = |m: String| Err(CliError::Config(m));
        if self.n == 0 {
            return err("n must be at least 1".into());
        }
        if self.trials == 0 {
            return err("trials must be at least 1".into());
        }
        if self.experiment == ExperimentKind::Exchangeable && self.trials < 100 {
            return err(format!("exchangeable needs at least 100 trials, got {}", self.trials));
        }
        if !(self.ks_threshold > 0.0 && self.ks_threshold <= 1.0) {
            return err(format!("ks_threshold = {} must lie in (0, 1]", self.ks_threshold));
        }
        let uses_regime =
            self.experiment == ExperimentKind::RegimeSwitch || self.family_used() == Some(FamilyName::RegimeSwitch);
        if uses_regime && self.mu_1 <= self.lambda_1 {
            return err(format!("mu_1 = {} must exceed lambda_1 = {}", self.mu_1, self.lambda_1));
        }
        let uses_vol = self.experiment == ExperimentKind::Stochvol || self.family_used() == Some(FamilyName::Stochvol);
        if uses_vol {
            let v = &self.volatility;
            if !(v.beta.abs() < 1.0) {
                return err(format!("beta = {} must satisfy |beta| < 1", v.beta));
            }
            if v.w_max < 0.0 {
                return err(format!("w_max = {} must be nonnegative", v.w_max));
            }
            if v.truncation_terms == 0 {
                return err("truncation_terms must be at least 1".into());
            }
            if v.z_levels < 2 {
                return err(format!("z_levels = {} must be at least 2", v.z_levels));
            }
            if !(v.z_max > 0.0) {
                return err(format!("z_max = {} must be positive", v.z_max));
            }
            if matches!(self.f, FunctionSpec::Table(_)) {
                return err("function tables apply to label-valued families only".into());
            }
        }
        if let FunctionSpec::Table(table) = &self.f {
            let support: &[i64] = if self.family_used() == Some(FamilyName::RegimeSwitch) { &[-1, 1] } else { &[0, 1] };
            if let Some(s) = support.iter().find(|s| !table.contains_key(s)) {
                return err(format!("function table has no entry for label {s}"));
            }
        }
        match self.experiment {
            ExperimentKind::Hoeffding => {
                if !matches!(self.family, FamilyName::IidUniform | FamilyName::Exchangeable | FamilyName::Submartingale)
                {
                    return err(format!("hoeffding needs a [0, 1]-valued family, got {}", self.family.name()));
                }
                if let Some(t) = self.t {
                    if !(t > 0.0) || !t.is_finite() {
                        return err(format!("t = {t} must be positive"));
                    }
                }
            }
            ExperimentKind::CharacterizationForward => {
                if self.family_spec().indicator_limit().is_none() && !matches!(self.family, FamilyName::RegimeSwitch) {
                    return err(format!(
                        "family {} has no known constant Cesaro limit (use iid-uniform, regime-switch or exchangeable with a point mixing)",
                        self.family.name()
                    ));
                }
            }
            ExperimentKind::CharacterizationConverse if self.family == FamilyName::Stochvol => {
                return err("the converse check needs a binary family".into());
            }
            _ => {}
        }
        Ok(())
    }

    fn family_used(&self) -> Option<FamilyName> {
        match self.experiment {
            ExperimentKind::Hoeffding
            | ExperimentKind::CharacterizationForward
            | ExperimentKind::CharacterizationConverse
            | ExperimentKind::Residual => Some(self.family),
            _ => None,
        }
    }

    pub fn transition_matrix(&self) -> StochasticMatrix2 {
        StochasticMatrix2::new(self.q).expect("validated on load")
    }

    /// The process family selected by `family` and `canonical`.
    pub fn family_spec(&self) -> ProcessFamily {
        let base = match self.family {
            FamilyName::IidUniform => ProcessFamily::IidUniform,
            FamilyName::Exchangeable => ProcessFamily::Exchangeable { mixing: self.mixing },
            FamilyName::RegimeSwitch => {
                ProcessFamily::RegimeSwitching { q: self.transition_matrix(), mu_1: self.mu_1, lambda_1: self.lambda_1 }
            }
            FamilyName::Submartingale => ProcessFamily::Submartingale,
            FamilyName::Stochvol => ProcessFamily::Volatility(self.volatility),
        };
        if self.canonical {
            ProcessFamily::Canonical(Box::new(base))
        } else {
            base
        }
    }

    /// Every resolved setting, for the report.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let v = &self.volatility;
        let mut m = BTreeMap::new();
        let mut put = |k: &str, val: String| {
            m.insert(k.to_string(), val);
        };
        put("experiment", self.experiment.name().into());
        put("n", self.n.to_string());
        put("trials", self.trials.to_string());
        put("seed", self.base_seed.to_string());
        put("output_dir", self.output_dir.display().to_string());
        put("family", self.family.name().into());
        put("canonical", self.canonical.to_string());
        put("q00", self.q[0][0].to_string());
        put("q01", self.q[0][1].to_string());
        put("q10", self.q[1][0].to_string());
        put("q11", self.q[1][1].to_string());
        put("mu_1", self.mu_1.to_string());
        put("lambda_1", self.lambda_1.to_string());
        put("alpha", v.alpha.to_string());
        put("beta", v.beta.to_string());
        put("w_max", v.w_max.to_string());
        put("z_levels", v.z_levels.to_string());
        put("z_max", v.z_max.to_string());
        put("truncation_terms", v.truncation_terms.to_string());
        if let Some(t) = self.t {
            put("t", t.to_string());
        }
        put("mixing", mixing_text(&self.mixing));
        put("f", self.f.tag());
        put("ks_threshold", self.ks_threshold.to_string());
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<ExperimentConfig, CliError> {
        ExperimentConfig::load(text, &[])
    }

    #[test]
    fn parses_file_with_comments_and_overrides() {
        let text = "# demo\nexperiment = submartingale\n\nn = 20\nseed=7\n";
        let c = ExperimentConfig::load(text, &["n=40".into()]).unwrap();
        assert_eq!(c.experiment, ExperimentKind::Submartingale);
        assert_eq!(c.n, 40);
        assert_eq!(c.base_seed, 7);
    }

    #[test]
    fn defaults_follow_experiment() {
        let c = load("experiment = hoeffding").unwrap();
        assert_eq!((c.n, c.trials), (100, 100_000));
        let c = load("experiment = stochvol").unwrap();
        assert_eq!(c.f, FunctionSpec::Square);
        assert_eq!(c.q, [[0.9, 0.1], [0.2, 0.8]]);
    }

    #[test]
    fn rejects_unknown_things() {
        assert!(matches!(load("experiment = nope"), Err(CliError::Config(_))));
        assert!(matches!(load("experiment = residual\ncolour = red"), Err(CliError::Config(_))));
        assert!(matches!(load("n = 3"), Err(CliError::Config(_))));
        assert!(matches!(load("experiment = residual\nn = many"), Err(CliError::Config(_))));
        assert!(matches!(load("experiment residual"), Err(CliError::Config(_))));
    }

    #[test]
    fn validates_preconditions() {
        assert!(load("experiment = stochvol\nbeta = 1.0").is_err());
        assert!(load("experiment = regime-switch\nmu_1 = 0.2").is_err());
        assert!(load("experiment = exchangeable\ntrials = 50").is_err());
        assert!(load("experiment = hoeffding\nfamily = regime-switch").is_err());
        assert!(load("experiment = hoeffding\nt = -1").is_err());
        assert!(load("experiment = characterization-forward\nfamily = submartingale").is_err());
        assert!(load("experiment = characterization-converse\nfamily = stochvol").is_err());
        assert!(load("experiment = residual\nq00 = 0.5").is_err());
        assert!(load("experiment = residual\nf = table:0=1").is_err());
        // Reducible matrices are valid configuration; the run reports them.
        assert!(load("experiment = regime-switch\nq01 = 0\nq10 = 0").is_ok());
    }

    #[test]
    fn function_specs() {
        assert_eq!("indicator".parse::<FunctionSpec>().unwrap().eval(1.0), 1.0);
        assert_eq!("square".parse::<FunctionSpec>().unwrap().eval(-3.0), 9.0);
        assert_eq!("const:2.5".parse::<FunctionSpec>().unwrap().eval(7.0), 2.5);
        let t: FunctionSpec = "table:0=0.25;1=4".parse().unwrap();
        assert_eq!(t.eval(1.0), 4.0);
        assert_eq!(t.tag(), "table:0=0.25;1=4");
        assert!("table:".parse::<FunctionSpec>().is_err());
        assert!("cube".parse::<FunctionSpec>().is_err());
    }

    #[test]
    fn mixing_specs() {
        assert_eq!(parse_mixing("point:0.3").unwrap(), Mixing::PointMass { at: 0.3 });
        assert!(parse_mixing("point:1.3").is_err());
        assert!(parse_mixing("two-point:0.1:0.9").is_err());
        assert_eq!(mixing_text(&parse_mixing("two-point:0.1:0.9:0.5").unwrap()), "two-point:0.1:0.9:0.5");
    }
}
