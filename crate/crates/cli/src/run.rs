//! Dispatch of configured experiments to the simulation library.

use std::time::Instant;

use prodis::cesaro::{power_of_ten_checkpoints, running_means};
use prodis::concentration::{evaluate_threshold, simulate_sums};
use prodis::latent::{
    estimate_regime_functional, estimate_submartingale_limit, estimate_volatility_functional, uniform_exp_moment,
};
use prodis::lln::{check_converse, check_forward, exchangeable_limit_distribution, random_walk_symmetry};
use prodis::measure::stationary_distribution;
use prodis::params::{submartingale_envelope, z_grid, Mixing, ProcessFamily};
use prodis::sim::{residual_series, sample_conditional};
use prodis::{ExperimentReport, Metric, SeedSpec};

use crate::config::{ExperimentConfig, ExperimentKind, FunctionSpec};
use crate::error::CliError;
use crate::output::{emit, Cell, LineChart, OutputPaths, Series, Style, Table};

const BLUE: &str = "#1f77b4";
const RED: &str = "#d62728";
const PURPLE: &str = "#7b3294";
const GREEN: &str = "#2ca02c";
const GREY: &str = "#555555";

/// Tolerance of the long-chain regime oracle and the pair frequencies.
pub const REGIME_ORACLE_BAND: f64 = 0.01;
pub const PAIR_FREQUENCY_BAND: f64 = 0.01;
/// Agreement between the closed-form stationary law and power iteration.
pub const STATIONARY_TOL: f64 = 1e-10;
const POWER_ITERATIONS: usize = 1_000_000;
/// Residual band `RESIDUAL_SIGMAS * sqrt(0.25 / n)` per unit oscillation of `f`.
pub const RESIDUAL_SIGMAS: f64 = 4.0;
/// Points in the threshold sweep of the tail-bound experiment.
pub const SWEEP_POINTS: usize = 100;
/// Minimum across-trial spread of terminal means under uniform mixing.
pub const MIN_EXCHANGEABLE_SD: f64 = 0.25;
pub const MIN_CONDITIONAL_COVERAGE: f64 = 0.99;

/// Everything an experiment produces before it is written out.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: ExperimentReport,
    pub table: Table,
    pub chart: LineChart,
}

/// Runs the experiment and writes its three files.
pub fn execute(config: &ExperimentConfig) -> Result<(ExperimentReport, OutputPaths), CliError> {
    let outcome = run(config)?;
    let paths = emit(&config.output_dir, &outcome.report, &outcome.table, &outcome.chart)?;
    Ok((outcome.report, paths))
}

/// Runs the experiment without touching the file system.
pub fn run(config: &ExperimentConfig) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let seed = SeedSpec::new(config.base_seed, 0);
    let (metrics, table, chart) = match config.experiment {
        ExperimentKind::RandomWalk => random_walk(config, seed)?,
        ExperimentKind::Exchangeable => exchangeable(config, seed)?,
        ExperimentKind::RegimeSwitch => regime_switch(config, seed)?,
        ExperimentKind::Submartingale => submartingale(config, seed)?,
        ExperimentKind::Stochvol => stochvol(config, seed)?,
        ExperimentKind::Hoeffding => hoeffding(config, seed)?,
        ExperimentKind::CharacterizationForward => forward(config, seed)?,
        ExperimentKind::CharacterizationConverse => converse(config, seed)?,
        ExperimentKind::Residual => residual(config, seed)?,
    };
    let mut report = ExperimentReport::new(config.experiment.name(), config.base_seed);
    report.config = config.echo();
    report.metrics = metrics;
    report.wall_time_secs = start.elapsed().as_secs_f64();
    Ok(Outcome { report, table, chart })
}

type Parts = (Vec<Metric>, Table, LineChart);

fn random_walk(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let out = random_walk_symmetry(c.n, c.trials, seed)?;
    let mut table = Table::new(&["k", "z_k", "s_k"]);
    let mut points = Vec::with_capacity(c.n);
    for (k, (&z, &s)) in out.steps.iter().zip(&out.partial_sums).enumerate() {
        table.push(vec![(k + 1).into(), z.into(), s.into()]);
        points.push(((k + 1) as f64, s as f64 / (k + 1) as f64));
    }
    let chart = LineChart::new("Rademacher walk from uniform coin biases", "k", "S_k / k")
        .with(Series::new("S_k / k", BLUE, Style::Line, points))
        .with(Series::new("0", GREY, Style::Dashed, vec![(1.0, 0.0), (c.n as f64, 0.0)]));
    Ok((out.report.metrics, table, chart))
}

fn exchangeable(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let r = exchangeable_limit_distribution(c.mixing, c.n, c.trials, seed, c.ks_threshold)?;
    let mut metrics = Vec::new();
    if c.mixing == Mixing::Uniform {
        metrics.push(Metric::at_most("ks_distance", r.ks_distance, c.ks_threshold, 0.0));
        metrics.push(Metric::at_least("across_trial_sd", r.across_trial_sd, MIN_EXCHANGEABLE_SD, 0.0));
    }
    metrics.push(Metric::at_least("conditional_coverage", r.conditional_coverage, MIN_CONDITIONAL_COVERAGE, 0.0));

    let mut table = Table::new(&["trial", "theta", "terminal_mean"]);
    for (i, (&t, &m)) in r.thetas.iter().zip(&r.terminal_means).enumerate() {
        table.push(vec![i.into(), t.into(), m.into()]);
    }
    let mut sorted = r.terminal_means.clone();
    sorted.sort_by(f64::total_cmp);
    let m = sorted.len() as f64;
    let ecdf: Vec<(f64, f64)> = sorted.iter().enumerate().map(|(i, &x)| (x, (i + 1) as f64 / m)).collect();
    let reference: Vec<(f64, f64)> = (0..=100).map(|i| i as f64 / 100.0).map(|x| (x, c.mixing.cdf(x))).collect();
    let chart = LineChart::new("Terminal means of exchangeable coins", "terminal mean", "cumulative fraction")
        .with(Series::new("empirical", BLUE, Style::Line, ecdf))
        .with(Series::new("mixing law", RED, Style::Dashed, reference));
    Ok((metrics, table, chart))
}

/// Stationary law by repeated multiplication, started from the first state.
fn power_iteration(q: &prodis::StochasticMatrix2, steps: usize) -> (f64, f64) {
    let (mut a, mut b) = (1.0, 0.0);
    for _ in 0..steps {
        let na = a * q.entry(0, 0) + b * q.entry(1, 0);
        let nb = a * q.entry(0, 1) + b * q.entry(1, 1);
        (a, b) = (na, nb);
    }
    (a, b)
}

fn regime_switch(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let q = c.transition_matrix();
    let est = estimate_regime_functional(&q, c.mu_1, c.lambda_1, c.n, seed)?;
    let pi = stationary_distribution(&q)?;
    let iter = power_iteration(&q, POWER_ITERATIONS);
    let r = &est.report;
    let mut metrics = vec![
        Metric::within("stationary_mu", pi.0, iter.0, STATIONARY_TOL),
        Metric::within("stationary_lambda", pi.1, iter.1, STATIONARY_TOL),
        Metric::within("frequency_of_up", r.estimator, r.target, r.band),
        Metric::within("oracle", r.oracle, r.target, REGIME_ORACLE_BAND),
    ];
    let pis = [pi.0, pi.1];
    for (i, row) in est.pair_frequencies.iter().enumerate() {
        for (j, &f) in row.iter().enumerate() {
            metrics.push(Metric::within(format!("pair_{i}{j}"), f, pis[i] * q.entry(i, j), PAIR_FREQUENCY_BAND));
        }
    }

    let ups: Vec<f64> = est.observations.iter().map(|&v| (v > 0) as u8 as f64).collect();
    let running = running_means(&ups);
    let mut table = Table::new(&["k", "regime", "x_k", "running_frequency"]);
    for (k, &m) in running.iter().enumerate() {
        table.push(vec![(k + 1).into(), (est.regimes[k] as i64).into(), est.observations[k].into(), m.into()]);
    }
    let points: Vec<(f64, f64)> = running.iter().enumerate().map(|(k, &m)| ((k + 1) as f64, m)).collect();
    let chart = LineChart::new("Frequency of up moves under a hidden regime", "k", "running frequency")
        .with(Series::new("running frequency", BLUE, Style::Line, points))
        .with(Series::new("target", RED, Style::Dashed, vec![(1.0, r.target), (c.n as f64, r.target)]));
    Ok((metrics, table, chart))
}

fn submartingale(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let est = estimate_submartingale_limit(c.n, seed)?;
    let within_envelope = est.theta.iter().enumerate().all(|(k, &t)| t <= submartingale_envelope(k));
    let increasing = est.theta.windows(2).all(|w| w[0] <= w[1]);
    let r = &est.report;
    let metrics = vec![
        Metric::exact("envelope", within_envelope),
        Metric::exact("nondecreasing", increasing),
        Metric::within("running_mean_vs_theta", r.estimator, r.target, r.band),
    ];

    let mut table = Table::new(&["k", "theta_k", "x_k", "running_mean"]);
    for k in 0..c.n {
        table.push(vec![k.into(), est.theta[k].into(), est.outcomes[k].into(), est.running_mean[k].into()]);
    }
    let at = |v: &[f64]| v.iter().enumerate().map(|(k, &y)| (k as f64, y)).collect::<Vec<_>>();
    let outcomes: Vec<f64> = est.outcomes.iter().map(|&x| x as f64).collect();
    let chart = LineChart::new("A sample path of the submartingale coin", "k", "value")
        .with(Series::new("theta_k", BLUE, Style::Line, at(&est.theta)))
        .with(Series::new("x_k", RED, Style::Markers, at(&outcomes)))
        .with(Series::new("running mean", PURPLE, Style::Line, at(&est.running_mean)));
    Ok((metrics, table, chart))
}

fn stochvol(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let v = &c.volatility;
    let f = |x: f64| c.f.eval(x);
    let est = estimate_volatility_functional(v, f, c.n, seed)?;
    let r = &est.report;
    let mut metrics = vec![Metric::within("time_average_vs_oracle", r.estimator, r.target, r.band)];
    if v.beta == 0.0 && c.f == FunctionSpec::Square {
        let grid = z_grid(v.z_levels, v.z_max);
        let z2 = grid.iter().map(|z| z * z).sum::<f64>() / grid.len() as f64;
        let closed = v.alpha.exp() * z2 * uniform_exp_moment(v.w_max);
        metrics.push(Metric::within("time_average_vs_closed_form", r.estimator, closed, r.band));
    }

    let fx: Vec<f64> = est.returns.iter().map(|&x| f(x)).collect();
    let running = running_means(&fx);
    let mut table = Table::new(&["t", "h_t", "x_t", "running_mean_f"]);
    for (t, &m) in running.iter().enumerate() {
        table.push(vec![t.into(), est.h[t].into(), est.returns[t].into(), m.into()]);
    }
    let points: Vec<(f64, f64)> = running.iter().enumerate().map(|(t, &m)| ((t + 1) as f64, m)).collect();
    let chart = LineChart::new("Time average of f(X_t) under stochastic volatility", "t", "running mean of f")
        .with(Series::new("time average", BLUE, Style::Line, points))
        .with(Series::new("oracle", RED, Style::Dashed, vec![(1.0, r.target), (c.n as f64, r.target)]));
    Ok((metrics, table, chart))
}

fn hoeffding(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let family = c.family_spec();
    let t = c.t.unwrap_or(0.6 * c.n as f64);
    let sums = simulate_sums(&family, c.n, c.trials, seed)?;
    let r = evaluate_threshold(&sums, c.n, t)?;
    let mut metrics = vec![
        Metric::at_most("conditional_vs_bound", r.empirical_conditional, r.bound, r.conditional_slack),
        Metric::at_most(
            "unconditional_vs_decomposition",
            r.empirical_unconditional,
            r.decomposition_rhs,
            r.unconditional_slack,
        ),
    ];
    if matches!(family, ProcessFamily::Canonical(_)) {
        metrics.push(Metric::exact("canonical_conditional_is_zero", r.empirical_conditional == 0.0));
    }

    let mut table = Table::new(&[
        "t",
        "empirical_conditional",
        "bound",
        "conditioning_mass",
        "decomposition_rhs",
        "empirical_unconditional",
    ]);
    let mut series: [Vec<(f64, f64)>; 4] = Default::default();
    for k in 1..=SWEEP_POINTS {
        let s = c.n as f64 * k as f64 / SWEEP_POINTS as f64;
        let row = match evaluate_threshold(&sums, c.n, s) {
            Ok(r) => {
                [r.empirical_conditional, r.bound, r.conditioning_mass, r.decomposition_rhs, r.empirical_unconditional]
            }
            Err(e) if e.is_degenerate() => {
                let unconditional = sums.iter().filter(|x| x.sum >= s).count() as f64 / sums.len() as f64;
                [f64::NAN, prodis::concentration::hoeffding_bound(s, c.n), 0.0, f64::NAN, unconditional]
            }
            Err(e) => return Err(e.into()),
        };
        let mut cells: Vec<Cell> = vec![s.into()];
        cells.extend(row.iter().map(|&v| Cell::from(v)));
        table.push(cells);
        for (dst, v) in series.iter_mut().zip([row[4], row[3], row[0], row[1]]) {
            dst.push((s, v));
        }
    }
    let [uncond, rhs, cond, bound] = series;
    let chart = LineChart::new("Tail probabilities against the exponential bound", "t", "probability")
        .with(Series::new("P(S_n >= t)", BLUE, Style::Line, uncond))
        .with(Series::new("decomposition", RED, Style::Dashed, rhs))
        .with(Series::new("conditional", GREEN, Style::Line, cond))
        .with(Series::new("exp(-2t^2/n)", GREY, Style::Dashed, bound));
    Ok((metrics, table, chart))
}

fn log10_points(series: &prodis::CesaroSeries) -> Vec<(f64, f64)> {
    series.checkpoints().iter().map(|&(n, m)| ((n as f64).log10(), m)).collect()
}

fn forward(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let check = check_forward(&c.family_spec(), c.n, c.trials, seed)?;
    let metrics = check
        .reports
        .iter()
        .enumerate()
        .map(|(i, r)| Metric::within(format!("x_mean_trial_{i}"), r.x_cesaro_terminal, r.target_p, r.band))
        .collect();
    let mut table = Table::new(&["trial", "n", "theta_mean", "x_mean"]);
    for (i, (th, xs)) in check.theta_series.iter().zip(&check.x_series).enumerate() {
        for (&(n, a), &(_, b)) in th.checkpoints().iter().zip(xs.checkpoints()) {
            table.push(vec![i.into(), n.into(), a.into(), b.into()]);
        }
    }
    let p = check.reports[0].target_p;
    let top = (c.n as f64).log10();
    let chart = LineChart::new("Cesaro means of parameters and observations", "log10 n", "running mean")
        .with(Series::new("theta", BLUE, Style::Line, log10_points(&check.theta_series[0])))
        .with(Series::new("X", RED, Style::Line, log10_points(&check.x_series[0])))
        .with(Series::new("p", GREY, Style::Dashed, vec![(0.0, p), (top, p)]));
    Ok((metrics, table, chart))
}

fn converse(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let check = check_converse(&c.family_spec(), c.n, seed)?;
    let metrics = vec![Metric::exact("canonical_means_identical", check.report.pass)];
    let mut table = Table::new(&["n", "theta_mean", "x_mean"]);
    for (&(n, a), &(_, b)) in check.theta_series.checkpoints().iter().zip(check.x_series.checkpoints()) {
        table.push(vec![n.into(), a.into(), b.into()]);
    }
    let chart = LineChart::new("Canonical disintegration against observations", "log10 n", "running mean")
        .with(Series::new("theta (canonical)", BLUE, Style::Line, log10_points(&check.theta_series)))
        .with(Series::new("X", RED, Style::Dashed, log10_points(&check.x_series)));
    Ok((metrics, table, chart))
}

fn residual(c: &ExperimentConfig, seed: SeedSpec) -> Result<Parts, CliError> {
    let ms = c.family_spec().generate(c.n, seed)?;
    let x = sample_conditional(&ms, seed);
    let f = |v: f64| c.f.eval(v);
    let series = residual_series(&x, &ms, f, &c.f.tag(), &power_of_ten_checkpoints(c.n))?;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..ms.len() {
        for &s in ms.support() {
            let v = f(ms.realization().value(i, s));
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    let oscillation = hi - lo;
    let band = |n: usize| RESIDUAL_SIGMAS * (0.25 / n as f64).sqrt() * oscillation;
    let metrics = vec![Metric::within("terminal_partial_mean", series.partial_means.last(), 0.0, band(c.n))];

    let mut table = Table::new(&["n", "partial_mean", "band"]);
    let mut abs_points = Vec::new();
    let mut band_points = Vec::new();
    for &(n, m) in series.partial_means.checkpoints() {
        table.push(vec![n.into(), m.into(), band(n).into()]);
        abs_points.push(((n as f64).log10(), m.abs()));
        band_points.push(((n as f64).log10(), band(n)));
    }
    let chart = LineChart::new("Running means of the residual series", "log10 n", "|partial mean|")
        .with(Series::new("|partial mean|", BLUE, Style::Line, abs_points))
        .with(Series::new("band", RED, Style::Dashed, band_points));
    Ok((metrics, table, chart))
}
