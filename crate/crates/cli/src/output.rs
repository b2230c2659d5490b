//! CSV tables, SVG line charts and the report file.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use prodis::ExperimentReport;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
}

impl Cell {
    /// Integers verbatim, floats in scientific notation with 17 significant digits.
    pub fn render(self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) if v.is_nan() => "nan".into(),
            Cell::Float(v) => format!("{v:.16e}"),
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("writing to memory");
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.render())).expect("writing to memory");
        }
        w.into_inner().expect("writing to memory")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Line,
    Dashed,
    Markers,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub color: &'static str,
    pub style: Style,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(name: &str, color: &'static str, style: Style, points: Vec<(f64, f64)>) -> Self {
        Self { name: name.into(), color, style, points }
    }
}

pub const WIDTH: f64 = 960.0;
pub const HEIGHT: f64 = 540.0;
/// Longest polyline drawn; longer series are decimated by a fixed stride.
pub const MAX_POINTS: usize = 2000;

const LEFT: f64 = 80.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;

#[derive(Debug, Clone, PartialEq)]
pub struct LineChart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn decimate(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let finite: Vec<(f64, f64)> = points.iter().copied().filter(|(x, y)| x.is_finite() && y.is_finite()).collect();
    if finite.len() <= MAX_POINTS {
        return finite;
    }
    let stride = finite.len().div_ceil(MAX_POINTS);
    let mut out: Vec<(f64, f64)> = finite.iter().copied().step_by(stride).collect();
    if out.last() != finite.last() {
        out.push(*finite.last().expect("nonempty"));
    }
    out
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        let pad = if lo.abs() > 0.0 { lo.abs() * 0.1 } else { 1.0 };
        return (lo - pad, hi + pad);
    }
    let pad = (hi - lo) * 0.05;
    (lo - pad, hi + pad)
}

fn tick_label(v: f64) -> String {
    if v == 0.0 || (v.abs() >= 1e-3 && v.abs() < 1e5) {
        let s = format!("{v:.3}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    } else {
        format!("{v:.2e}")
    }
}

impl LineChart {
    pub fn new(title: &str, x_label: &str, y_label: &str) -> Self {
        Self { title: title.into(), x_label: x_label.into(), y_label: y_label.into(), series: Vec::new() }
    }

    pub fn with(mut self, series: Series) -> Self {
        self.series.push(series);
        self
    }

    /// A static SVG document with a fixed 960x540 viewBox. Coordinates are
    /// printed with two decimals.
    pub fn to_svg(&self) -> String {
        let drawn: Vec<Vec<(f64, f64)>> = self.series.iter().map(|s| decimate(&s.points)).collect();
        let (x0, x1) = range(drawn.iter().flatten().map(|p| p.0));
        let (y0, y1) = range(drawn.iter().flatten().map(|p| p.1));
        let pw = WIDTH - LEFT - RIGHT;
        let ph = HEIGHT - TOP - BOTTOM;
        let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
        let sy = |y: f64| TOP + (1.0 - (y - y0) / (y1 - y0)) * ph;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
            LEFT + pw / 2.0,
            escape(&self.title)
        );
        let _ = writeln!(
            s,
            r#"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{pw:.2}" height="{ph:.2}" fill="none" stroke="black"/>"#
        );
        for i in 0..=5 {
            let fx = x0 + (x1 - x0) * i as f64 / 5.0;
            let fy = y0 + (y1 - y0) * i as f64 / 5.0;
            let (px, py) = (sx(fx), sy(fy));
            let _ = writeln!(
                s,
                r##"<line x1="{px:.2}" y1="{TOP:.2}" x2="{px:.2}" y2="{:.2}" stroke="#e0e0e0"/>"##,
                TOP + ph
            );
            let _ = writeln!(
                s,
                r##"<line x1="{LEFT:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#e0e0e0"/>"##,
                LEFT + pw
            );
            let _ = writeln!(
                s,
                r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                TOP + ph + 18.0,
                tick_label(fx)
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 6.0,
                py + 4.0,
                tick_label(fy)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + pw / 2.0,
            HEIGHT - 15.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
            TOP + ph / 2.0,
            TOP + ph / 2.0,
            escape(&self.y_label)
        );

        for (series, pts) in self.series.iter().zip(&drawn) {
            match series.style {
                Style::Markers => {
                    let _ = writeln!(s, r#"<g fill="{}">"#, series.color);
                    for &(x, y) in pts {
                        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3"/>"#, sx(x), sy(y));
                    }
                    let _ = writeln!(s, "</g>");
                }
                Style::Line | Style::Dashed => {
                    let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
                    let dash = if series.style == Style::Dashed { r#" stroke-dasharray="6 4""# } else { "" };
                    let _ = writeln!(
                        s,
                        r#"<polyline fill="none" stroke="{}" stroke-width="1.5"{dash} points="{}"/>"#,
                        series.color,
                        coords.join(" ")
                    );
                }
            }
        }

        for (i, series) in self.series.iter().enumerate() {
            let ly = TOP + 10.0 + 20.0 * i as f64;
            let lx = LEFT + pw + 15.0;
            match series.style {
                Style::Markers => {
                    let _ =
                        writeln!(s, r#"<circle cx="{:.2}" cy="{ly:.2}" r="3" fill="{}"/>"#, lx + 10.0, series.color);
                }
                Style::Line | Style::Dashed => {
                    let dash = if series.style == Style::Dashed { r#" stroke-dasharray="6 4""# } else { "" };
                    let _ = writeln!(
                        s,
                        r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="1.5"{dash}/>"#,
                        lx + 20.0,
                        series.color
                    );
                }
            }
            let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 26.0, ly + 4.0, escape(&series.name));
        }
        s.push_str("</svg>\n");
        s
    }
}

/// Paths of the three files an experiment emits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputPaths {
    pub csv: PathBuf,
    pub svg: PathBuf,
    pub report: PathBuf,
}

impl OutputPaths {
    pub fn new(dir: &Path, experiment: &str, seed: u64) -> Self {
        let stem = format!("{experiment}-{seed}");
        Self {
            csv: dir.join(format!("{stem}.csv")),
            svg: dir.join(format!("{stem}.svg")),
            report: dir.join(format!("{stem}.report.txt")),
        }
    }
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Writes the CSV, the SVG and the report (pretty JSON plus the overall
/// verdict) into `dir`.
pub fn emit(dir: &Path, report: &ExperimentReport, table: &Table, chart: &LineChart) -> Result<OutputPaths, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let paths = OutputPaths::new(dir, &report.experiment, report.seed);
    write(&paths.csv, &table.to_csv())?;
    write(&paths.svg, chart.to_svg().as_bytes())?;
    write(&paths.report, report_text(report).as_bytes())?;
    Ok(paths)
}

#[derive(serde::Serialize)]
struct ReportFile<'a> {
    #[serde(flatten)]
    report: &'a ExperimentReport,
    pass: bool,
}

pub fn report_text(report: &ExperimentReport) -> String {
    let file = ReportFile { report, pass: report.pass() };
    let mut s = serde_json::to_string_pretty(&file).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use prodis::Metric;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(Cell::Float(0.1).render(), "1.0000000000000001e-1");
        assert_eq!(Cell::Float(-2.5).render(), "-2.5000000000000000e0");
        assert_eq!(Cell::Int(-3).render(), "-3");
        let x = 0.123_456_789_012_345_67_f64;
        assert_eq!(Cell::Float(x).render().parse::<f64>().unwrap(), x);
    }

    #[test]
    fn csv_has_header_first() {
        let mut t = Table::new(&["k", "v"]);
        t.push(vec![1usize.into(), 0.5.into()]);
        let text = String::from_utf8(t.to_csv()).unwrap();
        assert_eq!(text, "k,v\n1,5.0000000000000000e-1\n");
    }

    #[test]
    fn svg_is_static_and_fixed_size() {
        let pts: Vec<(f64, f64)> = (0..10_000).map(|i| (i as f64, (i as f64).sqrt())).collect();
        let chart = LineChart::new("a < b", "x", "y")
            .with(Series::new("sqrt", "#1f77b4", Style::Line, pts))
            .with(Series::new("dots", "#d62728", Style::Markers, vec![(1.0, 2.0)]));
        let svg = chart.to_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"viewBox="0 0 960 540""#));
        assert!(svg.contains("a &lt; b"));
        assert!(!svg.contains("<script") && !svg.contains("href"));
        let poly = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        assert!(poly.matches(',').count() <= MAX_POINTS + 1);
        assert_eq!(svg, chart.to_svg());
    }

    #[test]
    fn decimation_keeps_endpoints_and_drops_nan() {
        let pts: Vec<(f64, f64)> = (0..4001).map(|i| (i as f64, if i == 7 { f64::NAN } else { 1.0 })).collect();
        let d = decimate(&pts);
        assert!(d.len() <= MAX_POINTS + 1);
        assert_eq!(d[0].0, 0.0);
        assert_eq!(d.last().unwrap().0, 4000.0);
    }

    #[test]
    fn report_carries_verdict() {
        let mut r = ExperimentReport::new("x", 5);
        r.push(Metric::exact("m", false));
        let v: serde_json::Value = serde_json::from_str(&report_text(&r)).unwrap();
        assert_eq!(v["pass"], false);
        assert_eq!(v["metrics"][0]["name"], "m");
        assert_eq!(v["seed"], 5);
    }
}
