//! Kolmogorov-Smirnov distance between a sample and a reference CDF.

use crate::error::{Error, Result};

/// `sup_x |F_n(x) - F(x)|` where `F_n` is the right-continuous empirical CDF
/// of `samples`. At each distinct sorted sample point `x` both `F_n(x) - F(x)`
/// and `F(x-) - F_n(x-)` are evaluated; `cdf_left` supplies `F(x-)` and may be
/// the same function as `cdf` for continuous references.
pub fn empirical_cdf_distance_with<F, G>(samples: &[f64], cdf: F, cdf_left: G) -> Result<f64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    if samples.is_empty() {
        return Err(Error::Domain("empty sample".into()));
    }
    if samples.iter().any(|x| x.is_nan()) {
        return Err(Error::Domain("sample contains NaN".into()));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i];
        let below = i as f64 / n;
        let mut j = i;
        while j < sorted.len() && sorted[j] == x {
            j += 1;
        }
        let at = j as f64 / n;
        d = d.max((at - cdf(x)).abs()).max((cdf_left(x) - below).abs());
        i = j;
    }
    Ok(d)
}

/// Distance against a continuous reference, so `F(x-) = F(x)`.
pub fn empirical_cdf_distance<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<f64> {
    empirical_cdf_distance_with(samples, &cdf, &cdf)
}

pub fn uniform_cdf(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_mass_vs_uniform() {
        let d = empirical_cdf_distance(&[0.5; 10], uniform_cdf).unwrap();
        assert!((d - 0.5).abs() < 1e-15);
    }

    // Brute-force oracle: evaluate both CDFs on a fine grid plus left limits.
    fn grid_oracle(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
        let n = samples.len() as f64;
        let ecdf = |x: f64| samples.iter().filter(|&&s| s <= x).count() as f64 / n;
        let ecdf_left = |x: f64| samples.iter().filter(|&&s| s < x).count() as f64 / n;
        let mut d: f64 = 0.0;
        for k in 0..=100_000 {
            let x = k as f64 / 100_000.0;
            d = d.max((ecdf(x) - cdf(x)).abs());
        }
        for &s in samples {
            d = d.max((ecdf(s) - cdf(s)).abs()).max((ecdf_left(s) - cdf(s)).abs());
        }
        d
    }

    #[test]
    fn even_grid_matches_oracle() {
        let n = 9;
        let samples: Vec<f64> = (1..=n).map(|i| i as f64 / (n + 1) as f64).collect();
        let d = empirical_cdf_distance(&samples, uniform_cdf).unwrap();
        let oracle = grid_oracle(&samples, uniform_cdf);
        // The oracle's sup over a grid attains 1/(N+1) at the sample points.
        assert!((d - 0.1).abs() < 1e-12, "{d}");
        assert!((d - oracle).abs() < 1e-12);
        assert!(d <= 1.0 / (n + 1) as f64 + 1e-12);
    }

    #[test]
    fn ties_use_both_sides() {
        let samples = [0.2, 0.2, 0.8, 0.8];
        let d = empirical_cdf_distance(&samples, uniform_cdf).unwrap();
        assert!((d - grid_oracle(&samples, uniform_cdf)).abs() < 1e-12);
        assert!((d - 0.3).abs() < 1e-12);
    }

    #[test]
    fn empty_is_error() {
        assert!(empirical_cdf_distance(&[], uniform_cdf).is_err());
    }
}
