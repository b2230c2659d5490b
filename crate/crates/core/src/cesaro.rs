//! Running means `n^-1 * sum_{i<n} term_i` sampled at checkpoints.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CesaroSeries {
    checkpoints: Vec<(usize, f64)>,
    terminal_n: usize,
}

impl CesaroSeries {
    /// Accumulates `terms` left to right and records the partial mean at each
    /// checkpoint. Checkpoints must be strictly increasing, positive and no
    /// larger than the number of terms.
    pub fn from_terms<I>(terms: I, checkpoints: &[usize]) -> Result<Self>
    where
        I: IntoIterator<Item = f64>,
    {
        if checkpoints.first() == Some(&0) || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "checkpoints must be positive and strictly increasing: {checkpoints:?}"
            )));
        }
        let mut out = Vec::with_capacity(checkpoints.len());
        let mut next = checkpoints.iter().copied().peekable();
        let mut sum = 0.0;
        let mut count = 0usize;
        for term in terms {
            sum += term;
            count += 1;
            if next.peek() == Some(&count) {
                out.push((count, sum / count as f64));
                next.next();
            }
        }
        if count == 0 {
            return Err(Error::Domain("no terms".into()));
        }
        if let Some(n) = next.next() {
            return Err(Error::Domain(format!("checkpoint {n} beyond {count} terms")));
        }
        Ok(Self { checkpoints: out, terminal_n: count })
    }

    pub fn checkpoints(&self) -> &[(usize, f64)] {
        &self.checkpoints
    }

    pub fn terminal_n(&self) -> usize {
        self.terminal_n
    }

    pub fn at(&self, n: usize) -> Option<f64> {
        self.checkpoints.binary_search_by_key(&n, |&(k, _)| k).ok().map(|i| self.checkpoints[i].1)
    }

    /// Partial mean at the last recorded checkpoint.
    pub fn last(&self) -> f64 {
        self.checkpoints.last().map_or(f64::NAN, |&(_, m)| m)
    }
}

/// `1, 10, 100, ...` up to `horizon`, with `horizon` itself appended when it is
/// not a power of ten.
pub fn power_of_ten_checkpoints(horizon: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = 1usize;
    while n <= horizon {
        out.push(n);
        match n.checked_mul(10) {
            Some(m) => n = m,
            None => break,
        }
    }
    if out.last() != Some(&horizon) && horizon > 0 {
        out.push(horizon);
    }
    out
}

/// Running mean after every term.
pub fn running_means(terms: &[f64]) -> Vec<f64> {
    let mut sum = 0.0;
    terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            sum += t;
            sum / (i + 1) as f64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoints_record_sequential_means() {
        let terms = [1.0, 0.0, 1.0, 1.0, 0.0];
        let c = CesaroSeries::from_terms(terms, &[1, 2, 5]).unwrap();
        assert_eq!(c.checkpoints(), &[(1, 1.0), (2, 0.5), (5, 0.6)]);
        assert_eq!(c.terminal_n(), 5);
        assert_eq!(c.at(2), Some(0.5));
        assert_eq!(c.at(3), None);
        let all = running_means(&terms);
        assert_eq!(all[4], c.last());
    }

    #[test]
    fn rejects_bad_checkpoints() {
        assert!(CesaroSeries::from_terms([1.0, 2.0], &[2, 1]).is_err());
        assert!(CesaroSeries::from_terms([1.0, 2.0], &[0]).is_err());
        assert!(CesaroSeries::from_terms([1.0, 2.0], &[3]).is_err());
        assert!(CesaroSeries::from_terms(std::iter::empty(), &[]).is_err());
    }

    #[test]
    fn default_schedule() {
        assert_eq!(power_of_ten_checkpoints(100_000), vec![1, 10, 100, 1_000, 10_000, 100_000]);
        assert_eq!(power_of_ten_checkpoints(20), vec![1, 10, 20]);
        assert_eq!(power_of_ten_checkpoints(1), vec![1]);
    }
}
