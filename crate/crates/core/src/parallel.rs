//! Trial fan-out. Results always come back in trial order, so aggregation is
//! identical with or without threads.

use rayon::prelude::*;

/// Set `NO_PARALLEL=1` to run every trial on the calling thread.
pub const NO_PARALLEL_ENV: &str = "NO_PARALLEL";

pub fn parallel_enabled() -> bool {
    std::env::var(NO_PARALLEL_ENV).map_or(true, |v| v.trim() != "1")
}

pub fn map_trials<T, F>(trials: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    if parallel_enabled() {
        (0..trials as u64).into_par_iter().map(f).collect()
    } else {
        (0..trials as u64).map(f).collect()
    }
}

/// Like [`map_trials`] but stops at the first error (in trial order).
pub fn try_map_trials<T, E, F>(trials: usize, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(u64) -> Result<T, E> + Sync + Send,
{
    map_trials(trials, f).into_iter().collect()
}
