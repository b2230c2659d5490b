use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("transition matrix is reducible (off-diagonal entries {q01} and {q10}); no unique stationary law")]
    NonErgodic { q01: f64, q10: f64 },

    #[error("regime convention violated: mu_1 = {mu_1} must exceed lambda_1 = {lambda_1}")]
    Convention { mu_1: f64, lambda_1: f64 },

    #[error("volatility persistence beta = {0} must satisfy |beta| < 1")]
    Stationarity(f64),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("length mismatch: trajectory has {trajectory} values, measure sequence has {measures}")]
    Pairing { trajectory: usize, measures: usize },

    #[error("conditioning event {{E(S_n | xi) < {t}}} was empty in all {trials} trials")]
    DegenerateConditioning { t: f64, trials: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for conditions that come from the model itself rather than from
    /// malformed input.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Error::NonErgodic { .. } | Error::DegenerateConditioning { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
