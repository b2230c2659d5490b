use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("degenerate model: {0}")]
    Degenerate(prodis::Error),

    #[error("experiment failed: {0}")]
    Experiment(prodis::Error),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Degenerate(_) => 3,
            _ => 2,
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }
}

impl From<prodis::Error> for CliError {
    fn from(e: prodis::Error) -> Self {
        if e.is_degenerate() {
            CliError::Degenerate(e)
        } else {
            match e {
                prodis::Error::Config(m) | prodis::Error::Precondition(m) => CliError::Config(m),
                e @ (prodis::Error::Convention { .. } | prodis::Error::Stationarity(_)) => {
                    CliError::Config(e.to_string())
                }
                e => CliError::Experiment(e),
            }
        }
    }
}
