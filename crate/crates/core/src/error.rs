use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate bath: N_e = 0 has a single level and no transition")]
    DegenerateBath,

    #[error("eigensolver did not converge for a {dim}x{dim} matrix")]
    NoConvergence { dim: usize },

    #[error(
        "heat-capacity maximum sits on the scan boundary (t = {t}); widen the reduced-temperature scan"
    )]
    ScanBoundary { t: f64 },

    #[error("flat spectrum: heat capacity vanishes identically, no critical temperature")]
    NoTransition,

    #[error("maximum at t = {t} is not a strict local maximum (second difference {curvature})")]
    NotAMaximum { t: f64, curvature: f64 },

    #[error("fit error: {0}")]
    Fit(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("guard: {0}")]
    Guard(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("invalid config field `{field}`: {message}")]
    Validation { field: &'static str, message: String },

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("bath N_e = {n_e}: {source}")]
    Bath {
        n_e: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invariance threshold breached: {0}")]
    ThresholdBreach(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn in_bath(self, n_e: usize) -> Self {
        Error::Bath {
            n_e,
            source: Box::new(self),
        }
    }

    /// Process exit code: 2 for I/O, configuration and input guards,
    /// 3 for numerical failures, 4 for invariance-threshold breaches.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Bath { source, .. } => source.exit_code(),
            Error::Io { .. }
            | Error::Config(_)
            | Error::Validation { .. }
            | Error::Parse { .. }
            | Error::Guard(_)
            | Error::DegenerateBath
            | Error::Domain(_) => 2,
            Error::ThresholdBreach(_) => 4,
            Error::NoConvergence { .. }
            | Error::ScanBoundary { .. }
            | Error::NoTransition
            | Error::NotAMaximum { .. }
            | Error::Fit(_)
            | Error::DimensionMismatch { .. } => 3,
        }
    }
}
