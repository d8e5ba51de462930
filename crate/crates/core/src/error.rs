use thiserror::Error;

/// Errors produced by the root finder and the verification operations.
#[derive(Debug, Error)]
pub enum Error {
    /// No sign change could be established inside a bracket, even after
    /// nudging the endpoints inward. Signals numerically coincident roots
    /// beyond the double-root detection tolerance.
    #[error("no sign change in bracket [{lo}, {hi}]: {detail}")]
    Bracketing { lo: f64, hi: f64, detail: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
