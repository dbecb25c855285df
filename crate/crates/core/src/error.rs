use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Several variants signal a violated identity rather than bad input:
/// `NonExactDivision`, `NegativeCoefficient`, `IdentityViolated` and
/// `NonIntegralGenus` are what a failed verification looks like.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: remainder {remainder}")]
    NonExactDivision { remainder: String },

    #[error("negative coefficient {coefficient} in degree {degree}")]
    NegativeCoefficient { degree: u32, coefficient: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ambient mismatch: Gr(2,{left}) vs Gr(2,{right})")]
    AmbientMismatch { left: u32, right: u32 },

    #[error("(n,k)=({n},{k}) is outside the smooth range (k <= {max_k} for this parity of n)")]
    OutOfSmoothRange { n: u32, k: u32, max_k: u32 },

    #[error("(n,k)=({n},{k}) has negative dimension: dim X = {dim_x}, dim Y = {dim_y}")]
    NegativeDimension {
        n: u32,
        k: u32,
        dim_x: i64,
        dim_y: i64,
    },

    #[error("(n,k)=({n},{k}) is not covered by the variable-Betti lemma")]
    NotInLemmaRange { n: u32, k: u32 },

    #[error("inconsistent Euler characteristic for (n,k)=({n},{k}): {detail}")]
    InconsistentEuler { n: u32, k: u32, detail: String },

    #[error("non-integral genus coefficient {value} at y^{degree}")]
    NonIntegralGenus { degree: usize, value: String },

    #[error("identity violated: {0}")]
    IdentityViolated(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("evaluation error in `{expr}`: {message}")]
    Eval { expr: String, message: String },

    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    /// Process exit code used by the CLI for this error.
    ///
    /// 2 is a usage or input problem, 3 an internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_)
            | Error::OutOfSmoothRange { .. }
            | Error::NegativeDimension { .. }
            | Error::NotInLemmaRange { .. }
            | Error::AmbientMismatch { .. }
            | Error::Parse { .. }
            | Error::Eval { .. } => 2,
            Error::NonExactDivision { .. }
            | Error::NegativeCoefficient { .. }
            | Error::InconsistentEuler { .. }
            | Error::NonIntegralGenus { .. }
            | Error::IdentityViolated(_)
            | Error::Cache(_) => 3,
        }
    }

    /// Stable machine-readable tag, used in JSON diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonExactDivision { .. } => "NonExactDivision",
            Error::NegativeCoefficient { .. } => "NegativeCoefficient",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::OutOfSmoothRange { .. } => "OutOfSmoothRange",
            Error::NegativeDimension { .. } => "NegativeDimension",
            Error::NotInLemmaRange { .. } => "NotInLemmaRange",
            Error::InconsistentEuler { .. } => "InconsistentEuler",
            Error::NonIntegralGenus { .. } => "NonIntegralGenus",
            Error::IdentityViolated(_) => "IdentityViolated",
            Error::Parse { .. } => "ParseError",
            Error::Eval { .. } => "EvalError",
            Error::Cache(_) => "CacheError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Serializable form of an [`Error`], for reports and stderr.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub kind: String,
    pub exit_code: i32,
    pub message: String,
}

impl From<&Error> for Diagnostic {
    fn from(e: &Error) -> Self {
        Diagnostic {
            kind: e.kind().to_string(),
            exit_code: e.exit_code(),
            message: e.to_string(),
        }
    }
}
