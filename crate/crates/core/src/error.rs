use std::fmt;

use thiserror::Error;

use crate::matrix::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid decision matrix: {}", JoinViolations(.0))]
    InvalidMatrix(Vec<Violation>),

    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),

    #[error("a decision matrix needs at least one alternative")]
    EmptyMatrix,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid pairwise comparison matrix: {0}")]
    InvalidPairwise(String),

    #[error("power iteration did not converge after {iterations} iterations (last residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("alpha {alpha} is smaller than the number of alternatives {n}")]
    InvalidAlpha { alpha: u64, n: usize },

    #[error("weighted product needs strictly positive values; got {value} at row {row}, column {col}")]
    NonPositiveValue { row: usize, col: usize, value: f64 },

    #[error("column {0} has zero Euclidean norm")]
    ZeroNormColumn(usize),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("unknown method `{0}` (expected one of msaw, saw, wpm, topsis, ahp)")]
    UnknownMethod(String),

    #[error("negative input to energy model: {0}")]
    NegativeInput(&'static str),

    #[error("label sets differ: {0}")]
    LabelMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

struct JoinViolations<'a>(&'a [Violation]);

impl fmt::Display for JoinViolations<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
