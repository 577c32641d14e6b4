use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `Σ w = 1` for normalized weight vectors.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Nonnegative criterion weights.
///
/// [`WeightVector::new`] enforces `Σ w = 1`. [`WeightVector::from_raw`] only
/// requires a positive sum and exists for rescaled vectors and for rows
/// printed with rounding; every ranking method accepts both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        let w = Self::from_raw(weights)?;
        let sum = w.sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        Ok(w)
    }

    pub fn from_raw(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(Error::InvalidWeights(format!(
                "weight {i} is {w}; weights must be finite and nonnegative"
            )));
        }
        if weights.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidWeights("weights sum to 0".into()));
        }
        Ok(Self(weights))
    }

    /// Scales `weights` so they sum to 1.
    pub fn normalized(weights: Vec<f64>) -> Result<Self> {
        let w = Self::from_raw(weights)?;
        let sum = w.sum();
        Ok(Self(w.0.into_iter().map(|x| x / sum).collect()))
    }

    pub fn uniform(m: usize) -> Result<Self> {
        Self::normalized(vec![1.0; m])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.sum() - 1.0).abs() <= WEIGHT_SUM_TOLERANCE
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::from_raw(self.0.iter().map(|w| w * c).collect())
    }

    pub(crate) fn ensure_len(&self, m: usize) -> Result<()> {
        if self.len() != m {
            return Err(Error::DimensionMismatch {
                what: "weight vector",
                expected: m,
                got: self.len(),
            });
        }
        Ok(())
    }

    /// Parses a JSON array or a single CSV row (an optional non-numeric
    /// header row is skipped). The result must sum to 1.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            let v: Vec<f64> = serde_json::from_str(trimmed)?;
            return Self::new(v);
        }
        let rows: Vec<&str> = trimmed.lines().filter(|l| !l.trim().is_empty()).collect();
        let parse_row = |line: &str| {
            line.split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
        };
        match rows.as_slice() {
            [row] => parse_row(row)
                .map_err(|e| Error::Parse(format!("weights row: {e}")))
                .and_then(Self::new),
            [header, row] if parse_row(header).is_err() => parse_row(row)
                .map_err(|e| Error::Parse(format!("weights row: {e}")))
                .and_then(Self::new),
            _ => Err(Error::Parse(
                "weights file must hold a JSON array or one CSV row".into(),
            )),
        }
    }
}

impl AsRef<[f64]> for WeightVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Service classes with published criterion weights over
/// (Bandwidth, Delay, PLR, Energy, Cost).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Service {
    Voip,
    Video,
    BestEffort,
}

impl Service {
    pub const ALL: [Service; 3] = [Service::Voip, Service::Video, Service::BestEffort];

    /// The weights exactly as published, rounded to three decimals. These
    /// rows sum to 0.998, not 1.
    pub fn printed_weights(self) -> [f64; 5] {
        match self {
            Service::Voip => [0.047, 0.486, 0.371, 0.047, 0.047],
            Service::Video => [0.458, 0.101, 0.302, 0.074, 0.063],
            Service::BestEffort => [0.299, 0.146, 0.146, 0.108, 0.299],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Service::Voip => "voip",
            Service::Video => "video",
            Service::BestEffort => "besteffort",
        }
    }
}

impl fmt::Display for Service {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Service {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', '_', ' '], "").as_str() {
            "voip" => Ok(Service::Voip),
            "video" => Ok(Service::Video),
            "besteffort" | "be" => Ok(Service::BestEffort),
            other => Err(Error::Parse(format!(
                "unknown service `{other}` (expected voip, video or besteffort)"
            ))),
        }
    }
}

/// Published weights for `service`, renormalized to sum exactly 1.
pub fn preset_weights(service: Service) -> WeightVector {
    WeightVector::normalized(service.printed_weights().to_vec())
        .expect("preset weights are positive")
}
