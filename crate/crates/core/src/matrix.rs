//! Decision matrix data model, validation and the direction-aware
//! normalization consumed by the value-based ranking methods.
//!
//! A [`DecisionMatrix`] is plain data: it can be built in an invalid state so
//! that [`DecisionMatrix::validate`] can report every problem at once. Every
//! computation in this crate validates its input first and rejects invalid
//! matrices with [`Error::InvalidMatrix`].

use std::collections::HashSet;
use std::fmt;
use std::io;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether larger (`Benefit`) or smaller (`Cost`) raw values are preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Benefit,
    Cost,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Benefit => "benefit",
            Direction::Cost => "cost",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "benefit" | "b" | "max" | "+" => Ok(Direction::Benefit),
            "cost" | "c" | "min" | "-" => Ok(Direction::Cost),
            other => Err(Error::Parse(format!(
                "unknown direction `{other}` (expected benefit or cost)"
            ))),
        }
    }
}

/// Column names of the network-selection test matrix, in column order.
pub const NETWORK_CRITERIA: [&str; 5] = ["Bandwidth", "Delay", "PLR", "Energy", "Cost"];

/// Directions of [`NETWORK_CRITERIA`]: more bandwidth is better, everything
/// else is a cost.
pub const NETWORK_DIRECTIONS: [Direction; 5] = [
    Direction::Benefit,
    Direction::Cost,
    Direction::Cost,
    Direction::Cost,
    Direction::Cost,
];

/// Units of [`NETWORK_CRITERIA`].
pub const NETWORK_UNITS: [&str; 5] = ["Mbps", "ms", "%", "mJ/s", "relative"];

/// Returns [`NETWORK_DIRECTIONS`] when `names` are literally
/// [`NETWORK_CRITERIA`], and `None` otherwise.
pub fn default_directions<S: AsRef<str>>(names: &[S]) -> Option<Vec<Direction>> {
    let matches = names.len() == NETWORK_CRITERIA.len()
        && names
            .iter()
            .zip(NETWORK_CRITERIA)
            .all(|(a, b)| a.as_ref() == b);
    matches.then(|| NETWORK_DIRECTIONS.to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub direction: Direction,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub unit: String,
}

impl CriterionSpec {
    pub fn new(name: impl Into<String>, direction: Direction) -> Self {
        Self {
            name: name.into(),
            direction,
            unit: String::new(),
        }
    }

    pub fn benefit(name: impl Into<String>) -> Self {
        Self::new(name, Direction::Benefit)
    }

    pub fn cost(name: impl Into<String>) -> Self {
        Self::new(name, Direction::Cost)
    }

    pub fn with_unit(mut self, unit: impl Into<String>) -> Self {
        self.unit = unit.into();
        self
    }
}

/// A single validation failure. Row and column indices are zero-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NoAlternatives,
    NoCriteria,
    RowLength { row: usize, expected: usize, got: usize },
    RowCount { expected: usize, got: usize },
    NonFinite { row: usize, col: usize, value: f64 },
    NonPositiveCost { row: usize, col: usize, value: f64 },
    NegativeBenefit { row: usize, col: usize, value: f64 },
    ZeroBenefitColumn { col: usize },
    DuplicateAlternative { label: String },
    DuplicateCriterion { name: String },
    EmptyCriterionName { col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoAlternatives => write!(f, "matrix has no alternatives"),
            Violation::NoCriteria => write!(f, "matrix has no criteria"),
            Violation::RowLength { row, expected, got } => {
                write!(f, "row {row} has {got} values, expected {expected}")
            }
            Violation::RowCount { expected, got } => {
                write!(f, "grid has {got} rows but {expected} alternative labels")
            }
            Violation::NonFinite { row, col, value } => {
                write!(f, "non-finite value {value} at ({row}, {col})")
            }
            Violation::NonPositiveCost { row, col, value } => {
                write!(f, "cost value {value} at ({row}, {col}) must be strictly positive")
            }
            Violation::NegativeBenefit { row, col, value } => {
                write!(f, "benefit value {value} at ({row}, {col}) must be nonnegative")
            }
            Violation::ZeroBenefitColumn { col } => {
                write!(f, "benefit column {col} has maximum 0")
            }
            Violation::DuplicateAlternative { label } => {
                write!(f, "duplicate alternative label `{label}`")
            }
            Violation::DuplicateCriterion { name } => {
                write!(f, "duplicate criterion name `{name}`")
            }
            Violation::EmptyCriterionName { col } => write!(f, "criterion {col} has an empty name"),
        }
    }
}

/// Outcome of [`DecisionMatrix::validate`].
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidMatrix(self.violations))
        }
    }
}

/// Alternatives × criteria grid of raw values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    values: Vec<Vec<f64>>,
}

impl DecisionMatrix {
    /// Builds a matrix without checking it. Use [`DecisionMatrix::validate`]
    /// or [`DecisionMatrix::try_new`] when the data comes from outside.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        values: Vec<Vec<f64>>,
    ) -> Self {
        Self {
            alternatives,
            criteria,
            values,
        }
    }

    pub fn try_new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        values: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let m = Self::new(alternatives, criteria, values);
        m.validate().into_result()?;
        Ok(m)
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.values[row][col]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(move |r| r[col])
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.alternatives.iter().position(|a| a == label)
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.criteria.iter().map(|c| c.direction).collect()
    }

    /// Checks every structural and numeric invariant and reports all
    /// violations with their coordinates.
    pub fn validate(&self) -> Validation {
        let mut out = Vec::new();
        let n = self.alternatives.len();
        let m = self.criteria.len();
        if n == 0 {
            out.push(Violation::NoAlternatives);
        }
        if m == 0 {
            out.push(Violation::NoCriteria);
        }
        if self.values.len() != n {
            out.push(Violation::RowCount {
                expected: n,
                got: self.values.len(),
            });
        }

        let mut seen = HashSet::new();
        for label in &self.alternatives {
            if !seen.insert(label.as_str()) {
                out.push(Violation::DuplicateAlternative {
                    label: label.clone(),
                });
            }
        }
        let mut seen = HashSet::new();
        for (col, c) in self.criteria.iter().enumerate() {
            if c.name.trim().is_empty() {
                out.push(Violation::EmptyCriterionName { col });
            } else if !seen.insert(c.name.as_str()) {
                out.push(Violation::DuplicateCriterion {
                    name: c.name.clone(),
                });
            }
        }

        let mut shape_ok = self.values.len() == n;
        for (row, r) in self.values.iter().enumerate() {
            if r.len() != m {
                shape_ok = false;
                out.push(Violation::RowLength {
                    row,
                    expected: m,
                    got: r.len(),
                });
            }
        }

        for (row, r) in self.values.iter().enumerate() {
            for (col, (&value, c)) in r.iter().zip(&self.criteria).enumerate() {
                if !value.is_finite() {
                    out.push(Violation::NonFinite { row, col, value });
                    continue;
                }
                match c.direction {
                    Direction::Cost if value <= 0.0 => {
                        out.push(Violation::NonPositiveCost { row, col, value })
                    }
                    Direction::Benefit if value < 0.0 => {
                        out.push(Violation::NegativeBenefit { row, col, value })
                    }
                    _ => {}
                }
            }
        }

        if shape_ok && n > 0 {
            for (col, c) in self.criteria.iter().enumerate() {
                if c.direction == Direction::Benefit {
                    let max = self.column(col).fold(f64::NEG_INFINITY, f64::max);
                    if max.is_finite() && max <= 0.0 {
                        out.push(Violation::ZeroBenefitColumn { col });
                    }
                }
            }
        }

        Validation { violations: out }
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        self.validate().into_result()
    }

    /// Max-normalization: benefit columns become `x / max`, cost columns
    /// `min / x`. The best entry of every column maps to exactly 1; zero
    /// benefit entries map to 0.
    pub fn normalize(&self) -> Result<Vec<Vec<f64>>> {
        self.ensure_valid()?;
        let n = self.n_alternatives();
        let mut out = vec![vec![0.0; self.n_criteria()]; n];
        for (col, c) in self.criteria.iter().enumerate() {
            match c.direction {
                Direction::Benefit => {
                    let max = self.column(col).fold(f64::NEG_INFINITY, f64::max);
                    for (row, r) in out.iter_mut().enumerate() {
                        r[col] = self.values[row][col] / max;
                    }
                }
                Direction::Cost => {
                    let min = self.column(col).fold(f64::INFINITY, f64::min);
                    for (row, r) in out.iter_mut().enumerate() {
                        r[col] = min / self.values[row][col];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Returns a copy with the row for `label` removed; every other row and
    /// all criteria keep their order.
    pub fn drop_alternative(&self, label: &str) -> Result<Self> {
        let idx = self
            .index_of(label)
            .ok_or_else(|| Error::UnknownAlternative(label.to_owned()))?;
        if self.n_alternatives() == 1 {
            return Err(Error::EmptyMatrix);
        }
        let mut alternatives = self.alternatives.clone();
        let mut values = self.values.clone();
        alternatives.remove(idx);
        values.remove(idx);
        Ok(Self {
            alternatives,
            criteria: self.criteria.clone(),
            values,
        })
    }

    /// Appends an exact copy of `label`'s row under `copy_label`.
    pub fn duplicate_alternative(&self, label: &str, copy_label: &str) -> Result<Self> {
        let idx = self
            .index_of(label)
            .ok_or_else(|| Error::UnknownAlternative(label.to_owned()))?;
        if self.index_of(copy_label).is_some() {
            return Err(Error::InvalidMatrix(vec![Violation::DuplicateAlternative {
                label: copy_label.to_owned(),
            }]));
        }
        let mut out = self.clone();
        out.alternatives.push(copy_label.to_owned());
        out.values.push(self.values[idx].clone());
        Ok(out)
    }

    /// Replaces every criterion direction, e.g. after loading a CSV.
    pub fn with_directions(mut self, directions: &[Direction]) -> Result<Self> {
        if directions.len() != self.criteria.len() {
            return Err(Error::DimensionMismatch {
                what: "directions",
                expected: self.criteria.len(),
                got: directions.len(),
            });
        }
        for (c, &d) in self.criteria.iter_mut().zip(directions) {
            c.direction = d;
        }
        Ok(self)
    }

    /// Writes `alternative,<crit1>,...` followed by one row per alternative.
    /// Numbers use Rust's shortest round-trip formatting.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header = vec!["alternative".to_owned()];
        header.extend(self.criteria.iter().map(|c| c.name.clone()));
        w.write_record(&header)?;
        for (label, row) in self.alternatives.iter().zip(&self.values) {
            let mut rec = vec![label.clone()];
            rec.extend(row.iter().map(|v| format!("{v}")));
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A matrix read from CSV before criterion directions are attached.
#[derive(Debug, Clone, PartialEq)]
pub struct RawMatrix {
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl RawMatrix {
    pub fn read_csv<R: io::Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(reader);
        let header = rdr.headers()?.clone();
        if header.len() < 2 {
            return Err(Error::Parse(
                "header must be `alternative,<criterion>,...` with at least one criterion".into(),
            ));
        }
        let criteria: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
        let mut alternatives = Vec::new();
        let mut values = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let line = i + 2;
            let mut fields = rec.iter();
            let label = fields
                .next()
                .ok_or_else(|| Error::Parse(format!("line {line}: empty record")))?;
            let row = fields
                .enumerate()
                .map(|(c, s)| {
                    s.parse::<f64>().map_err(|_| {
                        Error::Parse(format!("line {line}, column {}: `{s}` is not a number", c + 2))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != criteria.len() {
                return Err(Error::DimensionMismatch {
                    what: "CSV row length",
                    expected: criteria.len(),
                    got: row.len(),
                });
            }
            alternatives.push(label.to_owned());
            values.push(row);
        }
        Ok(Self {
            alternatives,
            criteria,
            values,
        })
    }

    pub fn from_csv_str(s: &str) -> Result<Self> {
        Self::read_csv(s.as_bytes())
    }

    /// Attaches directions and validates the result. Columns named exactly
    /// like [`NETWORK_CRITERIA`] also get their units back.
    pub fn into_matrix(self, directions: &[Direction]) -> Result<DecisionMatrix> {
        if directions.len() != self.criteria.len() {
            return Err(Error::DimensionMismatch {
                what: "directions",
                expected: self.criteria.len(),
                got: directions.len(),
            });
        }
        let units = default_directions(&self.criteria).map(|_| NETWORK_UNITS);
        let criteria = self
            .criteria
            .into_iter()
            .zip(directions)
            .enumerate()
            .map(|(j, (name, &d))| {
                let c = CriterionSpec::new(name, d);
                match units {
                    Some(u) => c.with_unit(u[j]),
                    None => c,
                }
            })
            .collect();
        DecisionMatrix::try_new(self.alternatives, criteria, self.values)
    }
}
