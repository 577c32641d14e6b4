//! Turns command-line sources into core values.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use msaw_core::eigen::{principal_eigenvector, PairwiseMatrix, DEFAULT_MAX_ITER, DEFAULT_TOL};
use msaw_core::matrix::default_directions;
use msaw_core::{
    table2_matrix, DecisionMatrix, Direction, Error, Method, RankOptions, RawMatrix, Service,
    TiePolicy, WeightVector,
};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_VALIDATION: u8 = 4;
pub const EXIT_NUMERIC: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn with_context(self, ctx: impl fmt::Display) -> Self {
        Self {
            code: self.code,
            message: format!("{ctx}: {}", self.message),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Io(_) => EXIT_IO,
            Error::Csv(c) if matches!(c.kind(), csv::ErrorKind::Io(_)) => EXIT_IO,
            Error::Parse(_) | Error::Csv(_) | Error::Json(_) | Error::UnknownMethod(_) => {
                EXIT_USAGE
            }
            Error::NonConvergence { .. } | Error::ZeroNormColumn(_) => EXIT_NUMERIC,
            _ => EXIT_VALIDATION,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_IO,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Everything a ranking or reversal run needs, resolved from flags.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub matrix: DecisionMatrix,
    pub weights: WeightVector,
    pub methods: Vec<Method>,
    pub options: RankOptions,
    pub format: OutputFormat,
}

/// `table2` or a CSV path. Directions come from `--directions`, then the
/// JSON sidecar, then the network-criteria defaults.
pub fn load_matrix(
    source: &str,
    directions: Option<&str>,
    criteria_file: Option<&Path>,
) -> CliResult<DecisionMatrix> {
    let (raw, builtin) = if source.eq_ignore_ascii_case("table2") {
        let m = table2_matrix();
        (
            RawMatrix {
                alternatives: m.alternatives().to_vec(),
                criteria: m.criteria().iter().map(|c| c.name.clone()).collect(),
                values: m.rows().to_vec(),
            },
            Some(m.directions()),
        )
    } else {
        let path = Path::new(source);
        let text = read_file(path)?;
        let raw = RawMatrix::from_csv_str(&text)
            .map_err(|e| CliError::from(e).with_context(path.display()))?;
        (raw, None)
    };

    let dirs = if let Some(list) = directions {
        list.split(',')
            .map(str::parse::<Direction>)
            .collect::<Result<Vec<_>, _>>()?
    } else if let Some(path) = criteria_file {
        directions_from_sidecar(&read_file(path)?, &raw.criteria)
            .map_err(|e| e.with_context(path.display()))?
    } else if let Some(d) = builtin.or_else(|| default_directions(&raw.criteria)) {
        d
    } else {
        return Err(CliError::usage(format!(
            "criterion directions are required for columns {}; pass --directions or --criteria",
            raw.criteria.join(",")
        )));
    };
    if dirs.len() != raw.criteria.len() {
        return Err(CliError {
            code: EXIT_VALIDATION,
            message: format!(
                "{} directions given for {} criteria",
                dirs.len(),
                raw.criteria.len()
            ),
        });
    }
    Ok(raw.into_matrix(&dirs)?)
}

/// Sidecar format: a JSON object mapping criterion name to `benefit`/`cost`.
fn directions_from_sidecar(text: &str, names: &[String]) -> CliResult<Vec<Direction>> {
    let map: HashMap<String, Direction> = serde_json::from_str(text).map_err(Error::from)?;
    names
        .iter()
        .map(|n| {
            map.get(n)
                .copied()
                .ok_or_else(|| CliError::from(Error::UnknownCriterion(n.clone())))
        })
        .collect()
}

/// `preset:<service>`, `printed:<service>` (unnormalized published row),
/// `pairwise:<csv>` (eigenvector of a comparison matrix) or a weights file.
pub fn load_weights(source: &str) -> CliResult<WeightVector> {
    if let Some(name) = source.strip_prefix("preset:") {
        return Ok(msaw_core::preset_weights(name.parse::<Service>()?));
    }
    if let Some(name) = source.strip_prefix("printed:") {
        let s = name.parse::<Service>()?;
        return Ok(WeightVector::from_raw(s.printed_weights().to_vec())?);
    }
    if let Some(path) = source.strip_prefix("pairwise:") {
        let path = Path::new(path);
        let pm = PairwiseMatrix::parse_csv(&read_file(path)?)
            .map_err(|e| CliError::from(e).with_context(path.display()))?;
        let d = principal_eigenvector(&pm, DEFAULT_MAX_ITER, DEFAULT_TOL)?;
        return Ok(d.weights);
    }
    let path = Path::new(source);
    WeightVector::parse(&read_file(path)?).map_err(|e| CliError::from(e).with_context(path.display()))
}

pub fn parse_methods(s: &str) -> CliResult<Vec<Method>> {
    Ok(Method::parse_list(s)?)
}

pub fn parse_tie(s: &str) -> CliResult<TiePolicy> {
    Ok(s.parse()?)
}
