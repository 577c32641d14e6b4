//! Criterion weights from pairwise comparison matrices.
//!
//! The principal eigenvector of a positive reciprocal matrix is found by
//! power iteration from the uniform start vector. The Perron root doubles as
//! the input of the consistency index.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::WeightVector;

pub const DEFAULT_MAX_ITER: usize = 1000;
pub const DEFAULT_TOL: f64 = 1e-12;

/// Reciprocity tolerance, relative to the larger of the two entries.
const RECIPROCAL_TOLERANCE: f64 = 1e-9;

/// Saaty's random consistency index for m = 1..=10.
const RANDOM_INDEX: [f64; 10] = [0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49];

/// Square matrix of positive reals with a unit diagonal and
/// `a[i][j] = 1 / a[j][i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairwiseMatrix(Vec<Vec<f64>>);

impl PairwiseMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidPairwise("empty matrix".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != m {
                return Err(Error::InvalidPairwise(format!(
                    "row {i} has {} entries, expected {m}",
                    r.len()
                )));
            }
            for (j, &a) in r.iter().enumerate() {
                if !a.is_finite() || a <= 0.0 {
                    return Err(Error::InvalidPairwise(format!(
                        "entry ({i}, {j}) = {a} is not a positive real"
                    )));
                }
            }
            if (r[i] - 1.0).abs() > RECIPROCAL_TOLERANCE {
                return Err(Error::InvalidPairwise(format!(
                    "diagonal entry ({i}, {i}) = {} is not 1",
                    r[i]
                )));
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = (rows[i][j], 1.0 / rows[j][i]);
                if (a - b).abs() > RECIPROCAL_TOLERANCE * a.max(b).max(1.0) {
                    return Err(Error::InvalidPairwise(format!(
                        "entries ({i}, {j}) = {a} and ({j}, {i}) = {} are not reciprocal",
                        rows[j][i]
                    )));
                }
            }
        }
        Ok(Self(rows))
    }

    /// The perfectly consistent matrix `a[i][j] = w[i] / w[j]`.
    pub fn consistent(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
            return Err(Error::InvalidPairwise(
                "weights must be strictly positive".into(),
            ));
        }
        Self::new(
            weights
                .iter()
                .map(|wi| weights.iter().map(|wj| wi / wj).collect())
                .collect(),
        )
    }

    /// Parses an m×m CSV grid. Cells may be decimals or fractions like `1/3`.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let cell = |s: &str| -> Result<f64> {
            let s = s.trim();
            let parsed = match s.split_once('/') {
                Some((a, b)) => a
                    .trim()
                    .parse::<f64>()
                    .and_then(|a| b.trim().parse::<f64>().map(|b| a / b)),
                None => s.parse::<f64>(),
            };
            parsed.map_err(|_| Error::Parse(format!("`{s}` is not a number or fraction")))
        };
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(cell).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.0
    }

    /// Element-wise reciprocal of the transpose: `b[i][j] = 1 / a[j][i]`.
    pub fn reciprocal_transpose(&self) -> Self {
        let m = self.size();
        Self(
            (0..m)
                .map(|i| (0..m).map(|j| 1.0 / self.0[j][i]).collect())
                .collect(),
        )
    }

    fn mul(&self, v: &[f64]) -> Vec<f64> {
        self.0
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightDerivation {
    pub weights: WeightVector,
    pub principal_eigenvalue: f64,
    pub consistency_ratio: f64,
    pub iterations: usize,
}

/// Power iteration with the uniform start vector.
pub fn principal_eigenvector(
    pm: &PairwiseMatrix,
    max_iter: usize,
    tol: f64,
) -> Result<WeightDerivation> {
    power_iterate(pm, vec![1.0 / pm.size() as f64; pm.size()], max_iter, tol)
}

/// Power iteration from an arbitrary positive start vector.
pub fn power_iterate(
    pm: &PairwiseMatrix,
    start: Vec<f64>,
    max_iter: usize,
    tol: f64,
) -> Result<WeightDerivation> {
    let m = pm.size();
    if max_iter == 0 {
        return Err(Error::InvalidPairwise("max_iter must be at least 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidPairwise("tolerance must be positive".into()));
    }
    if start.len() != m || start.iter().any(|x| !x.is_finite() || *x <= 0.0) {
        return Err(Error::InvalidPairwise(
            "start vector must be positive with one entry per criterion".into(),
        ));
    }

    let s: f64 = start.iter().sum();
    let mut w: Vec<f64> = start.into_iter().map(|x| x / s).collect();
    let mut residual = f64::INFINITY;
    for iter in 1..=max_iter {
        let mut next = pm.mul(&w);
        let s: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= s);
        residual = w
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        w = next;
        if residual < tol {
            let aw = pm.mul(&w);
            let lambda = aw.iter().zip(&w).map(|(a, x)| a / x).sum::<f64>() / m as f64;
            let weights = WeightVector::from_raw(w)?;
            return Ok(WeightDerivation {
                consistency_ratio: consistency_ratio(lambda, m),
                weights,
                principal_eigenvalue: lambda,
                iterations: iter,
            });
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        residual,
    })
}

/// Random consistency index for an m×m matrix. Sizes above 10 reuse the
/// m = 10 value.
pub fn random_index(m: usize) -> f64 {
    match m {
        0 => 0.0,
        m => RANDOM_INDEX[m.min(RANDOM_INDEX.len()) - 1],
    }
}

/// `CR = ((λ_max − m) / (m − 1)) / RI(m)`, defined as 0 for m ≤ 2. Rounding
/// noise that pushes λ_max slightly below m is clamped to 0.
pub fn consistency_ratio(principal_eigenvalue: f64, m: usize) -> f64 {
    if m <= 2 {
        return 0.0;
    }
    let ci = (principal_eigenvalue - m as f64) / (m as f64 - 1.0);
    (ci / random_index(m)).max(0.0)
}
