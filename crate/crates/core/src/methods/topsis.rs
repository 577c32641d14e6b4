//! TOPSIS with Euclidean vector normalization.

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Direction};
use crate::ranking::{Method, RankingResult};
use crate::weights::WeightVector;

pub fn rank_topsis(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<RankingResult> {
    let scores = closeness(matrix, weights)?;
    Ok(RankingResult::from_scores(
        Method::Topsis,
        matrix.alternatives(),
        &scores,
    ))
}

/// Relative closeness `d− / (d+ + d−)` of every alternative. An alternative
/// at distance 0 from both reference points (every column constant) gets 1.
pub fn closeness(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<Vec<f64>> {
    matrix.ensure_valid()?;
    weights.ensure_len(matrix.n_criteria())?;
    let n = matrix.n_alternatives();
    let m = matrix.n_criteria();

    let mut v = vec![vec![0.0; m]; n];
    let mut ideal = vec![0.0; m];
    let mut anti = vec![0.0; m];
    for (col, c) in matrix.criteria().iter().enumerate() {
        let norm = matrix.column(col).map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroNormColumn(col));
        }
        let w = weights.as_slice()[col];
        for (row, vr) in v.iter_mut().enumerate() {
            vr[col] = w * matrix.value(row, col) / norm;
        }
        let hi = v.iter().map(|r| r[col]).fold(f64::NEG_INFINITY, f64::max);
        let lo = v.iter().map(|r| r[col]).fold(f64::INFINITY, f64::min);
        (ideal[col], anti[col]) = match c.direction {
            Direction::Benefit => (hi, lo),
            Direction::Cost => (lo, hi),
        };
    }

    let dist = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    };
    Ok(v.iter()
        .map(|row| {
            let plus = dist(row, &ideal);
            let minus = dist(row, &anti);
            if plus + minus == 0.0 {
                1.0
            } else {
                minus / (plus + minus)
            }
        })
        .collect())
}
