//! Simple additive weighting over the max-normalized matrix.

use crate::error::Result;
use crate::matrix::DecisionMatrix;
use crate::ranking::{Method, RankingResult};
use crate::weights::WeightVector;

pub fn rank_saw(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<RankingResult> {
    weights.ensure_len(matrix.n_criteria())?;
    let r = matrix.normalize()?;
    let scores: Vec<f64> = r
        .iter()
        .map(|row| row.iter().zip(weights.as_slice()).map(|(x, w)| x * w).sum())
        .collect();
    Ok(RankingResult::from_scores(
        Method::Saw,
        matrix.alternatives(),
        &scores,
    ))
}
