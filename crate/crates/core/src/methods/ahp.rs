//! AHP aggregation: weighted sum of per-criterion local priorities.
//!
//! Local priorities come from each column after direction adjustment
//! (`x` for benefit, `1/x` for cost), scaled to sum 1. The criterion weights
//! are usually the principal eigenvector of a pairwise comparison matrix,
//! see [`crate::eigen`].

use crate::error::Result;
use crate::matrix::{DecisionMatrix, Direction};
use crate::ranking::{Method, RankingResult};
use crate::weights::WeightVector;

pub fn local_priorities(matrix: &DecisionMatrix) -> Result<Vec<Vec<f64>>> {
    matrix.ensure_valid()?;
    let n = matrix.n_alternatives();
    let mut out = vec![vec![0.0; matrix.n_criteria()]; n];
    for (col, c) in matrix.criteria().iter().enumerate() {
        let adjusted: Vec<f64> = matrix
            .column(col)
            .map(|x| match c.direction {
                Direction::Benefit => x,
                Direction::Cost => 1.0 / x,
            })
            .collect();
        let total: f64 = adjusted.iter().sum();
        for (row, x) in adjusted.into_iter().enumerate() {
            out[row][col] = x / total;
        }
    }
    Ok(out)
}

pub fn rank_ahp(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<RankingResult> {
    weights.ensure_len(matrix.n_criteria())?;
    let p = local_priorities(matrix)?;
    let scores: Vec<f64> = p
        .iter()
        .map(|row| row.iter().zip(weights.as_slice()).map(|(x, w)| x * w).sum())
        .collect();
    Ok(RankingResult::from_scores(
        Method::Ahp,
        matrix.alternatives(),
        &scores,
    ))
}
