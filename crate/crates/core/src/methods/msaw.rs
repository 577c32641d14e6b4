//! Modified-SAW: rank positions instead of normalized values.
//!
//! Each criterion column is sorted best-first (descending for benefit,
//! ascending for cost). The alternative at position `k` earns
//! `(alpha - k) * w[j]` on that criterion, and its total score is the sum of
//! those incomes. Only the per-column order of raw values matters, so any
//! strictly monotone rescaling of a column leaves the scores untouched.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Direction};
use crate::ranking::{Method, RankingResult, TiePolicy};
use crate::weights::WeightVector;

/// Per-criterion detail behind an M-SAW ranking. Indexed `[alternative][criterion]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MsawIncomeBreakdown {
    pub alpha: u64,
    pub tie: TiePolicy,
    /// Sort position in each column before tie averaging (0 = best).
    pub positions: Vec<Vec<usize>>,
    /// Rank used in the income formula; equals `positions` under
    /// [`TiePolicy::StableIndex`], the tie-group mean under [`TiePolicy::MeanRank`].
    pub ranks: Vec<Vec<f64>>,
    pub incomes: Vec<Vec<f64>>,
}

/// Best-first row order for one column; equal values keep row order.
fn column_order(matrix: &DecisionMatrix, col: usize) -> Vec<usize> {
    let dir = matrix.criteria()[col].direction;
    let mut idx: Vec<usize> = (0..matrix.n_alternatives()).collect();
    idx.sort_by(|&a, &b| {
        let (x, y) = (matrix.value(a, col), matrix.value(b, col));
        let ord = match dir {
            Direction::Benefit => y.total_cmp(&x),
            Direction::Cost => x.total_cmp(&y),
        };
        ord.then(a.cmp(&b))
    });
    idx
}

pub fn rank_msaw(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    tie: TiePolicy,
    alpha: Option<u64>,
) -> Result<(RankingResult, MsawIncomeBreakdown)> {
    matrix.ensure_valid()?;
    weights.ensure_len(matrix.n_criteria())?;
    let n = matrix.n_alternatives();
    let m = matrix.n_criteria();
    let alpha = alpha.unwrap_or(n as u64);
    if alpha < n as u64 {
        return Err(Error::InvalidAlpha { alpha, n });
    }

    let mut positions = vec![vec![0usize; m]; n];
    let mut ranks = vec![vec![0.0; m]; n];
    let mut incomes = vec![vec![0.0; m]; n];
    for (col, &w) in weights.as_slice().iter().enumerate() {
        let order = column_order(matrix, col);
        for (k, &row) in order.iter().enumerate() {
            positions[row][col] = k;
            ranks[row][col] = k as f64;
        }
        if tie == TiePolicy::MeanRank {
            let mut start = 0;
            while start < n {
                let v = matrix.value(order[start], col);
                let mut end = start + 1;
                while end < n && matrix.value(order[end], col) == v {
                    end += 1;
                }
                if end - start > 1 {
                    let mean = (start + end - 1) as f64 / 2.0;
                    for &row in &order[start..end] {
                        ranks[row][col] = mean;
                    }
                }
                start = end;
            }
        }
        for row in 0..n {
            incomes[row][col] = (alpha as f64 - ranks[row][col]) * w;
        }
    }

    let scores: Vec<f64> = incomes.iter().map(|r| r.iter().sum()).collect();
    let result = RankingResult::from_scores(Method::Msaw, matrix.alternatives(), &scores);
    Ok((
        result,
        MsawIncomeBreakdown {
            alpha,
            tie,
            positions,
            ranks,
            incomes,
        },
    ))
}
