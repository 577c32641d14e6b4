//! Weighted product model: `Π r_ij ^ w_j` over the max-normalized matrix.

use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;
use crate::ranking::{Method, RankingResult};
use crate::weights::WeightVector;

pub fn rank_wpm(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<RankingResult> {
    let r = normalized_positive(matrix, weights)?;
    let scores: Vec<f64> = r
        .iter()
        .map(|row| {
            row.iter()
                .zip(weights.as_slice())
                .map(|(x, w)| x.powf(*w))
                .product()
        })
        .collect();
    Ok(RankingResult::from_scores(
        Method::Wpm,
        matrix.alternatives(),
        &scores,
    ))
}

/// `ln` of the WPM score, `Σ w_j ln r_ij`.
pub fn wpm_log_scores(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<Vec<f64>> {
    let r = normalized_positive(matrix, weights)?;
    Ok(r.iter()
        .map(|row| {
            row.iter()
                .zip(weights.as_slice())
                .map(|(x, w)| w * x.ln())
                .sum()
        })
        .collect())
}

fn normalized_positive(matrix: &DecisionMatrix, weights: &WeightVector) -> Result<Vec<Vec<f64>>> {
    weights.ensure_len(matrix.n_criteria())?;
    matrix.ensure_valid()?;
    for (row, r) in matrix.rows().iter().enumerate() {
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, v)| **v <= 0.0) {
            return Err(Error::NonPositiveValue { row, col, value });
        }
    }
    matrix.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CriterionSpec;

    fn two_by_one(a: f64, b: f64) -> DecisionMatrix {
        DecisionMatrix::try_new(
            vec!["a".into(), "b".into()],
            vec![CriterionSpec::benefit("x")],
            vec![vec![a], vec![b]],
        )
        .unwrap()
    }

    #[test]
    fn two_by_one_scores() {
        let r = rank_wpm(&two_by_one(2.0, 4.0), &WeightVector::uniform(1).unwrap()).unwrap();
        assert_eq!(r.score_values(), [0.5, 1.0]);
    }

    #[test]
    fn best_everywhere_scores_one() {
        let m = DecisionMatrix::try_new(
            vec!["a".into(), "b".into()],
            vec![CriterionSpec::benefit("x"), CriterionSpec::cost("y")],
            vec![vec![3.0, 1.0], vec![2.0, 2.0]],
        )
        .unwrap();
        let r = rank_wpm(&m, &WeightVector::new(vec![0.5, 0.5]).unwrap()).unwrap();
        assert_eq!(r.score_of("a"), Some(1.0));
        assert_eq!(r.order[0], "a");
    }

    #[test]
    fn zero_benefit_value_is_rejected() {
        let err = rank_wpm(&two_by_one(0.0, 4.0), &WeightVector::uniform(1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NonPositiveValue { row: 0, col: 0, .. }));
    }
}
