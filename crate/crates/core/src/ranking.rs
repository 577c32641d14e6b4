use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;
use crate::methods;
use crate::weights::WeightVector;

/// Absolute tolerance under which two scores count as tied.
pub const SCORE_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Msaw,
    Saw,
    Wpm,
    Topsis,
    Ahp,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Msaw,
        Method::Saw,
        Method::Wpm,
        Method::Topsis,
        Method::Ahp,
    ];

    /// Stable identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Method::Msaw => "msaw",
            Method::Saw => "saw",
            Method::Wpm => "wpm",
            Method::Topsis => "topsis",
            Method::Ahp => "ahp",
        }
    }

    pub fn rank(
        self,
        matrix: &DecisionMatrix,
        weights: &WeightVector,
        opts: &RankOptions,
    ) -> Result<RankingResult> {
        match self {
            Method::Msaw => methods::msaw::rank_msaw(matrix, weights, opts.tie, opts.alpha)
                .map(|(r, _)| r),
            Method::Saw => methods::saw::rank_saw(matrix, weights),
            Method::Wpm => methods::wpm::rank_wpm(matrix, weights),
            Method::Topsis => methods::topsis::rank_topsis(matrix, weights),
            Method::Ahp => methods::ahp::rank_ahp(matrix, weights),
        }
    }

    /// Parses a comma-separated list; `all` expands to every method.
    pub fn parse_list(s: &str) -> Result<Vec<Method>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(Method::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownMethod(s.to_owned()));
        }
        Ok(out)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "").as_str() {
            "msaw" => Ok(Method::Msaw),
            "saw" => Ok(Method::Saw),
            "wpm" => Ok(Method::Wpm),
            "topsis" => Ok(Method::Topsis),
            "ahp" => Ok(Method::Ahp),
            _ => Err(Error::UnknownMethod(s.to_owned())),
        }
    }
}

/// How M-SAW assigns positions to alternatives with equal raw values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TiePolicy {
    /// Earlier rows take the better position.
    StableIndex,
    /// Every tied alternative receives the mean of the positions the group spans.
    #[default]
    MeanRank,
}

impl FromStr for TiePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "stable" | "stableindex" => Ok(TiePolicy::StableIndex),
            "mean" | "meanrank" => Ok(TiePolicy::MeanRank),
            other => Err(Error::Parse(format!(
                "unknown tie policy `{other}` (expected stable or mean)"
            ))),
        }
    }
}

/// Options only M-SAW reads; the other methods ignore them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RankOptions {
    pub tie: TiePolicy,
    pub alpha: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedAlternative {
    pub alternative: String,
    pub score: f64,
}

/// Scores (higher is better) and the induced best-first order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingResult {
    pub method: Method,
    /// Alternatives in matrix order with their scores.
    pub scores: Vec<RankedAlternative>,
    /// Best first.
    pub order: Vec<String>,
    /// Groups of alternatives whose scores agree within
    /// [`SCORE_TIE_TOLERANCE`], in order of appearance.
    pub ties: Vec<Vec<String>>,
}

impl RankingResult {
    /// Sorts by descending score. Scores within [`SCORE_TIE_TOLERANCE`] of
    /// their neighbour form a tie group, ordered by matrix row.
    pub fn from_scores(method: Method, alternatives: &[String], scores: &[f64]) -> Self {
        debug_assert_eq!(alternatives.len(), scores.len());
        let mut idx: Vec<usize> = (0..scores.len()).collect();
        idx.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));

        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in idx {
            match groups.last_mut() {
                Some(g)
                    if (scores[*g.last().unwrap()] - scores[i]).abs() <= SCORE_TIE_TOLERANCE =>
                {
                    g.push(i)
                }
                _ => groups.push(vec![i]),
            }
        }
        for g in &mut groups {
            g.sort_unstable();
        }

        let label = |i: &usize| alternatives[*i].clone();
        Self {
            method,
            scores: alternatives
                .iter()
                .zip(scores)
                .map(|(a, &s)| RankedAlternative {
                    alternative: a.clone(),
                    score: s,
                })
                .collect(),
            order: groups.iter().flatten().map(label).collect(),
            ties: groups
                .iter()
                .filter(|g| g.len() > 1)
                .map(|g| g.iter().map(label).collect())
                .collect(),
        }
    }

    pub fn score_of(&self, label: &str) -> Option<f64> {
        self.scores
            .iter()
            .find(|r| r.alternative == label)
            .map(|r| r.score)
    }

    pub fn score_values(&self) -> Vec<f64> {
        self.scores.iter().map(|r| r.score).collect()
    }

    /// Zero-based position of `label` in [`RankingResult::order`].
    pub fn position(&self, label: &str) -> Option<usize> {
        self.order.iter().position(|a| a == label)
    }
}
