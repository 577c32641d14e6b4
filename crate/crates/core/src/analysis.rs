//! Rank-reversal experiments and cross-method agreement.
//!
//! A reversal experiment ranks a matrix, perturbs it (drops a row or appends
//! a copy of one), ranks again and compares the surviving alternatives'
//! relative order against the baseline.

use std::collections::{HashMap, HashSet};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;
use crate::ranking::{Method, RankOptions, RankingResult};
use crate::scenario::{generate_matrix, ScenarioSpec};
use crate::weights::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Perturbation {
    Drop { label: String },
    Duplicate { label: String, copy_label: String },
}

impl Perturbation {
    pub fn drop(label: impl Into<String>) -> Self {
        Perturbation::Drop {
            label: label.into(),
        }
    }

    /// Duplicates `label` under the label `<label>'`.
    pub fn duplicate(label: impl Into<String>) -> Self {
        let label = label.into();
        Perturbation::Duplicate {
            copy_label: format!("{label}'"),
            label,
        }
    }

    fn apply(&self, matrix: &DecisionMatrix) -> Result<DecisionMatrix> {
        match self {
            Perturbation::Drop { label } => matrix.drop_alternative(label),
            Perturbation::Duplicate { label, copy_label } => {
                matrix.duplicate_alternative(label, copy_label)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReversalReport {
    pub method: Method,
    pub perturbation: Perturbation,
    pub baseline_order: Vec<String>,
    /// Order after the perturbation. For duplication this omits the copy.
    pub reduced_order: Vec<String>,
    /// `baseline_order` with the dropped alternative removed.
    pub expected_order: Vec<String>,
    pub reversed: bool,
    /// Pairs `(a, b)` where `a` preceded `b` in `expected_order` but follows
    /// it in `reduced_order`.
    pub flips: Vec<(String, String)>,
}

impl ReversalReport {
    /// Label of the removed alternative, if the perturbation was a drop.
    pub fn removed(&self) -> Option<&str> {
        match &self.perturbation {
            Perturbation::Drop { label } => Some(label),
            Perturbation::Duplicate { .. } => None,
        }
    }
}

/// Pairs ordered one way in `expected` and the other way in `actual`. Both
/// slices must hold the same labels.
pub fn flipped_pairs(expected: &[String], actual: &[String]) -> Vec<(String, String)> {
    let pos: HashMap<&str, usize> = actual
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut flips = Vec::new();
    for (i, a) in expected.iter().enumerate() {
        for b in &expected[i + 1..] {
            if pos[a.as_str()] > pos[b.as_str()] {
                flips.push((a.clone(), b.clone()));
            }
        }
    }
    flips
}

pub fn perturbation_experiment(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    method: Method,
    opts: &RankOptions,
    perturbation: Perturbation,
) -> Result<ReversalReport> {
    let baseline = method.rank(matrix, weights, opts)?;
    let perturbed = perturbation.apply(matrix)?;
    let after = method.rank(&perturbed, weights, opts)?;

    let (expected_order, reduced_order) = match &perturbation {
        Perturbation::Drop { label } => (
            baseline
                .order
                .iter()
                .filter(|l| *l != label)
                .cloned()
                .collect::<Vec<_>>(),
            after.order,
        ),
        Perturbation::Duplicate { copy_label, .. } => (
            baseline.order.clone(),
            after
                .order
                .into_iter()
                .filter(|l| l != copy_label)
                .collect(),
        ),
    };
    let flips = flipped_pairs(&expected_order, &reduced_order);
    Ok(ReversalReport {
        method,
        perturbation,
        baseline_order: baseline.order,
        reversed: !flips.is_empty(),
        reduced_order,
        expected_order,
        flips,
    })
}

/// Ranks `matrix`, drops `removed`, ranks again and reports flipped pairs.
pub fn reversal_experiment(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    method: Method,
    opts: &RankOptions,
    removed: &str,
) -> Result<ReversalReport> {
    perturbation_experiment(matrix, weights, method, opts, Perturbation::drop(removed))
}

/// Kendall rank correlation between two strict orders of the same labels:
/// `(concordant − discordant) / (n(n−1)/2)`. Orders with fewer than two
/// labels correlate perfectly by convention.
pub fn kendall_tau<S: AsRef<str>>(order_a: &[S], order_b: &[S]) -> Result<f64> {
    let a: Vec<&str> = order_a.iter().map(AsRef::as_ref).collect();
    let b: Vec<&str> = order_b.iter().map(AsRef::as_ref).collect();
    let set_a: HashSet<&str> = a.iter().copied().collect();
    let set_b: HashSet<&str> = b.iter().copied().collect();
    if set_a.len() != a.len() || set_b.len() != b.len() {
        return Err(Error::LabelMismatch("orders contain repeated labels".into()));
    }
    if set_a != set_b {
        let mut only: Vec<&str> = set_a.symmetric_difference(&set_b).copied().collect();
        only.sort_unstable();
        return Err(Error::LabelMismatch(format!(
            "labels present in only one order: {}",
            only.join(", ")
        )));
    }
    let n = a.len();
    if n < 2 {
        return Ok(1.0);
    }
    let pos_b: HashMap<&str, usize> = b.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let ranks: Vec<usize> = a.iter().map(|l| pos_b[l]).collect();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            if ranks[i] < ranks[j] {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok((concordant - discordant) as f64 / pairs)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgreementReport {
    pub methods: Vec<Method>,
    pub rankings: Vec<RankingResult>,
    /// `tau[i][j]` compares `rankings[i]` with `rankings[j]`.
    pub tau: Vec<Vec<f64>>,
}

pub fn agreement_report(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    methods: &[Method],
    opts: &RankOptions,
) -> Result<AgreementReport> {
    let rankings = methods
        .iter()
        .map(|m| m.rank(matrix, weights, opts))
        .collect::<Result<Vec<_>>>()?;
    let tau = rankings
        .iter()
        .map(|a| {
            rankings
                .iter()
                .map(|b| kendall_tau(&a.order, &b.order))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AgreementReport {
        methods: methods.to_vec(),
        rankings,
        tau,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonteCarloConfig {
    pub trials: usize,
    pub seed: u64,
    /// The scenario's own seed is replaced per trial.
    pub scenario: ScenarioSpec,
    pub weights: WeightVector,
    pub methods: Vec<Method>,
    pub tie: crate::ranking::TiePolicy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodReversalStats {
    pub method: Method,
    pub trials: usize,
    pub reversals: usize,
    pub frequency: f64,
    pub total_flips: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonteCarloReport {
    pub trials: usize,
    pub seed: u64,
    pub alternatives_per_trial: usize,
    pub methods: Vec<MethodReversalStats>,
}

/// Seed of trial `index`: a SplitMix64 finalizer over `base + index·γ`.
pub fn trial_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random matrices, random single-row removals, reversal counts per method.
/// Trials run in parallel; the aggregate does not depend on scheduling.
pub fn monte_carlo_reversal(cfg: &MonteCarloConfig) -> Result<MonteCarloReport> {
    cfg.scenario.validate()?;
    if cfg.methods.is_empty() {
        return Err(Error::UnknownMethod(String::new()));
    }
    let n = cfg.scenario.profiles.len() * cfg.scenario.instances_per_profile;
    if n < 2 {
        return Err(Error::InvalidScenario(
            "reversal trials need at least two alternatives".into(),
        ));
    }
    let opts = RankOptions {
        tie: cfg.tie,
        alpha: None,
    };

    let per_trial: Vec<Vec<usize>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let seed = trial_seed(cfg.seed, t as u64);
            let matrix = generate_matrix(&cfg.scenario.clone().with_seed(seed))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA5A5_A5A5_A5A5_A5A5);
            let removed = &matrix.alternatives()[(rng.next_u64() % n as u64) as usize];
            cfg.methods
                .iter()
                .map(|&m| {
                    reversal_experiment(&matrix, &cfg.weights, m, &opts, removed)
                        .map(|r| r.flips.len())
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let methods = cfg
        .methods
        .iter()
        .enumerate()
        .map(|(k, &method)| {
            let reversals = per_trial.iter().filter(|t| t[k] > 0).count();
            MethodReversalStats {
                method,
                trials: cfg.trials,
                reversals,
                frequency: if cfg.trials == 0 {
                    0.0
                } else {
                    reversals as f64 / cfg.trials as f64
                },
                total_flips: per_trial.iter().map(|t| t[k]).sum(),
            }
        })
        .collect();
    Ok(MonteCarloReport {
        trials: cfg.trials,
        seed: cfg.seed,
        alternatives_per_trial: n,
        methods,
    })
}
