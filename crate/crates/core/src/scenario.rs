//! Synthetic network-selection matrices and the fixed test matrix.
//!
//! Random draws use ChaCha8 seeded through `SeedableRng::seed_from_u64`
//! (rand_core 0.9). Uniform reals are produced here rather than through
//! `rand` distributions: the top 53 bits of `next_u64` are scaled to [0, 1)
//! and mapped affinely onto the range. Streams are therefore identical on
//! every platform for a given seed.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{
    CriterionSpec, DecisionMatrix, NETWORK_CRITERIA, NETWORK_DIRECTIONS, NETWORK_UNITS,
};

/// Example scenario config: the three radio access technologies with
/// illustrative energy coefficients.
pub const EXAMPLE_SCENARIO_JSON: &str = include_str!("../data/network_scenario.json");

/// Linear power model coefficients: `P = alpha_u·th_u + alpha_d·th_d + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyCoeffs {
    /// mJ/s per Mbps of uplink throughput.
    pub alpha_u: f64,
    /// mJ/s per Mbps of downlink throughput.
    pub alpha_d: f64,
    /// Baseline mJ/s.
    pub beta: f64,
}

/// Power drawn in mJ/s for the given uplink and downlink throughput (Mbps).
pub fn energy_consumption(th_u: f64, th_d: f64, coeffs: &EnergyCoeffs) -> Result<f64> {
    for (v, what) in [
        (th_u, "uplink throughput"),
        (th_d, "downlink throughput"),
        (coeffs.alpha_u, "alpha_u"),
        (coeffs.alpha_d, "alpha_d"),
        (coeffs.beta, "beta"),
    ] {
        if !(v >= 0.0) {
            return Err(Error::NegativeInput(what));
        }
    }
    Ok(coeffs.alpha_u * th_u + coeffs.alpha_d * th_d + coeffs.beta)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatProfile {
    pub name: String,
    /// Mbps.
    pub bandwidth: [f64; 2],
    /// ms.
    pub delay: [f64; 2],
    /// Percent.
    pub plr: [f64; 2],
    pub cost_level: f64,
    pub energy: EnergyCoeffs,
}

fn default_uplink_fraction() -> f64 {
    0.1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub profiles: Vec<RatProfile>,
    pub instances_per_profile: usize,
    pub seed: u64,
    /// Share of the drawn bandwidth counted as uplink throughput.
    #[serde(default = "default_uplink_fraction")]
    pub uplink_fraction: f64,
}

impl ScenarioSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn example() -> Self {
        Self::from_json(EXAMPLE_SCENARIO_JSON).expect("bundled scenario parses")
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidScenario(msg));
        if self.profiles.is_empty() {
            return bad("at least one profile is required".into());
        }
        if self.instances_per_profile == 0 {
            return bad("instances_per_profile must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.uplink_fraction) {
            return bad(format!(
                "uplink_fraction {} is outside [0, 1]",
                self.uplink_fraction
            ));
        }
        for (i, p) in self.profiles.iter().enumerate() {
            for (field, [lo, hi]) in [
                ("bandwidth", p.bandwidth),
                ("delay", p.delay),
                ("plr", p.plr),
            ] {
                if !lo.is_finite() || !hi.is_finite() || lo < 0.0 {
                    return bad(format!(
                        "profiles[{i}].{field}: bounds [{lo}, {hi}] must be finite and nonnegative"
                    ));
                }
                if lo > hi {
                    return bad(format!("profiles[{i}].{field}: lo {lo} > hi {hi}"));
                }
            }
            // Delay and PLR are cost criteria and must stay strictly positive.
            for (field, [lo, _]) in [("delay", p.delay), ("plr", p.plr)] {
                if lo <= 0.0 {
                    return bad(format!("profiles[{i}].{field}: lower bound must be > 0"));
                }
            }
            if !(p.cost_level.is_finite() && p.cost_level > 0.0) {
                return bad(format!("profiles[{i}].cost_level must be positive"));
            }
            let e = p.energy;
            if [e.alpha_u, e.alpha_d, e.beta]
                .iter()
                .any(|x| !(x.is_finite() && *x >= 0.0))
            {
                return bad(format!(
                    "profiles[{i}].energy: coefficients must be finite and nonnegative"
                ));
            }
            let lo = p.bandwidth[0];
            let min_energy = energy_consumption(
                lo * self.uplink_fraction,
                lo * (1.0 - self.uplink_fraction),
                &e,
            )?;
            // Energy is a cost criterion, so it must stay strictly positive.
            if min_energy <= 0.0 {
                return bad(format!(
                    "profiles[{i}].energy: power at the lowest bandwidth is 0"
                ));
            }
        }
        Ok(())
    }
}

fn uniform(rng: &mut ChaCha8Rng, [lo, hi]: [f64; 2]) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    (lo + (hi - lo) * u).min(hi)
}

/// Draws one row per profile instance, labelled `N(0)`, `N(1)`, ... in
/// profile order. Per row the draw order is bandwidth, delay, PLR.
pub fn generate_matrix(spec: &ScenarioSpec) -> Result<DecisionMatrix> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut alternatives = Vec::new();
    let mut values = Vec::new();
    for p in &spec.profiles {
        for _ in 0..spec.instances_per_profile {
            let bw = uniform(&mut rng, p.bandwidth);
            let delay = uniform(&mut rng, p.delay);
            let plr = uniform(&mut rng, p.plr);
            let up = bw * spec.uplink_fraction;
            let energy = energy_consumption(up, bw - up, &p.energy)?;
            alternatives.push(format!("N({})", alternatives.len()));
            values.push(vec![bw, delay, plr, energy, p.cost_level]);
        }
    }
    DecisionMatrix::try_new(alternatives, network_criteria(), values)
}

fn network_criteria() -> Vec<CriterionSpec> {
    NETWORK_CRITERIA
        .iter()
        .zip(NETWORK_DIRECTIONS)
        .zip(NETWORK_UNITS)
        .map(|((name, d), unit)| CriterionSpec::new(*name, d).with_unit(unit))
        .collect()
}

/// The fixed 6×5 network test matrix.
pub fn table2_matrix() -> DecisionMatrix {
    let values = vec![
        vec![1.730, 105.85, 7.94, 1.00, 0.2],
        vec![5.076, 134.88, 6.70, 2.6, 0.2],
        vec![6.849, 43.98, 2.84, 6.26, 1.0],
        vec![6.329, 32.15, 3.05, 5.86, 1.0],
        vec![66.66, 95.15, 6.32, 12.78, 0.4],
        vec![62.5, 99.73, 5.80, 10.28, 0.4],
    ];
    DecisionMatrix::new(
        (0..6).map(|i| format!("N({i})")).collect(),
        network_criteria(),
        values,
    )
}
