//! Workloads shared by the benchmarks.

use msaw_core::{generate_matrix, DecisionMatrix, ScenarioSpec, WeightVector};

/// A generated matrix with `per_profile` instances of each example profile.
pub fn scenario_matrix(per_profile: usize, seed: u64) -> DecisionMatrix {
    let mut spec = ScenarioSpec::example().with_seed(seed);
    spec.instances_per_profile = per_profile;
    generate_matrix(&spec).expect("example scenario is valid")
}

pub fn uniform_weights(m: usize) -> WeightVector {
    WeightVector::uniform(m).expect("m > 0")
}
