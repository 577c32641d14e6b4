//! Multi-attribute ranking of candidate networks.
//!
//! The crate implements Modified-SAW, a rank-position variant of simple
//! additive weighting, alongside SAW, WPM, TOPSIS and AHP aggregation, plus
//! eigenvector weighting, a synthetic scenario generator and a rank-reversal
//! experiment harness.
//!
//! ```
//! use msaw_core::{preset_weights, table2_matrix, Method, RankOptions, Service};
//!
//! let result = Method::Msaw
//!     .rank(&table2_matrix(), &preset_weights(Service::Voip), &RankOptions::default())
//!     .unwrap();
//! assert_eq!(result.order[0], "N(3)");
//! ```

pub mod analysis;
pub mod eigen;
pub mod error;
pub mod matrix;
pub mod methods;
pub mod ranking;
pub mod reference;
pub mod report;
pub mod scenario;
pub mod weights;

pub use analysis::{
    agreement_report, kendall_tau, monte_carlo_reversal, perturbation_experiment,
    reversal_experiment, AgreementReport, MonteCarloConfig, MonteCarloReport, Perturbation,
    ReversalReport,
};
pub use eigen::{consistency_ratio, principal_eigenvector, PairwiseMatrix, WeightDerivation};
pub use error::{Error, Result};
pub use matrix::{CriterionSpec, DecisionMatrix, Direction, RawMatrix, Validation, Violation};
pub use methods::ahp::rank_ahp;
pub use methods::msaw::{rank_msaw, MsawIncomeBreakdown};
pub use methods::saw::rank_saw;
pub use methods::topsis::rank_topsis;
pub use methods::wpm::rank_wpm;
pub use ranking::{Method, RankOptions, RankingResult, TiePolicy, SCORE_TIE_TOLERANCE};
pub use scenario::{
    energy_consumption, generate_matrix, table2_matrix, EnergyCoeffs, RatProfile, ScenarioSpec,
};
pub use weights::{preset_weights, Service, WeightVector};
