//! Entanglement swapping as a purification tool for polarization-entangled
//! photon pairs.
//!
//! Two independent sources each emit a partially entangled pair
//! cos(theta)|HH> + sin(theta)|VV>; a Bell-state measurement on one photon
//! from each pair projects the two photons that never met into a
//! conditional state. For equal input angles the Psi outcomes are exact
//! Bell pairs, and re-swapping the partially entangled Phi leftovers at
//! their residual angle converts, in the limit, a fraction
//! 2 min(cos^2 theta, sin^2 theta) of the ensemble: the same optimum a
//! single-pair Procrustean filter attains, reached here without ever
//! touching the shared photons locally.
//!
//! Modules: [`state`] holds the small state-vector algebra, [`measures`]
//! the entanglement quantities, [`protocol`] the single-swap analysis, and
//! [`ensemble`] the Monte Carlo and cascade machinery. [`tolerance`]
//! centralizes the numeric thresholds.
//!
//! The crate is `no_std`-compatible (with `alloc`): disable the default
//! `std` feature and enable `libm` for the scalar math.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod math;

pub mod ensemble;
pub mod measures;
pub mod protocol;
pub mod state;
pub mod tolerance;

pub use ensemble::{
    cascade_exact, cascade_exact_with_mode, cascade_sampled, cascade_sampled_with_mode,
    residual_angle, sample_swap, sample_swap_workers, CascadeLevel, CascadeReport, ClassStat,
    EnsembleConfig, EnsembleStats,
};
pub use measures::{
    entanglement_es, entropy_of_entanglement, is_bell, procrustean_yield, EntanglementValue,
};
pub use protocol::{
    apply_bsm_mode, make_phi, matching_analysis, swap_closed_form, swap_general, swap_oracle,
    theta_from_absorption, AngleError, BsmMode, ClassOutcome, MatchingReport, OutcomeClass,
    PhaseAngle, SwapOutcome, SwapResult,
};
pub use state::{
    bell_state, project_bell, schmidt, tensor, Amplitude, BellLabel, FourQubitState, Projection,
    SchmidtCut, SchmidtPair, StateError, TwoQubitState,
};
