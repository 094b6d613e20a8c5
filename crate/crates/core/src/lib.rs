//! Relational encoding of a continuous parameter in a pure two-qubit state.
//!
//! Two parties that do not share a spatial reference frame cannot use the
//! collective orientation of a spin pair to communicate: averaging over all
//! relative frame orientations (collective SU(2) twirling) erases it. What
//! survives are three *relative* parameters of the state,
//!
//! ```text
//! |Ψ⟩ = e^{-iψ/2} cos α |m⟩|n⟩ + e^{+iψ/2} sin α |m⊥⟩|n⊥⟩
//! ```
//!
//! with `α ∈ [0, π/4]` fixing the entanglement, `θ ∈ [0, π]` the Bloch-sphere
//! angle between `m` and `n`, and `ψ ∈ [0, π]` a relative phase. This crate
//! provides
//!
//! * dense complex linear algebra at dimensions 2 and 4, Haar sampling on
//!   SU(2), and the usual gates ([`su2`]),
//! * the canonical three-parameter state, its frame invariants
//!   `ad − bc` and `b − c`, parameter extraction, and orbit comparison
//!   ([`relative`]),
//! * the collective twirling channel and singlet/triplet outcome statistics
//!   ([`twirl`]),
//! * Bayesian posteriors and average information gain for one encoded
//!   parameter under uniform or two-point priors ([`infogain`]),
//! * parameter sweeps, measurement sensitivities, and optimal-setting
//!   searches ([`scans`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature to use it in that mode. All types are immutable after
//! construction and all operations are pure functions; the only stateful
//! object is [`su2::RandomStream`], which each task should own exclusively
//! (derive child streams with [`su2::RandomStream::split`]).
//!
//! # Example
//!
//! A sender encodes one classical bit into the relative phase of a
//! maximally entangled pair with anti-aligned Schmidt partners; the
//! receiver's total-spin measurement then discriminates the two states
//! perfectly:
//!
//! ```
//! use core::f64::consts::{FRAC_PI_4, PI};
//! use relframe::{
//!     info_gain, p_outcomes_state, prepare_canonical, EncodingScheme, PriorModel,
//!     QuadratureConfig, RelativeParams,
//! };
//!
//! // ψ = 0 gives the singlet; ψ = π the symmetric triplet state.
//! let singlet = prepare_canonical(&RelativeParams::new(FRAC_PI_4, PI, 0.0)?);
//! assert!((p_outcomes_state(&singlet).p_singlet() - 1.0).abs() < 1e-12);
//!
//! let scheme = EncodingScheme::psi_encoding(FRAC_PI_4, PI)?;
//! let prior = PriorModel::two_point(0.0, PI, 0.5)?;
//! let result = info_gain(&scheme, &prior, &QuadratureConfig::default());
//! assert!((result.avg_gain - 1.0).abs() < 1e-12); // one full bit
//! # Ok::<(), relframe::Error>(())
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
// Fixed-size matrix kernels read better with explicit index loops.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod math;

pub mod error;
pub mod infogain;
pub mod relative;
pub mod scans;
pub mod su2;
pub mod twirl;

pub use error::{Error, Result};
pub use infogain::{
    info_gain, likelihood, posterior, EncodingScheme, InfoGainResult, Outcome, ParamKind,
    Posterior, PriorModel, QuadratureConfig, QuadratureRule,
};
pub use relative::{
    concurrence, extract_params, invariants_of, orbit_equal, prepare_canonical,
    prepare_via_circuit, schmidt_form, ExtractedParams, InvariantPair, RelativeParams, SchmidtForm,
};
pub use scans::{
    optimize_setting, scan1d, scan2d, sensitivity, table_one, OptimalSetting, PriorLabel,
    Scan2dResult, ScanGrid, ScanMetadata, ScanResult, TableEntry, TableOneReport,
};
pub use su2::{
    cnot, equal_up_to_phase, haar_su2, rotation_y, rotation_z, tensor, ComplexAmp, DensityMatrix4,
    Matrix2, Matrix4, RandomStream, StateVector2Q, Unitary2, Unitary4,
};
pub use twirl::{
    collective_conjugate, p_outcomes_state, p_singlet_closed, singlet_projector, triplet_projector,
    twirl_analytic, twirl_monte_carlo, twirl_sample_average, OutcomeProbs,
};
