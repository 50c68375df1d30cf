//! Simulation and analysis of few-level quantum systems coupled to finite,
//! banded environments.
//!
//! The crate builds composite models of a small system S (a handful of energy
//! levels) coupled to an environment E consisting of energy bands of
//! near-degenerate levels, with block-structured random-matrix interactions.
//! It provides:
//!
//! * exact unitary dynamics by dense Hermitian diagonalization
//!   ([`propagator`]),
//! * the reduced rate-equation dynamics for the band-resolved occupation
//!   variables `P_{ij,a}`, their discrete iteration map, and closed-form
//!   solutions for the three-band model ([`ham`]),
//! * validity diagnostics: environment correlation functions, golden-rule
//!   rate cross-checks, truncation horizons, Hilbert-space variance, and a
//!   brute-force verification of the second-order propagator trace identity
//!   ([`diagnostics`]).
//!
//! Units: `ħ = 1` and the energy unit `u = 1` throughout; times are in
//! `ħ/u`.

pub mod diagnostics;
pub mod ham;
pub mod interaction;
mod linalg;
pub mod model;
pub mod propagator;
pub mod rng;
#[cfg(test)]
pub(crate) mod testutil;

pub use model::{
    build_local_hamiltonian, classify_blocks, composite_projector, BandSpec, BasisLayout,
    BlockClass, CompositeProjector, CouplingBlockSpec, CouplingKind, ModelSpec, SystemSpec,
};

pub use interaction::{empirical_coupling, sample_interaction, InteractionMatrix};

pub use propagator::{
    diagonalize, diagonalize_with_cap, evolve, measure, sample_initial_state, EigenSystem, Engine,
    ObservableSet, Provenance, PureState, RecipeComponent, StateRecipe, Trajectory,
};

pub use ham::{
    closed_form_three_band, golden_rates, hilbert_average_state, integrate_rates, iterate_map,
    reduce_canonical, RateTable, ThreeBandParams,
};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// The model or an input violates a declared precondition.
    #[error("specification error: {0}")]
    Spec(String),
    /// A requested dense operation exceeds the configured dimension cap.
    #[error("dimension {dim} exceeds the cap of {cap}; reduce the band sizes or raise the cap explicitly")]
    DimensionCap { dim: usize, cap: usize },
    /// A reduction or fit whose validity conditions are not met.
    #[error("refused: {0}")]
    Refusal(String),
    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
