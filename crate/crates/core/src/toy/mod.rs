//! The epistemic toy model for one and two elementary systems.
//!
//! Each elementary system has four ontic states, labelled 1..=4. Index `i`
//! carries two classical bits `(z, x)` with `i = 1 + 2z + x`, so
//!
//! | index | z | x |
//! |-------|---|---|
//! | 1     | 0 | 0 |
//! | 2     | 0 | 1 |
//! | 3     | 1 | 0 |
//! | 4     | 1 | 1 |
//!
//! An epistemic state of maximal knowledge is a uniform distribution over a
//! support of two cells (one system) or four cells (two systems). Gates are
//! permutations of the cells, described as bit updates on `(z, x)`.

mod ontic;
mod permutation;
mod render;
mod state;

use thiserror::Error;

pub use ontic::{OnticCell, OnticIndex};
pub use permutation::{
    compose, toy_gate, toy_two_qubit_gate, SingleGate, ToyPermutation, TwoQubitGate,
};
pub use render::render_grid;
pub use state::{is_valid_epistemic, EpistemicState, NamedToyState};

use crate::gate::GateError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToyError {
    #[error("ontic index {0} out of range 1..=4")]
    InvalidOnticIndex(u8),
    #[error("toy model supports 1 or 2 systems, got {0}")]
    UnsupportedSystems(usize),
    #[error("target system {target} out of range for {n_systems} system(s)")]
    InvalidTarget { target: usize, n_systems: usize },
    #[error("control and target must differ (both {0})")]
    SameControlTarget(usize),
    #[error("dimension mismatch: expected {expected} system(s), found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a valid epistemic state: {0}")]
    InvalidState(String),
    #[error("cell map is not a bijection")]
    NotABijection,
    #[error("unknown state label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Gate(#[from] GateError),
}
