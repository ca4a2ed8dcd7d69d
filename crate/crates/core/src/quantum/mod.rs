//! Exact statevector simulation for a handful of qubits.
//!
//! Qubit 0 is the leftmost ket and the most significant bit of a basis index,
//! so `|0>|1>` is basis index `0b01`.

mod oracle;
mod state;

use thiserror::Error;

pub use oracle::{apply_instruction, oracle_apply, BooleanFunction, Instruction, QueryCounter};
pub use state::{equal_up_to_global_phase, StateVector, MAX_QUBITS, NORM_TOL, PHASE_TOL};

use crate::gate::GateError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("empty bit string")]
    EmptyBits,
    #[error("invalid bit `{0}` (expected 0 or 1)")]
    InvalidBit(char),
    #[error("{0} qubits exceeds the simulator limit of {MAX_QUBITS}")]
    TooManyQubits(usize),
    #[error("amplitude vector of length {0} is not a power of two >= 2")]
    BadLength(usize),
    #[error("state is not normalized (norm squared {0})")]
    NotNormalized(f64),
    #[error("dimension mismatch: expected {expected} qubit(s), found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("truth table of length {0} is not 2^n for n >= 1")]
    TableLength(usize),
    #[error("phase factor has modulus {0}, expected 1")]
    NotAPhase(f64),
    #[error(transparent)]
    Gate(#[from] GateError),
}
