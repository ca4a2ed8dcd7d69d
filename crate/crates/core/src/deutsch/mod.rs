//! The Deutsch and Deutsch-Jozsa algorithms on the quantum and toy layers.
//!
//! The circuit is always the full one: prepare `|0...0>|1>`, Hadamard every
//! wire, query the oracle once, Hadamard the register, read the register.
//! The traces hold four snapshots, `psi0` to `psi3`, one per stage.

mod concordance;
mod oracle;
mod run;

use thiserror::Error;

pub use concordance::{
    concordance_check, concordance_check_bounded, to_dyadic, ConcordanceReport,
    DEFAULT_MAX_CIRCUIT_LEN, DYADIC_TOL,
};
pub use oracle::{
    build_oracle_circuit, classical_query_bound, classify_truth_table, FunctionClass,
    OracleCircuit, OracleKind,
};
pub use run::{run_quantum_deutsch, run_toy_deutsch, Layer, RunReport, Step, StepState, Verdict};

use crate::gate::GateError;
use crate::quantum::QuantumError;
use crate::toy::ToyError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RunError {
    #[error("truth table {table} is neither constant nor balanced")]
    PromiseViolation { table: String },
    #[error("unknown oracle label `{0}` (expected f0, f1, fx or fxbar)")]
    UnknownOracle(String),
    #[error("register size must be at least 1, got {0}")]
    InvalidRegisterSize(u32),
    #[error("layers support 1 or 2 qubits, got {0}")]
    UnsupportedWidth(usize),
    #[error("circuit has {len} gates, bound is {max}")]
    CircuitTooLong { len: usize, max: usize },
    #[error("final register state does not decide the promise: {0}")]
    Indeterminate(String),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error(transparent)]
    Toy(#[from] ToyError),
    #[error(transparent)]
    Gate(#[from] GateError),
}
