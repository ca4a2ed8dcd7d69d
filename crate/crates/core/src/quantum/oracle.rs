use std::fmt;

use super::state::parse_bits;
use super::{QuantumError, StateVector};
use crate::gate::Gate;

/// `f : {0,1}^n -> {0,1}` as a truth table, `f(0)` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n_inputs: usize,
    table: Vec<bool>,
}

impl BooleanFunction {
    pub fn from_table(table: Vec<bool>) -> Result<Self, QuantumError> {
        let len = table.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(QuantumError::TableLength(len));
        }
        Ok(BooleanFunction {
            n_inputs: len.trailing_zeros() as usize,
            table,
        })
    }

    /// Parses a table such as `"0110"`.
    pub fn from_bit_str(bits: &str) -> Result<Self, QuantumError> {
        Self::from_table(parse_bits(bits)?)
    }

    pub fn from_fn(n_inputs: usize, f: impl Fn(usize) -> bool) -> Result<Self, QuantumError> {
        if n_inputs == 0 || n_inputs >= super::MAX_QUBITS {
            return Err(QuantumError::TableLength(
                1usize.checked_shl(n_inputs as u32).unwrap_or(0),
            ));
        }
        Self::from_table((0..1usize << n_inputs).map(f).collect())
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn eval(&self, x: usize) -> bool {
        self.table[x]
    }

    pub fn count_ones(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.table {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Number of oracle calls made during one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryCounter(u32);

impl QueryCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u32 {
        self.0
    }

    pub(crate) fn record(&mut self) {
        self.0 += 1;
    }
}

/// `U_f |x>|y> = |x>|f(x) xor y>` on a register of `f.n_inputs()` qubits
/// followed by one ancilla. Applied as a basis permutation; each call counts
/// as one query.
pub fn oracle_apply(
    state: &StateVector,
    f: &BooleanFunction,
    counter: &mut QueryCounter,
) -> Result<StateVector, QuantumError> {
    let expected = f.n_inputs + 1;
    if state.n_qubits() != expected {
        return Err(QuantumError::DimensionMismatch {
            expected,
            found: state.n_qubits(),
        });
    }
    let src = state.amplitudes();
    let mut out = src.to_vec();
    for (i, amp) in src.iter().enumerate() {
        let x = i >> 1;
        out[i ^ f.eval(x) as usize] = *amp;
    }
    counter.record();
    Ok(StateVector::from_amplitudes(out).expect("permutation keeps the norm"))
}

/// One step of a circuit on the quantum layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instruction {
    Gate(Gate),
    Oracle(BooleanFunction),
}

pub fn apply_instruction(
    state: &StateVector,
    instruction: &Instruction,
    counter: &mut QueryCounter,
) -> Result<StateVector, QuantumError> {
    match instruction {
        Instruction::Gate(g) => state.apply_gate(g),
        Instruction::Oracle(f) => oracle_apply(state, f, counter),
    }
}
