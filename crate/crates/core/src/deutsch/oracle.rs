use std::fmt;
use std::str::FromStr;

use super::RunError;
use crate::gate::Gate;
use crate::quantum::BooleanFunction;
use crate::toy::{ToyError, ToyPermutation};

/// The four one-bit functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleKind {
    /// f(x) = 0
    F0,
    /// f(x) = 1
    F1,
    /// f(x) = x
    Fx,
    /// f(x) = not x
    FxBar,
}

impl OracleKind {
    pub const ALL: [OracleKind; 4] = [
        OracleKind::F0,
        OracleKind::F1,
        OracleKind::Fx,
        OracleKind::FxBar,
    ];

    pub fn label(self) -> &'static str {
        match self {
            OracleKind::F0 => "f0",
            OracleKind::F1 => "f1",
            OracleKind::Fx => "fx",
            OracleKind::FxBar => "fxbar",
        }
    }

    pub fn truth_table(self) -> BooleanFunction {
        let table = match self {
            OracleKind::F0 => [false, false],
            OracleKind::F1 => [true, true],
            OracleKind::Fx => [false, true],
            OracleKind::FxBar => [true, false],
        };
        BooleanFunction::from_table(table.to_vec()).expect("two-entry table")
    }

    /// The label of a one-input function.
    pub fn from_function(f: &BooleanFunction) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.truth_table() == *f)
    }

    pub fn class(self) -> FunctionClass {
        classify_truth_table(&self.truth_table())
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for OracleKind {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| RunError::UnknownOracle(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionClass {
    Constant,
    Balanced,
    /// Violates the promise.
    Neither,
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FunctionClass::Constant => "constant",
            FunctionClass::Balanced => "balanced",
            FunctionClass::Neither => "neither",
        })
    }
}

pub fn classify_truth_table(f: &BooleanFunction) -> FunctionClass {
    let ones = f.count_ones();
    let len = f.table().len();
    if ones == 0 || ones == len {
        FunctionClass::Constant
    } else if 2 * ones == len {
        FunctionClass::Balanced
    } else {
        FunctionClass::Neither
    }
}

/// Worst-case number of classical evaluations needed to decide the promise
/// for `n` input bits: `2^(n-1) + 1`.
pub fn classical_query_bound(n: u32) -> Result<u64, RunError> {
    if n == 0 {
        return Err(RunError::InvalidRegisterSize(n));
    }
    1u64.checked_shl(n - 1)
        .and_then(|p| p.checked_add(1))
        .ok_or(RunError::InvalidRegisterSize(n))
}

/// Gate-level oracle for a one-bit register. Wire 0 is the register, wire 1
/// the ancilla.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCircuit {
    pub kind: OracleKind,
    pub gates: Vec<Gate>,
}

pub const REGISTER: usize = 0;
pub const ANCILLA: usize = 1;

pub fn build_oracle_circuit(kind: OracleKind) -> OracleCircuit {
    let cnot = Gate::Cnot {
        control: REGISTER,
        target: ANCILLA,
    };
    let gates = match kind {
        OracleKind::F0 => vec![],
        OracleKind::F1 => vec![Gate::X(ANCILLA)],
        OracleKind::Fx => vec![cnot],
        OracleKind::FxBar => vec![Gate::X(ANCILLA), cnot],
    };
    OracleCircuit { kind, gates }
}

impl OracleCircuit {
    pub fn toy_permutation(&self) -> Result<ToyPermutation, ToyError> {
        ToyPermutation::from_circuit(&self.gates, 2)
    }
}
