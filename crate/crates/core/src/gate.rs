//! The gate set shared by every layer.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GateError {
    #[error("unknown gate token `{0}` (expected one of H1 H2 X1 X2 Z1 Z2 CN12 CN21 CZ)")]
    UnknownToken(String),
    #[error("wire {wire} out of range for a {width}-wire circuit")]
    WireOutOfRange { wire: usize, width: usize },
    #[error("gate uses wire {0} twice")]
    RepeatedWire(usize),
}

/// A gate instance. Wires are zero-based and wire 0 is the leftmost ket, so
/// for a Deutsch circuit wire 0 is the register and the last wire the ancilla.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    Cnot {
        control: usize,
        target: usize,
    },
    /// Controlled-Z. Symmetric in its two wires.
    Cz(usize, usize),
}

impl Gate {
    /// Every gate instance on two wires. CZ appears once per wire order.
    pub const TWO_QUBIT_INSTANCES: [Gate; 10] = [
        Gate::H(0),
        Gate::H(1),
        Gate::X(0),
        Gate::X(1),
        Gate::Z(0),
        Gate::Z(1),
        Gate::Cnot {
            control: 0,
            target: 1,
        },
        Gate::Cnot {
            control: 1,
            target: 0,
        },
        Gate::Cz(0, 1),
        Gate::Cz(1, 0),
    ];

    pub fn wires(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Z(q) => vec![q],
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) => vec![a, b],
        }
    }

    /// Checks that the wires are distinct and below `width`.
    pub fn check_wires(&self, width: usize) -> Result<(), GateError> {
        let wires = self.wires();
        for &w in &wires {
            if w >= width {
                return Err(GateError::WireOutOfRange { wire: w, width });
            }
        }
        if wires.len() == 2 && wires[0] == wires[1] {
            return Err(GateError::RepeatedWire(wires[0]));
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::H(q) => write!(f, "H{}", q + 1),
            Gate::X(q) => write!(f, "X{}", q + 1),
            Gate::Z(q) => write!(f, "Z{}", q + 1),
            Gate::Cnot { control, target } => write!(f, "CN{}{}", control + 1, target + 1),
            Gate::Cz(a, b) if a.min(b) == 0 && a.max(b) == 1 => f.write_str("CZ"),
            Gate::Cz(a, b) => write!(f, "CZ{}{}", a + 1, b + 1),
        }
    }
}

impl FromStr for Gate {
    type Err = GateError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let gate = match token {
            "H1" => Gate::H(0),
            "H2" => Gate::H(1),
            "X1" => Gate::X(0),
            "X2" => Gate::X(1),
            "Z1" => Gate::Z(0),
            "Z2" => Gate::Z(1),
            "CN12" => Gate::Cnot {
                control: 0,
                target: 1,
            },
            "CN21" => Gate::Cnot {
                control: 1,
                target: 0,
            },
            "CZ" | "CZ12" => Gate::Cz(0, 1),
            "CZ21" => Gate::Cz(1, 0),
            other => return Err(GateError::UnknownToken(other.to_string())),
        };
        Ok(gate)
    }
}

/// Parses a whitespace-separated gate list such as `"H1 CN12 CZ"`.
/// An empty or blank string is the empty circuit.
pub fn parse_circuit(text: &str) -> Result<Vec<Gate>, GateError> {
    text.split_whitespace().map(str::parse).collect()
}

/// Renders a circuit in the same token syntax [`parse_circuit`] accepts.
pub fn format_circuit(gates: &[Gate]) -> String {
    gates
        .iter()
        .map(Gate::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for gate in Gate::TWO_QUBIT_INSTANCES {
            let text = gate.to_string();
            let back: Gate = text.parse().unwrap();
            // CZ is printed without wire order
            if let Gate::Cz(..) = gate {
                assert_eq!(back, Gate::Cz(0, 1));
            } else {
                assert_eq!(back, gate);
            }
        }
    }

    #[test]
    fn parse_lists() {
        assert_eq!(parse_circuit("").unwrap(), vec![]);
        assert_eq!(parse_circuit("   ").unwrap(), vec![]);
        assert_eq!(
            parse_circuit("X2  CN12\tH1").unwrap(),
            vec![
                Gate::X(1),
                Gate::Cnot {
                    control: 0,
                    target: 1
                },
                Gate::H(0)
            ]
        );
        assert_eq!(
            parse_circuit("H1 Y2"),
            Err(GateError::UnknownToken("Y2".into()))
        );
        assert_eq!(
            format_circuit(&parse_circuit("H1 CN21 CZ").unwrap()),
            "H1 CN21 CZ"
        );
    }

    #[test]
    fn wire_checks() {
        assert!(Gate::H(1).check_wires(2).is_ok());
        assert_eq!(
            Gate::H(2).check_wires(2),
            Err(GateError::WireOutOfRange { wire: 2, width: 2 })
        );
        assert_eq!(
            Gate::Cnot {
                control: 1,
                target: 1
            }
            .check_wires(2),
            Err(GateError::RepeatedWire(1))
        );
    }
}
