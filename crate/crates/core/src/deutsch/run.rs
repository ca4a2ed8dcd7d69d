use std::fmt;

use super::oracle::{build_oracle_circuit, classify_truth_table, FunctionClass, OracleKind};
use super::RunError;
use crate::gate::Gate;
use crate::quantum::{oracle_apply, BooleanFunction, QueryCounter, StateVector};
use crate::toy::{EpistemicState, NamedToyState, ToyPermutation};

const CERTAIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layer {
    Quantum,
    Toy,
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layer::Quantum => "quantum",
            Layer::Toy => "toy",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Constant,
    Balanced,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Constant => "constant",
            Verdict::Balanced => "balanced",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StepState {
    Quantum(StateVector),
    Toy(EpistemicState),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    /// `psi0` .. `psi3`.
    pub label: &'static str,
    pub state: StepState,
}

/// Outcome of one run: the state after each stage, the number of oracle
/// calls and the verdict read off the register.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub layer: Layer,
    pub steps: Vec<Step>,
    pub oracle_queries: u32,
    pub verdict: Verdict,
}

impl RunReport {
    pub fn final_state(&self) -> &StepState {
        &self.steps.last().expect("runs record every stage").state
    }

    /// The toy snapshots, or `None` for a quantum run.
    pub fn toy_states(&self) -> Option<Vec<&EpistemicState>> {
        self.steps
            .iter()
            .map(|s| match &s.state {
                StepState::Toy(t) => Some(t),
                StepState::Quantum(_) => None,
            })
            .collect()
    }
}

const LABELS: [&str; 4] = ["psi0", "psi1", "psi2", "psi3"];

/// Deutsch-Jozsa on `f.n_inputs()` register qubits plus one ancilla.
///
/// Fails with [`RunError::PromiseViolation`] when `f` is neither constant nor
/// balanced.
pub fn run_quantum_deutsch(f: &BooleanFunction) -> Result<RunReport, RunError> {
    if classify_truth_table(f) == FunctionClass::Neither {
        return Err(RunError::PromiseViolation {
            table: f.to_string(),
        });
    }
    let n = f.n_inputs();
    let mut bits = vec![false; n];
    bits.push(true);
    let mut counter = QueryCounter::new();

    let psi0 = StateVector::init_basis(&bits)?;
    let psi1 = (0..=n).try_fold(psi0.clone(), |s, q| s.apply_gate(&Gate::H(q)))?;
    let psi2 = oracle_apply(&psi1, f, &mut counter)?;
    let psi3 = (0..n).try_fold(psi2.clone(), |s, q| s.apply_gate(&Gate::H(q)))?;

    let register: Vec<usize> = (0..n).collect();
    let p_zero = psi3.z_distribution(&register)?[0];
    let verdict = if (p_zero - 1.0).abs() < CERTAIN {
        Verdict::Constant
    } else if p_zero < CERTAIN {
        Verdict::Balanced
    } else {
        return Err(RunError::Indeterminate(format!(
            "P(register = 0) = {p_zero}"
        )));
    };

    let steps = [psi0, psi1, psi2, psi3]
        .into_iter()
        .zip(LABELS)
        .map(|(s, label)| Step {
            label,
            state: StepState::Quantum(s),
        })
        .collect();
    Ok(RunReport {
        layer: Layer::Quantum,
        steps,
        oracle_queries: counter.count(),
        verdict,
    })
}

/// The toy-model Deutsch algorithm: start from zero (x) one, swap in the toy
/// permutation for every gate and read the register's support at the end.
pub fn run_toy_deutsch(kind: OracleKind) -> Result<RunReport, RunError> {
    let mut counter = QueryCounter::new();
    let oracle = build_oracle_circuit(kind).toy_permutation()?;
    let hadamards = ToyPermutation::from_circuit(&[Gate::H(0), Gate::H(1)], 2)?;
    let final_h = ToyPermutation::from_gate(&Gate::H(0), 2)?;

    let psi0 = EpistemicState::product(&[NamedToyState::Zero, NamedToyState::One]);
    let psi1 = hadamards.apply(&psi0)?;
    let psi2 = oracle.apply(&psi1)?;
    counter.record();
    let psi3 = final_h.apply(&psi2)?;

    let register = psi3.marginal(0);
    let verdict = match NamedToyState::from_support(&register) {
        Some(NamedToyState::Zero) => Verdict::Constant,
        Some(NamedToyState::One) => Verdict::Balanced,
        _ => {
            return Err(RunError::Indeterminate(format!(
                "register support {register:?}"
            )))
        }
    };

    let steps = [psi0, psi1, psi2, psi3]
        .into_iter()
        .zip(LABELS)
        .map(|(s, label)| Step {
            label,
            state: StepState::Toy(s),
        })
        .collect();
    Ok(RunReport {
        layer: Layer::Toy,
        steps,
        oracle_queries: counter.count(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::NamedToyState::*;

    fn quantum(bits: &str) -> RunReport {
        run_quantum_deutsch(&BooleanFunction::from_bit_str(bits).unwrap()).unwrap()
    }

    fn register_dist(report: &RunReport, n: usize) -> Vec<f64> {
        match report.final_state() {
            StepState::Quantum(s) => s.z_distribution(&(0..n).collect::<Vec<_>>()).unwrap(),
            StepState::Toy(_) => unreachable!(),
        }
    }

    #[test]
    fn quantum_one_bit() {
        let r = quantum("00");
        assert_eq!(r.verdict, Verdict::Constant);
        assert_eq!(r.oracle_queries, 1);
        assert!((register_dist(&r, 1)[0] - 1.0).abs() < 1e-12);
        assert_eq!(r.steps.len(), 4);

        let r = quantum("01");
        assert_eq!(r.verdict, Verdict::Balanced);
        assert!((register_dist(&r, 1)[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quantum_two_bit_balanced() {
        let r = quantum("0110");
        assert_eq!(r.verdict, Verdict::Balanced);
        assert!(register_dist(&r, 2)[0].abs() < 1e-12);
    }

    #[test]
    fn promise_violation_is_an_error() {
        let f = BooleanFunction::from_bit_str("1000").unwrap();
        assert_eq!(
            run_quantum_deutsch(&f),
            Err(RunError::PromiseViolation {
                table: "1000".into()
            })
        );
    }

    #[test]
    fn toy_traces() {
        let f0 = run_toy_deutsch(OracleKind::F0).unwrap();
        let f1 = run_toy_deutsch(OracleKind::F1).unwrap();
        let fx = run_toy_deutsch(OracleKind::Fx).unwrap();
        let fxbar = run_toy_deutsch(OracleKind::FxBar).unwrap();

        let last = |r: &RunReport| r.toy_states().unwrap()[3].clone();
        assert_eq!(last(&f0), EpistemicState::product(&[Zero, Minus]));
        assert_eq!(f0.toy_states(), f1.toy_states());
        assert_eq!(f0.verdict, Verdict::Constant);

        let states = fx.toy_states().unwrap();
        assert_eq!(*states[1], EpistemicState::product(&[Plus, Minus]));
        assert_eq!(*states[2], EpistemicState::product(&[Minus, Minus]));
        assert_eq!(*states[3], EpistemicState::product(&[One, Minus]));
        assert_eq!(fx.toy_states(), fxbar.toy_states());
        assert_eq!(fx.verdict, Verdict::Balanced);
        for r in [f0, f1, fx, fxbar] {
            assert_eq!(r.oracle_queries, 1);
            assert_eq!(r.layer, Layer::Toy);
        }
    }
}
