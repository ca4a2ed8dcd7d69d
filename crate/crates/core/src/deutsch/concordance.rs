use num_rational::Ratio;

use super::RunError;
use crate::gate::Gate;
use crate::quantum::StateVector;
use crate::toy::{EpistemicState, ToyPermutation};

pub const DEFAULT_MAX_CIRCUIT_LEN: usize = 8;
/// Tolerance for snapping a floating-point probability to a dyadic rational.
pub const DYADIC_TOL: f64 = 1e-9;
const MAX_DYADIC_EXPONENT: u32 = 20;

/// Computational-basis statistics of one circuit on both layers.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcordanceReport {
    pub quantum: Vec<f64>,
    pub toy: Vec<Ratio<u32>>,
    pub concordant: bool,
}

/// Snaps `p` to the closest `k / 2^e` for the smallest `e` within `tol`.
pub fn to_dyadic(p: f64, tol: f64) -> Option<Ratio<u64>> {
    (0..=MAX_DYADIC_EXPONENT).find_map(|e| {
        let den = 1u64 << e;
        let num = (p * den as f64).round();
        if num >= 0.0 && (num / den as f64 - p).abs() <= tol {
            Some(Ratio::new(num as u64, den))
        } else {
            None
        }
    })
}

/// [`concordance_check_bounded`] with [`DEFAULT_MAX_CIRCUIT_LEN`].
pub fn concordance_check(
    circuit: &[Gate],
    input_bits: &str,
) -> Result<ConcordanceReport, RunError> {
    concordance_check_bounded(circuit, input_bits, DEFAULT_MAX_CIRCUIT_LEN)
}

/// Runs `circuit` from the basis state `input_bits` on both layers and
/// compares the quantum z-distribution with the toy z-marginal exactly.
pub fn concordance_check_bounded(
    circuit: &[Gate],
    input_bits: &str,
    max_len: usize,
) -> Result<ConcordanceReport, RunError> {
    if circuit.len() > max_len {
        return Err(RunError::CircuitTooLong {
            len: circuit.len(),
            max: max_len,
        });
    }
    let width = input_bits.chars().count();
    if !(1..=2).contains(&width) {
        return Err(RunError::UnsupportedWidth(width));
    }
    for g in circuit {
        g.check_wires(width)?;
    }

    let initial = StateVector::from_bit_str(input_bits)?;
    let bits: Vec<bool> = input_bits.chars().map(|c| c == '1').collect();
    let quantum_final = circuit.iter().try_fold(initial, |s, g| s.apply_gate(g))?;
    let wires: Vec<usize> = (0..width).collect();
    let quantum = quantum_final.z_distribution(&wires)?;

    let toy_final =
        ToyPermutation::from_circuit(circuit, width)?.apply(&EpistemicState::basis(&bits)?)?;
    let toy = toy_final.z_marginal();

    let concordant = quantum.iter().zip(&toy).all(|(&q, t)| {
        to_dyadic(q, DYADIC_TOL) == Some(Ratio::new(*t.numer() as u64, *t.denom() as u64))
    });
    Ok(ConcordanceReport {
        quantum,
        toy,
        concordant,
    })
}
