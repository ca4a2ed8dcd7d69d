use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use super::QuantumError;
use crate::gate::{Gate, GateError};

/// Allowed drift of the squared norm away from 1.
pub const NORM_TOL: f64 = 1e-12;
/// Default tolerance of [`equal_up_to_global_phase`].
pub const PHASE_TOL: f64 = 1e-10;
pub const MAX_QUBITS: usize = 16;

/// A normalized pure state of `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state, `bits[0]` being qubit 0.
    pub fn init_basis(bits: &[bool]) -> Result<Self, QuantumError> {
        if bits.is_empty() {
            return Err(QuantumError::EmptyBits);
        }
        if bits.len() > MAX_QUBITS {
            return Err(QuantumError::TooManyQubits(bits.len()));
        }
        let index = bits.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << bits.len()];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector {
            n_qubits: bits.len(),
            amps,
        })
    }

    /// Like [`init_basis`](Self::init_basis) from a string such as `"01"`.
    pub fn from_bit_str(bits: &str) -> Result<Self, QuantumError> {
        Self::init_basis(&parse_bits(bits)?)
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, QuantumError> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(QuantumError::BadLength(len));
        }
        let n_qubits = len.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(QuantumError::TooManyQubits(n_qubits));
        }
        let state = StateVector { n_qubits, amps };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(QuantumError::NotNormalized(norm));
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector, QuantumError> {
        let n = self.n_qubits + other.n_qubits;
        if n > MAX_QUBITS {
            return Err(QuantumError::TooManyQubits(n));
        }
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Multiplies every amplitude by a unit-modulus `phase`.
    pub fn with_global_phase(&self, phase: Complex64) -> Result<StateVector, QuantumError> {
        if (phase.norm() - 1.0).abs() > NORM_TOL {
            return Err(QuantumError::NotAPhase(phase.norm()));
        }
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amps: self.amps.iter().map(|a| a * phase).collect(),
        })
    }

    fn mask(&self, qubit: usize) -> usize {
        1 << (self.n_qubits - 1 - qubit)
    }

    pub fn apply_gate(&self, gate: &Gate) -> Result<StateVector, QuantumError> {
        let mut out = self.clone();
        out.apply_gate_mut(gate)?;
        Ok(out)
    }

    pub fn apply_gate_mut(&mut self, gate: &Gate) -> Result<(), QuantumError> {
        gate.check_wires(self.n_qubits)?;
        match *gate {
            Gate::H(q) => {
                let m = self.mask(q);
                for i in (0..self.amps.len()).filter(|i| i & m == 0) {
                    let (a, b) = (self.amps[i], self.amps[i | m]);
                    self.amps[i] = (a + b) * FRAC_1_SQRT_2;
                    self.amps[i | m] = (a - b) * FRAC_1_SQRT_2;
                }
            }
            Gate::X(q) => {
                let m = self.mask(q);
                for i in (0..self.amps.len()).filter(|i| i & m == 0) {
                    self.amps.swap(i, i | m);
                }
            }
            Gate::Z(q) => {
                let m = self.mask(q);
                for (i, a) in self.amps.iter_mut().enumerate() {
                    if i & m != 0 {
                        *a = -*a;
                    }
                }
            }
            Gate::Cnot { control, target } => {
                let (mc, mt) = (self.mask(control), self.mask(target));
                for i in (0..self.amps.len()).filter(|i| i & mc != 0 && i & mt == 0) {
                    self.amps.swap(i, i | mt);
                }
            }
            Gate::Cz(a, b) => {
                let both = self.mask(a) | self.mask(b);
                for (i, amp) in self.amps.iter_mut().enumerate() {
                    if i & both == both {
                        *amp = -*amp;
                    }
                }
            }
        }
        Ok(())
    }

    /// Marginal computational-basis distribution over `wires`. Entry `i` is
    /// the probability of the outcome whose bits, `wires[0]` most
    /// significant, spell `i`.
    pub fn z_distribution(&self, wires: &[usize]) -> Result<Vec<f64>, QuantumError> {
        for (k, &w) in wires.iter().enumerate() {
            if w >= self.n_qubits {
                return Err(GateError::WireOutOfRange {
                    wire: w,
                    width: self.n_qubits,
                }
                .into());
            }
            if wires[..k].contains(&w) {
                return Err(GateError::RepeatedWire(w).into());
            }
        }
        let mut dist = vec![0.0; 1 << wires.len()];
        for (i, a) in self.amps.iter().enumerate() {
            let outcome = wires.iter().fold(0usize, |acc, &w| {
                acc << 1 | (i & self.mask(w) != 0) as usize
            });
            dist[outcome] += a.norm_sqr();
        }
        Ok(dist)
    }
}

impl fmt::Display for StateVector {
    /// Nonzero terms as `(re+imi)|bits>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm() < 1e-12 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(
                f,
                "({:.4}{:+.4}i)|{:0width$b}>",
                a.re,
                a.im,
                i,
                width = self.n_qubits
            )?;
        }
        Ok(())
    }
}

pub(crate) fn parse_bits(bits: &str) -> Result<Vec<bool>, QuantumError> {
    if bits.is_empty() {
        return Err(QuantumError::EmptyBits);
    }
    bits.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(QuantumError::InvalidBit(other)),
        })
        .collect()
}

/// True iff `a = e^{iα} b` for some α, comparing amplitudes within `tol`.
pub fn equal_up_to_global_phase(
    a: &StateVector,
    b: &StateVector,
    tol: f64,
) -> Result<bool, QuantumError> {
    if a.n_qubits != b.n_qubits {
        return Err(QuantumError::DimensionMismatch {
            expected: a.n_qubits,
            found: b.n_qubits,
        });
    }
    let (k, bk) = b
        .amps
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .expect("non-empty");
    let ratio = a.amps[k] / bk;
    if ratio.norm() < tol {
        return Ok(false);
    }
    let phase = ratio / ratio.norm();
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .all(|(x, y)| (x - phase * y).norm() <= tol))
}
