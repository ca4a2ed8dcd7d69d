use std::fmt;

use super::{EpistemicState, OnticCell, OnticIndex, ToyError};
use crate::gate::Gate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingleGate {
    H,
    X,
    Z,
}

impl SingleGate {
    /// Bit update on one system: H swaps z and x, X flips z, Z flips x.
    fn act(self, i: OnticIndex) -> OnticIndex {
        let (z, x) = i.bits();
        match self {
            SingleGate::H => OnticIndex::from_bits(x, z),
            SingleGate::X => OnticIndex::from_bits(!z, x),
            SingleGate::Z => OnticIndex::from_bits(z, !x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoQubitGate {
    Cnot,
    Cz,
}

impl TwoQubitGate {
    /// Bit update on a (control, target) pair.
    ///
    /// CNOT: `z_t ^= z_c`, `x_c ^= x_t`. CZ: `x_c ^= z_t`, `x_t ^= z_c`.
    fn act(self, control: OnticIndex, target: OnticIndex) -> (OnticIndex, OnticIndex) {
        let (zc, xc) = control.bits();
        let (zt, xt) = target.bits();
        match self {
            TwoQubitGate::Cnot => (
                OnticIndex::from_bits(zc, xc ^ xt),
                OnticIndex::from_bits(zt ^ zc, xt),
            ),
            TwoQubitGate::Cz => (
                OnticIndex::from_bits(zc, xc ^ zt),
                OnticIndex::from_bits(zt, xt ^ zc),
            ),
        }
    }
}

/// A bijection on the `4^n` ontic cells of `n` systems.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToyPermutation {
    n_systems: usize,
    // map[code] = code of the image cell
    map: Vec<u8>,
}

fn check_systems(n_systems: usize) -> Result<(), ToyError> {
    if (1..=2).contains(&n_systems) {
        Ok(())
    } else {
        Err(ToyError::UnsupportedSystems(n_systems))
    }
}

/// The toy permutation of H, X or Z on system `target` (zero-based) of an
/// `n_systems` register. The other system's index is left alone.
pub fn toy_gate(
    gate: SingleGate,
    target: usize,
    n_systems: usize,
) -> Result<ToyPermutation, ToyError> {
    check_systems(n_systems)?;
    if target >= n_systems {
        return Err(ToyError::InvalidTarget { target, n_systems });
    }
    ToyPermutation::from_cell_fn(n_systems, |cell| {
        cell.with_system(target, gate.act(cell.system(target)))
    })
}

/// The 16-cell toy permutation of CNOT or CZ (zero-based systems).
pub fn toy_two_qubit_gate(
    gate: TwoQubitGate,
    control: usize,
    target: usize,
) -> Result<ToyPermutation, ToyError> {
    for w in [control, target] {
        if w >= 2 {
            return Err(ToyError::InvalidTarget {
                target: w,
                n_systems: 2,
            });
        }
    }
    if control == target {
        return Err(ToyError::SameControlTarget(control));
    }
    ToyPermutation::from_cell_fn(2, |cell| {
        let (c, t) = gate.act(cell.system(control), cell.system(target));
        cell.with_system(control, c).with_system(target, t)
    })
}

/// `first` followed by `second`.
pub fn compose(
    first: &ToyPermutation,
    second: &ToyPermutation,
) -> Result<ToyPermutation, ToyError> {
    first.then(second)
}

impl ToyPermutation {
    pub fn identity(n_systems: usize) -> Result<Self, ToyError> {
        check_systems(n_systems)?;
        let len = 4usize.pow(n_systems as u32);
        Ok(ToyPermutation {
            n_systems,
            map: (0..len as u8).collect(),
        })
    }

    /// Tabulates `f` over every cell, rejecting maps that are not bijections.
    pub fn from_cell_fn(
        n_systems: usize,
        f: impl Fn(OnticCell) -> OnticCell,
    ) -> Result<Self, ToyError> {
        check_systems(n_systems)?;
        let map: Vec<u8> = OnticCell::all(n_systems)
            .map(|c| f(c).code() as u8)
            .collect();
        let mut seen = vec![false; map.len()];
        for &m in &map {
            if std::mem::replace(&mut seen[m as usize], true) {
                return Err(ToyError::NotABijection);
            }
        }
        Ok(ToyPermutation { n_systems, map })
    }

    pub fn from_gate(gate: &Gate, n_systems: usize) -> Result<Self, ToyError> {
        gate.check_wires(n_systems)?;
        match *gate {
            Gate::H(q) => toy_gate(SingleGate::H, q, n_systems),
            Gate::X(q) => toy_gate(SingleGate::X, q, n_systems),
            Gate::Z(q) => toy_gate(SingleGate::Z, q, n_systems),
            Gate::Cnot { control, target } => {
                toy_two_qubit_gate(TwoQubitGate::Cnot, control, target)
            }
            Gate::Cz(a, b) => toy_two_qubit_gate(TwoQubitGate::Cz, a, b),
        }
    }

    /// The permutation of a whole circuit, gates applied left to right.
    pub fn from_circuit(gates: &[Gate], n_systems: usize) -> Result<Self, ToyError> {
        gates.iter().try_fold(Self::identity(n_systems)?, |acc, g| {
            acc.then(&Self::from_gate(g, n_systems)?)
        })
    }

    pub fn n_systems(&self) -> usize {
        self.n_systems
    }

    pub fn image(&self, cell: OnticCell) -> OnticCell {
        assert_eq!(cell.n_systems(), self.n_systems, "cell arity");
        OnticCell::from_code(self.map[cell.code()] as usize, self.n_systems)
    }

    /// Applies `self`, then `next`.
    pub fn then(&self, next: &ToyPermutation) -> Result<ToyPermutation, ToyError> {
        if self.n_systems != next.n_systems {
            return Err(ToyError::DimensionMismatch {
                expected: self.n_systems,
                found: next.n_systems,
            });
        }
        let map = self.map.iter().map(|&m| next.map[m as usize]).collect();
        Ok(ToyPermutation {
            n_systems: self.n_systems,
            map,
        })
    }

    pub fn inverse(&self) -> ToyPermutation {
        let mut map = vec![0u8; self.map.len()];
        for (from, &to) in self.map.iter().enumerate() {
            map[to as usize] = from as u8;
        }
        ToyPermutation {
            n_systems: self.n_systems,
            map,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m as usize)
    }

    /// Maps the support cell by cell. Fails if the image is not a valid
    /// state, which cannot happen for permutations built from gates.
    pub fn apply(&self, state: &EpistemicState) -> Result<EpistemicState, ToyError> {
        if state.n_systems() != self.n_systems {
            return Err(ToyError::DimensionMismatch {
                expected: self.n_systems,
                found: state.n_systems(),
            });
        }
        EpistemicState::new(
            self.n_systems,
            state.support().iter().map(|&c| self.image(c)),
        )
    }

    /// True if every valid state is sent to a valid state.
    pub fn preserves_validity(&self) -> bool {
        EpistemicState::all_valid(self.n_systems)
            .iter()
            .all(|s| self.apply(s).is_ok())
    }

    /// Non-trivial cycles, each starting at its smallest cell.
    pub fn cycles(&self) -> Vec<Vec<OnticCell>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                cycle.push(OnticCell::from_code(at, self.n_systems));
                at = self.map[at] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation, e.g. `(1 3)(2 4)`; the identity prints as `()`.
impl fmt::Display for ToyPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let cells: Vec<_> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", cells.join(" "))?;
        }
        Ok(())
    }
}
