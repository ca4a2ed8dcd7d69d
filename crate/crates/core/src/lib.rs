//! Deutsch-Jozsa on three layers.
//!
//! * [`quantum`]: exact statevector simulation of H, X, Z, CNOT, CZ and
//!   truth-table oracles.
//! * [`toy`]: the epistemic toy model, where states are supports over ontic
//!   cells and gates are permutations of those cells.
//! * [`optics`]: a compiler from circuits to confocal lens stages acting on a
//!   4x4 grid of parallel laser beams.
//!
//! [`deutsch`] runs the algorithm on the quantum and toy layers and checks
//! that the layers agree.
//!
//! ```
//! use deutsch_core::deutsch::{run_toy_deutsch, OracleKind, Verdict};
//!
//! let report = run_toy_deutsch(OracleKind::FxBar).unwrap();
//! assert_eq!(report.verdict, Verdict::Balanced);
//! assert_eq!(report.oracle_queries, 1);
//! ```

pub mod deutsch;
pub mod gate;
pub mod optics;
pub mod quantum;
pub mod toy;

pub use gate::{parse_circuit, Gate, GateError};
