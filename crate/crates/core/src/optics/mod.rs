//! Lowering circuits to confocal lens stages on a 4x4 beam grid.
//!
//! A two-system toy state is shown as four parallel laser beams threading a
//! 4x4 grid: beam `(row, col)` is on iff cell `(row, col)` is in the support.
//! Row 1 is at the bottom and column 1 on the left. A pair of confocal convex
//! lenses sends every beam that enters its aperture out mirrored through its
//! optical axis: a point for spherical pairs, a line for cylindrical pairs.
//! Beams outside the aperture, and beams on the axis, pass unchanged. Every
//! stage is therefore an involution, and a circuit compiles to a sequence of
//! stages whose composed action is the toy permutation of that circuit.
//!
//! The model is purely geometric; no propagation distances or aberrations
//! are simulated.

mod compile;
mod grid;
mod hardware;
mod layout;
mod layout_file;
mod schematic;
mod stage;

use thiserror::Error;

pub use compile::{
    compile_circuit, compile_circuit_with, compile_gate, compile_gate_with, CompileOptions,
    CzMounting,
};
pub use grid::{grid_from_state, BeamGrid, BeamSpot};
pub use hardware::{HardwareConstants, DEFAULT_PITCH_MM};
pub use layout::{trace, verify_layout, Mismatch, OpticalLayout, VerificationReport};
pub use layout_file::{emit_layout_file, parse_layout_file, LayoutParseError};
pub use schematic::emit_schematic;

pub use stage::{Aperture, Axis, AxisPos, LensKind, LensStage, Orientation};

use crate::gate::GateError;
use crate::toy::ToyError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OpticsError {
    #[error("beam grids carry two-system states, got {0} system(s)")]
    NotTwoSystems(usize),
    #[error("pitch must be a positive length in mm, got {0}")]
    InvalidPitch(f64),
    #[error("unsupported gate: {0}")]
    UnsupportedGate(#[from] GateError),
    #[error("invalid lens stage: {0}")]
    InvalidStage(String),
    #[error(transparent)]
    Toy(#[from] ToyError),
}
