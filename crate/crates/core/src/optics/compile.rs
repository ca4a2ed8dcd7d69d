use super::grid::check_pitch;
use super::{
    grid_from_state, Aperture, AxisPos, BeamGrid, HardwareConstants, LensStage, OpticalLayout,
    OpticsError, Orientation, DEFAULT_PITCH_MM,
};
use crate::gate::Gate;
use crate::toy::{EpistemicState, NamedToyState};

/// How the four CZ pairs are mounted. Sequential pairs sit one after another;
/// coplanar pairs share the same pair of lens planes (and stage index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CzMounting {
    #[default]
    Sequential,
    Coplanar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompileOptions {
    pub pitch_mm: f64,
    pub cz_mounting: CzMounting,
    /// Input used to flag stages no beam reaches. `None` disables flagging.
    pub omit_against: Option<EpistemicState>,
    pub hardware: HardwareConstants,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            pitch_mm: DEFAULT_PITCH_MM,
            cz_mounting: CzMounting::Sequential,
            omit_against: Some(EpistemicState::product(&[
                NamedToyState::Plus,
                NamedToyState::Minus,
            ])),
            hardware: HardwareConstants::default(),
        }
    }
}

/// Qubit 0 lives on the rows of the grid, qubit 1 on the columns.
fn orientation_for(qubit: usize) -> Orientation {
    if qubit == 0 {
        Orientation::RowParallel
    } else {
        Orientation::ColParallel
    }
}

/// A cylindrical pair mirroring lines of `qubit` through `offset`, covering
/// `span` along that qubit and `cross` along the other one.
fn pair(
    qubit: usize,
    offset: AxisPos,
    span: (u8, u8),
    cross: (u8, u8),
    focal_mm: f64,
) -> LensStage {
    let aperture = if qubit == 0 {
        Aperture::new(span, cross)
    } else {
        Aperture::new(cross, span)
    };
    LensStage::cylindrical(orientation_for(qubit), offset, aperture, focal_mm)
        .expect("canonical stages are well formed")
}

fn hadamard(q: usize, hw: &HardwareConstants) -> Vec<LensStage> {
    vec![pair(
        q,
        AxisPos::between(2, 3),
        (2, 3),
        Aperture::FULL,
        hw.small_cylindrical_focal_mm,
    )]
}

fn controlled_z(hw: &HardwareConstants, mounting: CzMounting) -> Vec<LensStage> {
    let f = hw.small_cylindrical_focal_mm;
    // x of qubit 0 flips where z of qubit 1 is set (columns 3-4), and the
    // other way round (rows 3-4)
    let stages = [
        pair(0, AxisPos::between(1, 2), (1, 2), (3, 4), f),
        pair(0, AxisPos::between(3, 4), (3, 4), (3, 4), f),
        pair(1, AxisPos::between(1, 2), (1, 2), (3, 4), f),
        pair(1, AxisPos::between(3, 4), (3, 4), (3, 4), f),
    ];
    stages
        .into_iter()
        .enumerate()
        .map(|(i, s)| match mounting {
            CzMounting::Sequential => s.with_stage_index(i as u32),
            CzMounting::Coplanar => s.with_stage_index(0),
        })
        .collect()
}

/// Canonical lens stages for one gate on two wires, with stage indices
/// counted from 0 within the gate.
pub fn compile_gate(gate: &Gate) -> Result<Vec<LensStage>, OpticsError> {
    compile_gate_with(gate, CzMounting::Sequential, &HardwareConstants::default())
}

pub fn compile_gate_with(
    gate: &Gate,
    cz_mounting: CzMounting,
    hw: &HardwareConstants,
) -> Result<Vec<LensStage>, OpticsError> {
    gate.check_wires(2)?;
    let stages = match *gate {
        Gate::H(q) => hadamard(q, hw),
        Gate::X(q) => {
            let f = hw.large_cylindrical_focal_mm;
            vec![
                pair(q, AxisPos::on(2), (1, 3), Aperture::FULL, f),
                pair(q, AxisPos::on(3), (2, 4), Aperture::FULL, f),
            ]
        }
        Gate::Z(q) => {
            let f = hw.small_cylindrical_focal_mm;
            vec![
                pair(q, AxisPos::between(1, 2), (1, 2), Aperture::FULL, f),
                pair(q, AxisPos::between(3, 4), (3, 4), Aperture::FULL, f),
            ]
        }
        Gate::Cz(..) => return Ok(controlled_z(hw, cz_mounting)),
        Gate::Cnot { target, .. } => {
            let mut out = hadamard(target, hw);
            out.extend(controlled_z(hw, cz_mounting).into_iter().map(|s| {
                let i = s.stage_index() + 1;
                s.with_stage_index(i)
            }));
            let next = out.iter().map(LensStage::stage_index).max().unwrap_or(0) + 1;
            out.extend(
                hadamard(target, hw)
                    .into_iter()
                    .map(|s| s.with_stage_index(next)),
            );
            return Ok(out);
        }
    };
    Ok(stages
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.with_stage_index(i as u32))
        .collect())
}

/// [`compile_circuit_with`] using the default options.
pub fn compile_circuit(circuit: &[Gate]) -> Result<OpticalLayout, OpticsError> {
    compile_circuit_with(circuit, &CompileOptions::default())
}

/// Concatenates the stages of every gate, renumbering stage indices so they
/// increase along the beam path, then flags stages that receive no beam when
/// `options.omit_against` is fed in.
pub fn compile_circuit_with(
    circuit: &[Gate],
    options: &CompileOptions,
) -> Result<OpticalLayout, OpticsError> {
    check_pitch(options.pitch_mm)?;
    let mut stages = Vec::new();
    let mut base = 0;
    for gate in circuit {
        let gate_stages = compile_gate_with(gate, options.cz_mounting, &options.hardware)?;
        let span = gate_stages
            .iter()
            .map(LensStage::stage_index)
            .max()
            .map_or(0, |m| m + 1);
        stages.extend(gate_stages.into_iter().map(|s| {
            let i = s.stage_index() + base;
            s.with_stage_index(i)
        }));
        base += span;
    }
    if let Some(input) = &options.omit_against {
        let grid = grid_from_state(input, options.pitch_mm)?;
        flag_omittable(&mut stages, grid);
    }
    Ok(OpticalLayout {
        stages,
        pitch_mm: options.pitch_mm,
        hardware: options.hardware.clone(),
    })
}

fn flag_omittable(stages: &mut [LensStage], mut grid: BeamGrid) {
    for stage in stages.iter_mut() {
        let lit = grid.active.iter().any(|&b| stage.aperture().contains(b));
        *stage = stage.clone().with_omittable(!lit);
        grid.active = grid.active.iter().map(|&b| stage.act(b)).collect();
    }
}
