use super::{grid_from_state, BeamGrid, BeamSpot, HardwareConstants, LensStage, OpticsError};
use crate::gate::Gate;
use crate::toy::{EpistemicState, ToyError, ToyPermutation};

/// An ordered bench of lens stages plus the grid and parts it was laid out for.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalLayout {
    pub stages: Vec<LensStage>,
    pub pitch_mm: f64,
    pub hardware: HardwareConstants,
}

impl OpticalLayout {
    /// Stages in beam order: by stage index, ties kept in list order.
    pub fn ordered_stages(&self) -> Vec<&LensStage> {
        let mut stages: Vec<_> = self.stages.iter().collect();
        stages.sort_by_key(|s| s.stage_index());
        stages
    }

    pub fn act(&self, spot: BeamSpot) -> BeamSpot {
        self.ordered_stages()
            .into_iter()
            .fold(spot, |b, s| s.act(b))
    }

    /// The composed stage action as a permutation of two-system cells.
    pub fn permutation(&self) -> Result<ToyPermutation, ToyError> {
        let stages = self.ordered_stages();
        ToyPermutation::from_cell_fn(2, |cell| {
            let spot = stages
                .iter()
                .fold(BeamSpot::from_cell(cell), |b, s| s.act(b));
            spot.to_cell()
        })
    }
}

/// Sends every beam of `input` through the stages in beam order.
pub fn trace(layout: &OpticalLayout, input: &BeamGrid) -> BeamGrid {
    let stages = layout.ordered_stages();
    BeamGrid {
        pitch_mm: input.pitch_mm,
        active: input
            .active
            .iter()
            .map(|&b| stages.iter().fold(b, |b, s| s.act(b)))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub input: EpistemicState,
    pub expected: BeamGrid,
    pub actual: BeamGrid,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Traces all 60 valid two-system states through `layout` and compares the
/// outgoing beams with the toy evolution of `circuit`.
pub fn verify_layout(
    layout: &OpticalLayout,
    circuit: &[Gate],
) -> Result<VerificationReport, OpticsError> {
    let toy = ToyPermutation::from_circuit(circuit, 2)?;
    let mut report = VerificationReport {
        checked: 0,
        mismatches: Vec::new(),
    };
    for state in EpistemicState::all_valid(2) {
        let expected = grid_from_state(&toy.apply(&state)?, layout.pitch_mm)?;
        let actual = trace(layout, &grid_from_state(&state, layout.pitch_mm)?);
        report.checked += 1;
        if actual.active != expected.active {
            report.mismatches.push(Mismatch {
                input: state,
                expected,
                actual,
            });
        }
    }
    Ok(report)
}
