use std::collections::BTreeSet;
use std::fmt;

use super::OpticsError;
use crate::toy::{EpistemicState, OnticCell, OnticIndex, ToyError};

/// A beam position on the 4x4 grid, both coordinates in `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeamSpot {
    pub row: u8,
    pub col: u8,
}

impl BeamSpot {
    pub fn new(row: u8, col: u8) -> Self {
        assert!(
            (1..=4).contains(&row) && (1..=4).contains(&col),
            "spot ({row},{col}) off the grid"
        );
        BeamSpot { row, col }
    }

    pub fn all() -> impl Iterator<Item = BeamSpot> {
        (1..=4).flat_map(|row| (1..=4).map(move |col| BeamSpot { row, col }))
    }

    pub(crate) fn from_cell(cell: OnticCell) -> Self {
        BeamSpot {
            row: cell.system(0).get(),
            col: cell.system(1).get(),
        }
    }

    pub(crate) fn to_cell(self) -> OnticCell {
        OnticCell::pair(
            OnticIndex::new(self.row).expect("row on grid"),
            OnticIndex::new(self.col).expect("col on grid"),
        )
    }
}

impl fmt::Display for BeamSpot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The lit beams on the grid together with the physical beam spacing.
///
/// Grids made from states are valid two-system supports; tracing through a
/// compiled layout keeps them valid. Tracing through an arbitrary layout only
/// conserves the number of beams.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamGrid {
    pub pitch_mm: f64,
    pub active: BTreeSet<BeamSpot>,
}

pub fn grid_from_state(state: &EpistemicState, pitch_mm: f64) -> Result<BeamGrid, OpticsError> {
    if state.n_systems() != 2 {
        return Err(OpticsError::NotTwoSystems(state.n_systems()));
    }
    check_pitch(pitch_mm)?;
    let active = state
        .support()
        .iter()
        .map(|&c| BeamSpot::from_cell(c))
        .collect();
    Ok(BeamGrid { pitch_mm, active })
}

pub(crate) fn check_pitch(pitch_mm: f64) -> Result<(), OpticsError> {
    if pitch_mm.is_finite() && pitch_mm > 0.0 {
        Ok(())
    } else {
        Err(OpticsError::InvalidPitch(pitch_mm))
    }
}

impl BeamGrid {
    /// Reads the beams back as a toy state.
    pub fn to_state(&self) -> Result<EpistemicState, ToyError> {
        EpistemicState::new(2, self.active.iter().map(|s| s.to_cell()))
    }

    pub fn is_valid(&self) -> bool {
        self.to_state().is_ok()
    }

    /// Beam centre `(x, y)` in millimetres, origin at beam (1,1).
    pub fn position_mm(&self, spot: BeamSpot) -> (f64, f64) {
        (
            (spot.col - 1) as f64 * self.pitch_mm,
            (spot.row - 1) as f64 * self.pitch_mm,
        )
    }

    /// Same picture as [`render_grid`](crate::toy::render_grid): row 4 first.
    pub fn render(&self) -> String {
        (1..=4u8)
            .rev()
            .map(|row| {
                (1..=4u8)
                    .map(|col| {
                        if self.active.contains(&BeamSpot { row, col }) {
                            '#'
                        } else {
                            '.'
                        }
                    })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
