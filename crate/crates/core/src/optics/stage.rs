use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BeamSpot, OpticsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LensKind {
    SphericalPair,
    CylindricalPair,
}

/// Direction of a cylindrical pair's axis line. A `RowParallel` axis runs
/// along the rows and mirrors row indices; `ColParallel` mirrors columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    RowParallel,
    ColParallel,
}

/// A coordinate along one grid direction at half-pitch resolution.
///
/// Stored as twice the 1-based grid coordinate: 4 lies on line 2 and 5
/// halfway between lines 2 and 3. Mirroring index `i` through it gives
/// `twice - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisPos(u8);

impl AxisPos {
    /// On grid line `line`.
    pub fn on(line: u8) -> Self {
        assert!((1..=4).contains(&line));
        AxisPos(2 * line)
    }

    /// Halfway between adjacent lines `lo` and `lo + 1`.
    pub fn between(lo: u8, hi: u8) -> Self {
        assert!(
            (1..=3).contains(&lo) && hi == lo + 1,
            "lines {lo} and {hi} are not adjacent"
        );
        AxisPos(lo + hi)
    }

    pub fn from_twice(twice: u8) -> Option<Self> {
        (2..=8).contains(&twice).then_some(AxisPos(twice))
    }

    pub fn twice(self) -> u8 {
        self.0
    }

    /// Grid coordinate, e.g. 2.5 for between 2 and 3.
    pub fn coordinate(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_mm(self, pitch_mm: f64) -> f64 {
        (self.coordinate() - 1.0) * pitch_mm
    }

    fn mirror(self, i: u8) -> u8 {
        self.0 - i
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Optical axis of a spherical pair, seen end-on.
    Point { row: AxisPos, col: AxisPos },
    /// Axis line of a cylindrical pair.
    Line {
        orientation: Orientation,
        offset: AxisPos,
    },
}

/// Grid lines a stage's lenses cover, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Aperture {
    pub rows: (u8, u8),
    pub cols: (u8, u8),
}

impl Aperture {
    pub const FULL: (u8, u8) = (1, 4);

    pub fn new(rows: (u8, u8), cols: (u8, u8)) -> Self {
        Aperture { rows, cols }
    }

    pub fn contains(&self, spot: BeamSpot) -> bool {
        (self.rows.0..=self.rows.1).contains(&spot.row)
            && (self.cols.0..=self.cols.1).contains(&spot.col)
    }

    pub fn spots(&self) -> impl Iterator<Item = BeamSpot> + '_ {
        BeamSpot::all().filter(|s| self.contains(*s))
    }

    fn in_bounds(range: (u8, u8)) -> bool {
        1 <= range.0 && range.0 <= range.1 && range.1 <= 4
    }
}

/// One pair of confocal lenses.
#[derive(Debug, Clone, PartialEq)]
pub struct LensStage {
    axis: Axis,
    aperture: Aperture,
    focal_mm: f64,
    stage_index: u32,
    omittable: bool,
}

impl LensStage {
    /// A cylindrical pair. The aperture must be symmetric about the axis
    /// line so that mirrored beams land inside it.
    pub fn cylindrical(
        orientation: Orientation,
        offset: AxisPos,
        aperture: Aperture,
        focal_mm: f64,
    ) -> Result<Self, OpticsError> {
        Self::new(
            Axis::Line {
                orientation,
                offset,
            },
            aperture,
            focal_mm,
        )
    }

    /// A spherical pair; the aperture must be symmetric about the point in
    /// both directions.
    pub fn spherical(
        row: AxisPos,
        col: AxisPos,
        aperture: Aperture,
        focal_mm: f64,
    ) -> Result<Self, OpticsError> {
        Self::new(Axis::Point { row, col }, aperture, focal_mm)
    }

    pub fn new(axis: Axis, aperture: Aperture, focal_mm: f64) -> Result<Self, OpticsError> {
        if !(Aperture::in_bounds(aperture.rows) && Aperture::in_bounds(aperture.cols)) {
            return Err(OpticsError::InvalidStage(format!(
                "aperture rows {:?} cols {:?} leaves the 4x4 grid",
                aperture.rows, aperture.cols
            )));
        }
        let symmetric = |range: (u8, u8), pos: AxisPos| range.0 + range.1 == pos.twice();
        let ok = match axis {
            Axis::Point { row, col } => {
                symmetric(aperture.rows, row) && symmetric(aperture.cols, col)
            }
            Axis::Line {
                orientation: Orientation::RowParallel,
                offset,
            } => symmetric(aperture.rows, offset),
            Axis::Line {
                orientation: Orientation::ColParallel,
                offset,
            } => symmetric(aperture.cols, offset),
        };
        if !ok {
            return Err(OpticsError::InvalidStage(format!(
                "aperture {aperture:?} is not symmetric about {axis:?}"
            )));
        }
        if !(focal_mm.is_finite() && focal_mm > 0.0) {
            return Err(OpticsError::InvalidStage(format!(
                "focal length {focal_mm} mm"
            )));
        }
        Ok(LensStage {
            axis,
            aperture,
            focal_mm,
            stage_index: 0,
            omittable: false,
        })
    }

    pub fn with_stage_index(mut self, stage_index: u32) -> Self {
        self.stage_index = stage_index;
        self
    }

    pub fn with_omittable(mut self, omittable: bool) -> Self {
        self.omittable = omittable;
        self
    }

    pub fn kind(&self) -> LensKind {
        match self.axis {
            Axis::Point { .. } => LensKind::SphericalPair,
            Axis::Line { .. } => LensKind::CylindricalPair,
        }
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn aperture(&self) -> Aperture {
        self.aperture
    }

    pub fn focal_mm(&self) -> f64 {
        self.focal_mm
    }

    pub fn stage_index(&self) -> u32 {
        self.stage_index
    }

    /// True if no beam reaches this stage for the designated input, so the
    /// lenses may be left off the bench.
    pub fn omittable(&self) -> bool {
        self.omittable
    }

    /// Where a beam entering at `spot` leaves.
    pub fn act(&self, spot: BeamSpot) -> BeamSpot {
        if !self.aperture.contains(spot) {
            return spot;
        }
        match self.axis {
            Axis::Point { row, col } => BeamSpot {
                row: row.mirror(spot.row),
                col: col.mirror(spot.col),
            },
            Axis::Line {
                orientation: Orientation::RowParallel,
                offset,
            } => BeamSpot {
                row: offset.mirror(spot.row),
                col: spot.col,
            },
            Axis::Line {
                orientation: Orientation::ColParallel,
                offset,
            } => BeamSpot {
                row: spot.row,
                col: offset.mirror(spot.col),
            },
        }
    }
}

impl fmt::Display for LensStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.omittable { "*" } else { "" };
        match self.axis {
            Axis::Point { row, col } => write!(
                f,
                "#{}{star} spherical axis=({}, {})",
                self.stage_index,
                row.coordinate(),
                col.coordinate()
            )?,
            Axis::Line {
                orientation,
                offset,
            } => write!(
                f,
                "#{}{star} cylindrical {} axis={}",
                self.stage_index,
                match orientation {
                    Orientation::RowParallel => "row",
                    Orientation::ColParallel => "col",
                },
                offset.coordinate()
            )?,
        }
        write!(
            f,
            " rows={}-{} cols={}-{} f={}mm",
            self.aperture.rows.0,
            self.aperture.rows.1,
            self.aperture.cols.0,
            self.aperture.cols.1,
            self.focal_mm
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col_stage(offset: AxisPos, cols: (u8, u8)) -> LensStage {
        LensStage::cylindrical(
            Orientation::ColParallel,
            offset,
            Aperture::new(Aperture::FULL, cols),
            19.0,
        )
        .unwrap()
    }

    #[test]
    fn column_swap() {
        let h2 = col_stage(AxisPos::between(2, 3), (2, 3));
        assert_eq!(h2.act(BeamSpot::new(1, 2)), BeamSpot::new(1, 3));
        assert_eq!(h2.act(BeamSpot::new(4, 3)), BeamSpot::new(4, 2));
        assert_eq!(h2.act(BeamSpot::new(4, 1)), BeamSpot::new(4, 1));
        assert_eq!(h2.kind(), LensKind::CylindricalPair);
    }

    #[test]
    fn on_axis_beam_is_fixed() {
        let x = col_stage(AxisPos::on(2), (1, 3));
        assert_eq!(x.act(BeamSpot::new(3, 2)), BeamSpot::new(3, 2));
        assert_eq!(x.act(BeamSpot::new(3, 1)), BeamSpot::new(3, 3));
        assert_eq!(x.act(BeamSpot::new(3, 4)), BeamSpot::new(3, 4));
    }

    #[test]
    fn spherical_point_reflection() {
        let s = LensStage::spherical(
            AxisPos::between(3, 4),
            AxisPos::between(3, 4),
            Aperture::new((3, 4), (3, 4)),
            50.0,
        )
        .unwrap();
        assert_eq!(s.kind(), LensKind::SphericalPair);
        assert_eq!(s.act(BeamSpot::new(3, 3)), BeamSpot::new(4, 4));
        assert_eq!(s.act(BeamSpot::new(3, 4)), BeamSpot::new(4, 3));
        assert_eq!(s.act(BeamSpot::new(1, 1)), BeamSpot::new(1, 1));
    }

    #[test]
    fn every_well_formed_stage_is_an_involution() {
        let mut count = 0;
        for twice in 2..=8u8 {
            let pos = AxisPos::from_twice(twice).unwrap();
            for lo in 1..=4u8 {
                for hi in lo..=4u8 {
                    for orientation in [Orientation::RowParallel, Orientation::ColParallel] {
                        let ap = match orientation {
                            Orientation::RowParallel => Aperture::new((lo, hi), Aperture::FULL),
                            Orientation::ColParallel => Aperture::new(Aperture::FULL, (lo, hi)),
                        };
                        let Ok(stage) = LensStage::cylindrical(orientation, pos, ap, 19.0) else {
                            continue;
                        };
                        count += 1;
                        for s in BeamSpot::all() {
                            assert_eq!(stage.act(stage.act(s)), s);
                        }
                    }
                }
            }
        }
        assert!(count > 0);
    }

    #[test]
    fn malformed_stages_rejected() {
        // aperture 1-2 is not symmetric about 2.5
        assert!(LensStage::cylindrical(
            Orientation::RowParallel,
            AxisPos::between(2, 3),
            Aperture::new((1, 2), Aperture::FULL),
            19.0
        )
        .is_err());
        assert!(LensStage::cylindrical(
            Orientation::RowParallel,
            AxisPos::on(1),
            Aperture::new((0, 2), Aperture::FULL),
            19.0
        )
        .is_err());
        assert!(LensStage::cylindrical(
            Orientation::RowParallel,
            AxisPos::between(2, 3),
            Aperture::new((2, 3), Aperture::FULL),
            -1.0
        )
        .is_err());
        assert!(AxisPos::from_twice(9).is_none());
    }

    #[test]
    fn axis_positions() {
        assert_eq!(AxisPos::between(2, 3).twice(), 5);
        assert_eq!(AxisPos::on(2).coordinate(), 2.0);
        assert_eq!(AxisPos::between(2, 3).to_mm(7.25), 10.875);
    }
}
