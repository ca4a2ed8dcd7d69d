//! Plain-text layout files.
//!
//! A layout is written as TOML: a `format` version, the beam `pitch_mm`, a
//! `[hardware]` table with the parts list, then one `[[stage]]` table per
//! lens pair in the order stored in the layout. All lengths are millimetres
//! measured from beam (1,1): `x` grows along columns, `y` along rows.
//!
//! ```toml
//! [[stage]]
//! kind = "cylindrical_pair"
//! orientation = "col_parallel"   # absent for spherical pairs
//! axis = [10.875]                # [offset] or, for spherical, [x, y]
//! aperture = [3.625, 18.125, -3.625, 25.375]  # x_min, x_max, y_min, y_max
//! focal_mm = 19.0
//! stage_index = 0
//! omittable = false
//! ```
//!
//! Aperture edges sit half a pitch outside the outermost covered beams.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use toml::Spanned;

use super::grid::check_pitch;
use super::{Aperture, Axis, AxisPos, HardwareConstants, LensStage, OpticalLayout, Orientation};

const FORMAT_VERSION: u32 = 1;
const HEADER: &str = "# Confocal lens layout for a 4x4 beam grid.\n\
# Lengths in mm from beam (1,1); x along columns, y along rows.\n\n";

/// Tolerance when snapping millimetre values back onto the half-pitch lattice.
const SNAP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// `stage` is the 1-based position of the `[[stage]]` table, `None` for
    /// top-level keys.
    #[error("line {line}: {}field `{field}`: {reason}", stage.map(|s| format!("stage {s}: ")).unwrap_or_default())]
    Field {
        stage: Option<usize>,
        field: &'static str,
        line: usize,
        reason: String,
    },
}

#[derive(Serialize)]
struct FileOut<'a> {
    format: u32,
    pitch_mm: f64,
    hardware: &'a HardwareConstants,
    stage: Vec<StageOut>,
}

#[derive(Serialize)]
struct StageOut {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    orientation: Option<&'static str>,
    axis: Vec<f64>,
    aperture: [f64; 4],
    focal_mm: f64,
    stage_index: u32,
    omittable: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileIn {
    format: Spanned<u32>,
    pitch_mm: Spanned<f64>,
    hardware: HardwareConstants,
    #[serde(default)]
    stage: Vec<StageIn>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StageIn {
    kind: Spanned<String>,
    orientation: Option<Spanned<String>>,
    axis: Spanned<Vec<f64>>,
    aperture: Spanned<[f64; 4]>,
    focal_mm: Spanned<f64>,
    stage_index: u32,
    omittable: bool,
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::RowParallel => "row_parallel",
        Orientation::ColParallel => "col_parallel",
    }
}

fn stage_out(stage: &LensStage, pitch: f64) -> StageOut {
    let a = stage.aperture();
    let lo = |i: u8| (i as f64 - 1.5) * pitch;
    let hi = |i: u8| (i as f64 - 0.5) * pitch;
    let (kind, orientation, axis) = match stage.axis() {
        Axis::Point { row, col } => (
            "spherical_pair",
            None,
            vec![col.to_mm(pitch), row.to_mm(pitch)],
        ),
        Axis::Line {
            orientation,
            offset,
        } => (
            "cylindrical_pair",
            Some(orientation_name(orientation)),
            vec![offset.to_mm(pitch)],
        ),
    };
    StageOut {
        kind,
        orientation,
        axis,
        aperture: [lo(a.cols.0), hi(a.cols.1), lo(a.rows.0), hi(a.rows.1)],
        focal_mm: stage.focal_mm(),
        stage_index: stage.stage_index(),
        omittable: stage.omittable(),
    }
}

pub fn emit_layout_file(layout: &OpticalLayout) -> String {
    let file = FileOut {
        format: FORMAT_VERSION,
        pitch_mm: layout.pitch_mm,
        hardware: &layout.hardware,
        stage: layout
            .stages
            .iter()
            .map(|s| stage_out(s, layout.pitch_mm))
            .collect(),
    };
    let body = toml::to_string(&file).expect("layout fields are plain TOML values");
    format!("{HEADER}{body}")
}

fn line_of(text: &str, span: Range<usize>) -> usize {
    text[..span.start.min(text.len())].matches('\n').count() + 1
}

/// `value / pitch` if it lies on the half-pitch lattice.
fn halves(value: f64, pitch: f64) -> Option<i64> {
    let h = 2.0 * value / pitch;
    let r = h.round();
    ((h - r).abs() < SNAP_TOL).then_some(r as i64)
}

fn axis_pos(mm: f64, pitch: f64) -> Option<AxisPos> {
    // twice the 1-based grid coordinate
    let twice = halves(mm, pitch)? + 2;
    u8::try_from(twice).ok().and_then(AxisPos::from_twice)
}

/// Converts an edge pair back to the range of covered lines.
fn line_range(lo_mm: f64, hi_mm: f64, pitch: f64) -> Option<(u8, u8)> {
    let (lo, hi) = (halves(lo_mm, pitch)?, halves(hi_mm, pitch)?);
    // edges are odd multiples of half a pitch: lo = 2c - 3, hi = 2c - 1
    if lo.rem_euclid(2) != 1 || hi.rem_euclid(2) != 1 {
        return None;
    }
    let (c_lo, c_hi) = ((lo + 3) / 2, (hi + 1) / 2);
    let ok = (1..=4).contains(&c_lo) && (1..=4).contains(&c_hi) && c_lo <= c_hi;
    ok.then_some((c_lo as u8, c_hi as u8))
}

pub fn parse_layout_file(text: &str) -> Result<OpticalLayout, LayoutParseError> {
    let file: FileIn = toml::from_str(text).map_err(|e| LayoutParseError::Syntax {
        line: e.span().map_or(1, |s| line_of(text, s)),
        message: e.message().to_string(),
    })?;
    let top = |field, span, reason: String| LayoutParseError::Field {
        stage: None,
        field,
        line: line_of(text, span),
        reason,
    };
    if *file.format.get_ref() != FORMAT_VERSION {
        return Err(top(
            "format",
            file.format.span(),
            format!("unsupported version {}", file.format.get_ref()),
        ));
    }
    let pitch = *file.pitch_mm.get_ref();
    if check_pitch(pitch).is_err() {
        return Err(top(
            "pitch_mm",
            file.pitch_mm.span(),
            format!("{pitch} is not a positive length"),
        ));
    }
    let stages = file
        .stage
        .into_iter()
        .enumerate()
        .map(|(i, s)| parse_stage(text, i + 1, s, pitch))
        .collect::<Result<_, _>>()?;
    Ok(OpticalLayout {
        stages,
        pitch_mm: pitch,
        hardware: file.hardware,
    })
}

fn parse_stage(
    text: &str,
    n: usize,
    s: StageIn,
    pitch: f64,
) -> Result<LensStage, LayoutParseError> {
    let err = |field, span, reason: String| LayoutParseError::Field {
        stage: Some(n),
        field,
        line: line_of(text, span),
        reason,
    };
    let axis_vals = s.axis.get_ref();
    let axis_err = || {
        err(
            "axis",
            s.axis.span(),
            format!("{axis_vals:?} is not a grid line or midpoint"),
        )
    };
    let axis = match s.kind.get_ref().as_str() {
        "spherical_pair" => {
            if let Some(o) = &s.orientation {
                return Err(err(
                    "orientation",
                    o.span(),
                    "spherical pairs have no orientation".into(),
                ));
            }
            let [x, y] = axis_vals[..] else {
                return Err(err(
                    "axis",
                    s.axis.span(),
                    "spherical pairs need [x_mm, y_mm]".into(),
                ));
            };
            let (col, row) = (
                axis_pos(x, pitch).ok_or_else(axis_err)?,
                axis_pos(y, pitch).ok_or_else(axis_err)?,
            );
            Axis::Point { row, col }
        }
        "cylindrical_pair" => {
            let Some(o) = &s.orientation else {
                return Err(err(
                    "orientation",
                    s.kind.span(),
                    "missing for a cylindrical pair".into(),
                ));
            };
            let orientation = match o.get_ref().as_str() {
                "row_parallel" => Orientation::RowParallel,
                "col_parallel" => Orientation::ColParallel,
                other => {
                    return Err(err(
                        "orientation",
                        o.span(),
                        format!("unknown orientation `{other}`"),
                    ))
                }
            };
            let [offset] = axis_vals[..] else {
                return Err(err(
                    "axis",
                    s.axis.span(),
                    "cylindrical pairs need [offset_mm]".into(),
                ));
            };
            Axis::Line {
                orientation,
                offset: axis_pos(offset, pitch).ok_or_else(axis_err)?,
            }
        }
        other => {
            return Err(err(
                "kind",
                s.kind.span(),
                format!("unknown lens kind `{other}`"),
            ))
        }
    };
    let [x0, x1, y0, y1] = *s.aperture.get_ref();
    let (Some(cols), Some(rows)) = (line_range(x0, x1, pitch), line_range(y0, y1, pitch)) else {
        return Err(err(
            "aperture",
            s.aperture.span(),
            "edges do not fall between beams of the grid".into(),
        ));
    };
    let focal = *s.focal_mm.get_ref();
    if !(focal.is_finite() && focal > 0.0) {
        return Err(err(
            "focal_mm",
            s.focal_mm.span(),
            format!("{focal} is not a positive length"),
        ));
    }
    let stage = LensStage::new(axis, Aperture::new(rows, cols), focal)
        .map_err(|e| err("aperture", s.aperture.span(), e.to_string()))?;
    Ok(stage
        .with_stage_index(s.stage_index)
        .with_omittable(s.omittable))
}
