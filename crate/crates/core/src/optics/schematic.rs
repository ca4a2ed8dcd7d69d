//! SVG drawing of a layout, one panel per lens stage in beam order.

use std::fmt::Write;

use super::{Axis, BeamSpot, LensStage, OpticalLayout, Orientation};

const CELL: f64 = 30.0;
const MARGIN: f64 = 25.0;
const TITLE: f64 = 30.0;
const PANEL_W: f64 = 3.0 * CELL + 2.0 * MARGIN + CELL;
const PANEL_H: f64 = TITLE + 3.0 * CELL + 2.0 * MARGIN + 20.0;

/// Pixel centre of grid coordinate `(row, col)`; row 1 is drawn at the bottom.
fn px(panel: usize, row: f64, col: f64) -> (f64, f64) {
    let x = panel as f64 * PANEL_W + MARGIN + CELL / 2.0 + (col - 1.0) * CELL;
    let y = TITLE + MARGIN + (4.0 - row) * CELL;
    (x, y)
}

fn grid(out: &mut String, panel: usize) {
    let (x0, y0) = px(panel, 4.5, 0.5);
    let _ = writeln!(
        out,
        r##"  <rect x="{x0}" y="{y0}" width="{w}" height="{w}" fill="none" stroke="#999999"/>"##,
        w = 4.0 * CELL
    );
    for spot in BeamSpot::all() {
        let (x, y) = px(panel, spot.row as f64, spot.col as f64);
        let _ = writeln!(
            out,
            r##"  <circle cx="{x}" cy="{y}" r="4" fill="#dddddd" stroke="#666666"/>"##
        );
    }
}

fn stage_panel(out: &mut String, panel: usize, stage: &LensStage) {
    let a = stage.aperture();
    let (x0, y0) = px(panel, a.rows.1 as f64 + 0.5, a.cols.0 as f64 - 0.5);
    let (x1, y1) = px(panel, a.rows.0 as f64 - 0.5, a.cols.1 as f64 + 0.5);
    let _ = writeln!(
        out,
        r##"  <rect class="lens" x="{x0}" y="{y0}" width="{}" height="{}" fill="#cfe3ff" fill-opacity="0.6" stroke="#3366cc"/>"##,
        x1 - x0,
        y1 - y0
    );
    grid(out, panel);

    match stage.axis() {
        Axis::Line {
            orientation: Orientation::RowParallel,
            offset,
        } => {
            let (xa, y) = px(panel, offset.coordinate(), 0.5);
            let (xb, _) = px(panel, offset.coordinate(), 4.5);
            axis_line(out, (xa, y), (xb, y));
        }
        Axis::Line {
            orientation: Orientation::ColParallel,
            offset,
        } => {
            let (x, ya) = px(panel, 0.5, offset.coordinate());
            let (_, yb) = px(panel, 4.5, offset.coordinate());
            axis_line(out, (x, ya), (x, yb));
        }
        Axis::Point { row, col } => {
            let (x, y) = px(panel, row.coordinate(), col.coordinate());
            axis_line(out, (x - 6.0, y - 6.0), (x + 6.0, y + 6.0));
            axis_line(out, (x - 6.0, y + 6.0), (x + 6.0, y - 6.0));
        }
    }

    for spot in a.spots() {
        let image = stage.act(spot);
        if image <= spot {
            continue;
        }
        let (xa, ya) = px(panel, spot.row as f64, spot.col as f64);
        let (xb, yb) = px(panel, image.row as f64, image.col as f64);
        // shorten both ends so the arrow heads stop at the spot outlines
        let (dx, dy) = (xb - xa, yb - ya);
        let len = (dx * dx + dy * dy).sqrt();
        let (ux, uy) = (dx / len * 7.0, dy / len * 7.0);
        let _ = writeln!(
            out,
            r##"  <line class="swap" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#cc3333" marker-start="url(#head)" marker-end="url(#head)"/>"##,
            xa + ux,
            ya + uy,
            xb - ux,
            yb - uy
        );
    }

    let star = if stage.omittable() { "*" } else { "" };
    let kind = match stage.axis() {
        Axis::Point { .. } => "spherical",
        Axis::Line { .. } => "cylindrical",
    };
    title(out, panel, &format!("stage {}{star}", stage.stage_index()));
    let (cx, _) = px(panel, 0.0, 2.5);
    let _ = writeln!(
        out,
        r#"  <text x="{cx}" y="{}" text-anchor="middle" font-size="11">{kind} f={} mm</text>"#,
        PANEL_H - 8.0,
        stage.focal_mm()
    );
}

fn axis_line(out: &mut String, (xa, ya): (f64, f64), (xb, yb): (f64, f64)) {
    let _ = writeln!(
        out,
        r##"  <line class="axis" x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" stroke="#000000" stroke-dasharray="4 3"/>"##
    );
}

fn title(out: &mut String, panel: usize, text: &str) {
    let (cx, _) = px(panel, 0.0, 2.5);
    let _ = writeln!(
        out,
        r#"  <text class="title" x="{cx}" y="{}" text-anchor="middle" font-size="14">{text}</text>"#,
        TITLE - 8.0
    );
}

/// One panel per stage in beam order. Each panel shows the 4x4 grid, the
/// lens footprint, the dashed optical axis and an arrow for every pair of
/// beam positions the stage swaps. Omittable stages get an asterisk.
pub fn emit_schematic(layout: &OpticalLayout) -> String {
    let stages = layout.ordered_stages();
    let panels = stages.len().max(1);
    let width = panels as f64 * PANEL_W;
    let height = PANEL_H + 20.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif">"#
    );
    out.push_str(
        "  <defs>\n    <marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#cc3333\"/>\n    </marker>\n  </defs>\n",
    );
    if stages.is_empty() {
        grid(&mut out, 0);
        title(&mut out, 0, "no stages");
    }
    for (panel, stage) in stages.into_iter().enumerate() {
        let _ = writeln!(out, r#"  <g class="panel" id="panel-{panel}">"#);
        stage_panel(&mut out, panel, stage);
        out.push_str("  </g>\n");
    }
    let _ = writeln!(
        out,
        r#"  <text x="8" y="{}" font-size="11">beam pitch {} mm</text>"#,
        height - 8.0,
        layout.pitch_mm
    );
    out.push_str("</svg>\n");
    out
}
