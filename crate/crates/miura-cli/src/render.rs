//! ASCII and SVG rendering of (possibly partial) crease patterns.
//!
//! The SVG draws the parallelogram mesh: rows of cells sheared by the
//! acute angle `alpha`, mirrored row to row, so the zig-zag crease paths
//! actually zig-zag. Mountains are solid red, valleys dashed green,
//! unassigned creases thin gray. Class attributes (`mountain`,
//! `valley`, `unassigned`, `zigzag`) make the output scriptable.

use miura::{CreaseId, Fold, PartialMVAssignment};
use std::fmt::Write;

#[derive(Clone, Copy, Debug)]
pub struct RenderConfig {
    /// Acute cell angle in degrees; must lie strictly between 0 and 90.
    pub alpha_deg: f64,
    pub cell_w: f64,
    pub cell_h: f64,
}

impl Default for RenderConfig {
    fn default() -> RenderConfig {
        RenderConfig { alpha_deg: 80.0, cell_w: 42.0, cell_h: 30.0 }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.alpha_deg > 0.0 && self.alpha_deg < 90.0) {
            return Err(format!("alpha must be strictly between 0 and 90 degrees, got {}", self.alpha_deg));
        }
        if !(self.cell_w > 0.0 && self.cell_h > 0.0) {
            return Err("cell dimensions must be positive".into());
        }
        Ok(())
    }
}

fn glyph(fold: Option<Fold>) -> char {
    match fold {
        Some(Fold::Mountain) => 'M',
        Some(Fold::Valley) => 'V',
        None => '?',
    }
}

/// `2m - 1` lines: zig-zag creases of each cell row interleaved with the
/// horizontal crease lines between rows.
pub fn render_ascii(s: &PartialMVAssignment) -> String {
    let size = s.size();
    let mut out = String::new();
    for r in 0..size.rows {
        let zig: String = (0..size.cols.saturating_sub(1))
            .map(|c| glyph(s.get(CreaseId::v(r, c))))
            .collect();
        out.push_str(&zig);
        out.push('\n');
        if r + 1 < size.rows {
            let horiz: String = (0..size.cols).map(|c| glyph(s.get(CreaseId::h(r, c)))).collect();
            out.push_str(&horiz);
            out.push('\n');
        }
    }
    out
}

const MARGIN: f64 = 10.0;

/// Mesh point at grid line crossing `(r, c)`; odd rows are sheared so
/// consecutive strips mirror each other.
fn point(cfg: &RenderConfig, r: usize, c: usize) -> (f64, f64) {
    let shear = cfg.cell_h / cfg.alpha_deg.to_radians().tan();
    let dx = if r % 2 == 1 { shear } else { 0.0 };
    (MARGIN + c as f64 * cfg.cell_w + dx, MARGIN + r as f64 * cfg.cell_h)
}

fn style(fold: Option<Fold>) -> (&'static str, &'static str) {
    match fold {
        Some(Fold::Mountain) => ("mountain", "stroke=\"#cc2222\" stroke-width=\"2\""),
        Some(Fold::Valley) => ("valley", "stroke=\"#22aa44\" stroke-width=\"2\" stroke-dasharray=\"6 4\""),
        None => ("unassigned", "stroke=\"#999999\" stroke-width=\"0.75\""),
    }
}

pub fn render_svg(s: &PartialMVAssignment, cfg: &RenderConfig) -> String {
    let size = s.size();
    let shear = cfg.cell_h / cfg.alpha_deg.to_radians().tan();
    let width = size.cols as f64 * cfg.cell_w + shear + 2.0 * MARGIN;
    let height = size.rows as f64 * cfg.cell_h + 2.0 * MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    )
    .unwrap();
    writeln!(out, "  <g fill=\"none\" stroke-linecap=\"round\">").unwrap();

    // Sheet outline.
    let outline: Vec<(f64, f64)> = (0..=size.rows)
        .map(|r| point(cfg, r, 0))
        .chain(std::iter::once(point(cfg, size.rows, size.cols)))
        .chain((0..=size.rows).rev().map(|r| point(cfg, r, size.cols)))
        .chain(std::iter::once(point(cfg, 0, 0)))
        .collect();
    let pts: String = outline.iter().map(|(x, y)| format!("{x:.2},{y:.2} ")).collect();
    writeln!(out, "    <polyline class=\"outline\" points=\"{}\" stroke=\"#333333\" stroke-width=\"1\"/>", pts.trim_end()).unwrap();

    // Horizontal crease lines.
    for r in 0..size.rows.saturating_sub(1) {
        for c in 0..size.cols {
            let fold = s.get(CreaseId::h(r, c));
            let (class, attrs) = style(fold);
            let (x1, y1) = point(cfg, r + 1, c);
            let (x2, y2) = point(cfg, r + 1, c + 1);
            writeln!(
                out,
                "    <line class=\"crease h {class}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" {attrs}/>"
            )
            .unwrap();
        }
    }
    // Zig-zag crease paths: one polyline per path when its folds are all
    // equal (monochrome), individual segments otherwise.
    for c in 0..size.cols.saturating_sub(1) {
        let folds: Vec<Option<Fold>> = (0..size.rows).map(|r| s.get(CreaseId::v(r, c))).collect();
        if folds.iter().all(|&f| f == folds[0]) {
            let (class, attrs) = style(folds[0]);
            let pts: String = (0..=size.rows)
                .map(|r| {
                    let (x, y) = point(cfg, r, c + 1);
                    format!("{x:.2},{y:.2} ")
                })
                .collect();
            writeln!(out, "    <polyline class=\"crease zigzag {class}\" points=\"{}\" {attrs}/>", pts.trim_end())
                .unwrap();
        } else {
            for (r, &fold) in folds.iter().enumerate() {
                let (class, attrs) = style(fold);
                let (x1, y1) = point(cfg, r, c + 1);
                let (x2, y2) = point(cfg, r + 1, c + 1);
                writeln!(
                    out,
                    "    <line class=\"crease v {class}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" {attrs}/>"
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
