//! SVG 1.1 drawings of workspace loops, singularity curves, Lamé overlays
//! and placement rasters.
//!
//! One user unit is one millimetre. Geometry is emitted inside a
//! `scale(1,-1)` group, so path coordinates are model coordinates and +y
//! points up on screen.

use std::fmt::Write;

use crate::design::PlanarPose;
use crate::placement::{lame_boundary, PlacementRaster};
use crate::workspace::{Bounds, WorkspaceRegion};

/// Accumulates elements in model coordinates.
#[derive(Debug, Clone)]
pub struct SvgDocument {
    view: Bounds,
    body: String,
}

fn path_data(pts: impl IntoIterator<Item = (f64, f64)>, close: bool) -> String {
    let mut d = String::new();
    for (i, (x, y)) in pts.into_iter().enumerate() {
        let _ = write!(d, "{}{x:.4},{y:.4} ", if i == 0 { "M" } else { "L" });
    }
    if close {
        d.push('Z');
    } else {
        d.pop();
    }
    d
}

impl SvgDocument {
    /// `pad` is added on every side of `bounds`, mm.
    pub fn new(bounds: Bounds, pad: f64) -> Self {
        Self {
            view: Bounds {
                min_x: bounds.min_x - pad,
                max_x: bounds.max_x + pad,
                min_y: bounds.min_y - pad,
                max_y: bounds.max_y + pad,
            },
            body: String::new(),
        }
    }

    pub fn closed_path(&mut self, pts: impl IntoIterator<Item = (f64, f64)>, class: &str, fill: &str, stroke: &str) {
        let d = path_data(pts, true);
        let _ = writeln!(
            self.body,
            r#"<path class="{class}" d="{d}" fill="{fill}" stroke="{stroke}" stroke-width="1"/>"#
        );
    }

    pub fn dashed_path(&mut self, pts: impl IntoIterator<Item = (f64, f64)>, class: &str, stroke: &str) {
        let d = path_data(pts, false);
        let _ = writeln!(
            self.body,
            r#"<path class="{class}" d="{d}" fill="none" stroke="{stroke}" stroke-width="1.5" stroke-dasharray="6,4"/>"#
        );
    }

    /// Axis-aligned cell centred on `(x, y)`.
    pub fn cell(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            r#"<rect x="{:.4}" y="{:.4}" width="{w:.4}" height="{h:.4}" fill="{fill}"/>"#,
            x - w / 2.0,
            y - h / 2.0
        );
    }

    pub fn marker(&mut self, x: f64, y: f64, color: &str) {
        let _ = writeln!(self.body, r#"<circle cx="{x:.4}" cy="{y:.4}" r="3" fill="{color}"/>"#);
    }

    pub fn finish(self) -> String {
        let v = self.view;
        let (w, h) = (v.width(), v.height());
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.4}mm\" height=\"{h:.4}mm\" viewBox=\"{:.4} {:.4} {w:.4} {h:.4}\">\n\
             <g transform=\"scale(1,-1)\">\n{}</g>\n</svg>\n",
            v.min_x, -v.max_y, self.body
        )
    }
}

/// A Lamé curve drawn on top of a workspace picture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LameOverlay {
    pub x_c: f64,
    pub y_c: f64,
    pub l_b: f64,
    pub n: u32,
}

/// Workspace loops (`class="boundary"`), singularity curves
/// (`class="locus"`, dashed) and Lamé overlays (`class="lame"`).
pub fn workspace_svg(region: &WorkspaceRegion, locus: &[Vec<PlanarPose>], overlays: &[LameOverlay]) -> String {
    let mut bounds = region.bounds;
    for o in overlays {
        bounds.min_x = bounds.min_x.min(o.x_c - o.l_b);
        bounds.max_x = bounds.max_x.max(o.x_c + o.l_b);
        bounds.min_y = bounds.min_y.min(o.y_c - o.l_b);
        bounds.max_y = bounds.max_y.max(o.y_c + o.l_b);
    }
    let mut doc = SvgDocument::new(bounds, 10.0);
    for lp in &region.loops {
        doc.closed_path(lp.iter().map(|v| (v.x, v.y)), "boundary", "#cfe3f7", "#1f5f9f");
    }
    for curve in locus {
        doc.dashed_path(curve.iter().map(|p| (p.x, p.y)), "locus", "#c0392b");
    }
    for o in overlays {
        let pts = lame_boundary(o.x_c, o.y_c, o.l_b, o.n, 256);
        doc.closed_path(pts.iter().map(|p| (p.x, p.y)), "lame", "none", "#27ae60");
        doc.marker(o.x_c, o.y_c, "#27ae60");
    }
    doc.finish()
}

/// Placement raster over the workspace outline: feasible centres green,
/// other cells inside the workspace grey, crossing cells blank. The witness
/// curve, if any, is drawn with `class="lame"`.
pub fn placement_svg(region: Option<&WorkspaceRegion>, raster: &PlacementRaster) -> String {
    let Some(bounds) = raster.bounds.or(region.map(|r| r.bounds)) else {
        let unit = Bounds {
            min_x: 0.0,
            max_x: 1.0,
            min_y: 0.0,
            max_y: 1.0,
        };
        return SvgDocument::new(unit, 0.0).finish();
    };
    let mut doc = SvgDocument::new(bounds, 10.0);
    let cw = bounds.width() / raster.grid as f64;
    let ch = bounds.height() / raster.grid as f64;
    for c in &raster.cells {
        if c.feasible() {
            doc.cell(c.x_c, c.y_c, cw, ch, "#2ecc71");
        } else if c.component.is_some() {
            doc.cell(c.x_c, c.y_c, cw, ch, "#dddddd");
        }
    }
    if let Some(r) = region {
        for lp in &r.loops {
            doc.closed_path(lp.iter().map(|v| (v.x, v.y)), "boundary", "none", "#1f5f9f");
        }
    }
    if let Some(w) = raster.witness() {
        let pts = lame_boundary(w.x, w.y, raster.l_b, raster.n.get(), 256);
        doc.closed_path(pts.iter().map(|p| (p.x, p.y)), "lame", "none", "#8e44ad");
        doc.marker(w.x, w.y, "#8e44ad");
    }
    doc.finish()
}
