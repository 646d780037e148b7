//! Reachable region of the planar mechanism.
//!
//! For a fixed height `y` every stroke limit bounds `x` from one side, so each
//! horizontal slice of the region is a single interval. The interval ends
//! trace half-circles of radius `L`: one per stroke bound, centred on the
//! slider joint at that end of its stroke. Boundary extraction walks those
//! arcs between their exact pairwise intersections.
//!
//! Membership is decided by the inverse kinematics. The circle inequalities
//! on the end-of-stroke anchors are evaluated as an independent cross-check;
//! each one needs a half-plane qualifier to be exact (a bare `>= L` also
//! admits points on the far side of the anchor circle).

use std::fmt;

use rayon::prelude::*;

use crate::alpha::{alpha_ik_unbounded, det_a_at};
use crate::contour::{join_segments, ScalarGrid};
use crate::design::{Assembly, DesignParams, JointVector, PlanarPose, WorkingMode};
use crate::error::{Error, Result};

/// Constraint that bounds the region at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintTag {
    LeftReach,
    RightReach,
    LeftStrokeMin,
    LeftStrokeMax,
    RightStrokeMin,
    RightStrokeMax,
}

impl ConstraintTag {
    pub const ALL: [ConstraintTag; 6] = [
        ConstraintTag::LeftReach,
        ConstraintTag::RightReach,
        ConstraintTag::LeftStrokeMin,
        ConstraintTag::LeftStrokeMax,
        ConstraintTag::RightStrokeMin,
        ConstraintTag::RightStrokeMax,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintTag::LeftReach => "left_reach",
            ConstraintTag::RightReach => "right_reach",
            ConstraintTag::LeftStrokeMin => "left_stroke_min",
            ConstraintTag::LeftStrokeMax => "left_stroke_max",
            ConstraintTag::RightStrokeMin => "right_stroke_min",
            ConstraintTag::RightStrokeMax => "right_stroke_max",
        }
    }
}

impl fmt::Display for ConstraintTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Slider-joint x positions at the ends of the strokes.
///
/// `e5x` is joint A at the end of the left stroke, `e7x` and `e6x` are joint E
/// at the two ends of the right stroke. `e7x` pairs with the outer (`>= L`)
/// circle inequality and `e6x` with the inner (`<= L`) one, which fixes
/// `e7x` at the short-stroke end and `e6x` at the long-stroke end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrokeAnchors {
    /// Joint A at the short end of the left stroke (`e1x` when `rho1_min = 0`).
    pub a_min: f64,
    pub e5x: f64,
    pub e6x: f64,
    pub e7x: f64,
}

impl StrokeAnchors {
    pub fn new(p: &DesignParams) -> Self {
        StrokeAnchors {
            a_min: p.e1x + p.rho1_min,
            e5x: p.e1x + p.rho1_max,
            e6x: p.l2 - p.e2x - p.rho2_max,
            e7x: p.l2 - p.e2x - p.rho2_min,
        }
    }
}

/// Signed residual of every constraint at a point, in mm. Positive inside.
/// Stroke residuals are `None` when an arm cannot reach the point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub left_reach: f64,
    pub right_reach: f64,
    pub stroke: Option<[f64; 4]>,
}

impl Residuals {
    pub fn get(&self, tag: ConstraintTag) -> Option<f64> {
        match tag {
            ConstraintTag::LeftReach => Some(self.left_reach),
            ConstraintTag::RightReach => Some(self.right_reach),
            ConstraintTag::LeftStrokeMin => self.stroke.map(|s| s[0]),
            ConstraintTag::LeftStrokeMax => self.stroke.map(|s| s[1]),
            ConstraintTag::RightStrokeMin => self.stroke.map(|s| s[2]),
            ConstraintTag::RightStrokeMax => self.stroke.map(|s| s[3]),
        }
    }

    fn iter(&self) -> impl Iterator<Item = (ConstraintTag, f64)> + '_ {
        ConstraintTag::ALL
            .into_iter()
            .filter_map(|t| self.get(t).map(|v| (t, v)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub inside: bool,
    /// Smallest constraint residual (mm); negative outside.
    pub margin: f64,
    /// Constraint attaining the margin.
    pub active: ConstraintTag,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub min_x: f64,
    pub max_x: f64,
    pub min_y: f64,
    pub max_y: f64,
}

impl Bounds {
    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    fn include(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.max_x = self.max_x.max(x);
        self.min_y = self.min_y.min(y);
        self.max_y = self.max_y.max(y);
    }

    fn empty() -> Self {
        Bounds {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryVertex {
    pub x: f64,
    pub y: f64,
    pub tag: ConstraintTag,
}

/// Sampled boundary of the reachable region: one closed loop per connected
/// component, counter-clockwise, last vertex not repeated.
#[derive(Debug, Clone, PartialEq)]
pub struct WorkspaceRegion {
    pub params: DesignParams,
    pub mode: WorkingMode,
    pub bounds: Bounds,
    pub loops: Vec<Vec<BoundaryVertex>>,
}

impl WorkspaceRegion {
    /// Shoelace area summed over loops, mm^2.
    pub fn area(&self) -> f64 {
        self.loops
            .iter()
            .map(|lp| {
                let n = lp.len();
                let twice: f64 = (0..n)
                    .map(|i| {
                        let (a, b) = (lp[i], lp[(i + 1) % n]);
                        a.x * b.y - b.x * a.y
                    })
                    .sum();
                twice / 2.0
            })
            .sum()
    }

    /// `x,y,tag,loop` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,tag,loop\n");
        for (idx, lp) in self.loops.iter().enumerate() {
            for v in lp {
                out.push_str(&format!("{:.6},{:.6},{},{}\n", v.x, v.y, v.tag, idx));
            }
        }
        out
    }
}

/// Half-circle `x = cx + side * sqrt(L^2 - (y - cy)^2)` carrying one stroke bound.
#[derive(Debug, Clone, Copy)]
struct Arc {
    cx: f64,
    cy: f64,
    side: f64,
    tag: ConstraintTag,
}

impl Arc {
    fn x_at(&self, l: f64, y: f64) -> f64 {
        let dy = (y - self.cy).abs();
        self.cx + self.side * ((l - dy) * (l + dy)).max(0.0).sqrt()
    }

    fn angle_of(&self, l: f64, y: f64) -> f64 {
        ((y - self.cy) / l).clamp(-1.0, 1.0).asin()
    }
}

/// The reachable region of a design under one working mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Workspace {
    pub params: DesignParams,
    pub mode: WorkingMode,
}

impl Workspace {
    pub fn new(params: DesignParams, mode: WorkingMode) -> Self {
        Workspace { params, mode }
    }

    pub fn accessible(params: DesignParams) -> Self {
        Workspace {
            params,
            mode: WorkingMode::accessible(&params),
        }
    }

    pub fn anchors(&self) -> StrokeAnchors {
        StrokeAnchors::new(&self.params)
    }

    pub fn residuals(&self, point: PlanarPose) -> Residuals {
        let p = &self.params;
        let left_reach = p.l - (point.y - p.e1y).abs();
        let right_reach = p.l - (point.y - p.e2y).abs();
        let stroke = alpha_ik_unbounded(p, point, self.mode).ok().map(|q| {
            [
                q.rho1 - p.rho1_min,
                p.rho1_max - q.rho1,
                q.rho2 - p.rho2_min,
                p.rho2_max - q.rho2,
            ]
        });
        Residuals {
            left_reach,
            right_reach,
            stroke,
        }
    }

    /// Reachability of `point` with in-stroke joints, with the smallest
    /// constraint residual as a signed margin.
    pub fn membership(&self, point: PlanarPose) -> Membership {
        let r = self.residuals(point);
        let (active, margin) = r
            .iter()
            .fold((ConstraintTag::LeftReach, f64::INFINITY), |best, (t, v)| {
                if v < best.1 {
                    (t, v)
                } else {
                    best
                }
            });
        let inside = margin >= 0.0;
        debug_assert!(
            margin.abs() <= 1e-6 * self.params.l.max(1.0) || inside == self.circle_inequalities(point),
            "membership and circle inequalities disagree at {point:?}"
        );
        Membership {
            inside,
            margin,
            active,
        }
    }

    /// Signed distance-like margin to the parallel singularity, positive on
    /// the side of the working mode's assembly: `det A / (|u1| + |u2|)`,
    /// where `u` are the horizontal arm offsets. Equals `y - e1y` on the upper
    /// side when `e1y = e2y`. `None` where an arm cannot reach.
    pub fn aspect_margin(&self, point: PlanarPose) -> Option<f64> {
        let q = alpha_ik_unbounded(&self.params, point, self.mode).ok()?;
        Some(self.aspect_margin_with(point, &q))
    }

    fn aspect_margin_with(&self, point: PlanarPose, q: &JointVector) -> f64 {
        let p = &self.params;
        let u1 = point.x - p.e1x - q.rho1 - p.l3 / 2.0;
        let u2 = p.l2 - point.x - p.l3 / 2.0 - p.e2x - q.rho2;
        let det = u1 * (point.y - p.e2y) + u2 * (point.y - p.e1y);
        let sign = match self.mode.assembly {
            Assembly::Upper => 1.0,
            Assembly::Lower => -1.0,
        };
        let scale = u1.abs() + u2.abs();
        if scale > 0.0 {
            sign * det / scale
        } else {
            0.0
        }
    }

    /// Smaller of the membership margin and the aspect margin: non-negative
    /// iff `point` is reachable in stroke on the working mode's side of the
    /// parallel singularity.
    pub fn regular_margin(&self, point: PlanarPose) -> f64 {
        let p = &self.params;
        let reach = (p.l - (point.y - p.e1y).abs()).min(p.l - (point.y - p.e2y).abs());
        let Ok(q) = alpha_ik_unbounded(p, point, self.mode) else { return reach };
        reach
            .min(q.rho1 - p.rho1_min)
            .min(p.rho1_max - q.rho1)
            .min(q.rho2 - p.rho2_min)
            .min(p.rho2_max - q.rho2)
            .min(self.aspect_margin_with(point, &q))
    }

    /// Membership through the end-of-stroke circle inequalities alone:
    /// squared distances to the anchor circles plus the half-plane each
    /// inequality applies to. Agrees with [`Workspace::membership`] away from
    /// the boundary.
    pub fn circle_inequalities(&self, point: PlanarPose) -> bool {
        let p = &self.params;
        let a = self.anchors();
        let l2 = p.l * p.l;
        let dy1 = point.y - p.e1y;
        let dy2 = point.y - p.e2y;
        if dy1 * dy1 > l2 || dy2 * dy2 > l2 {
            return false;
        }
        // d >= -sigma * sqrt(L^2 - dy^2), decided without the square root.
        let at_least = |d: f64, dy: f64, sigma: f64| {
            let outside = d * d + dy * dy >= l2;
            let inside = d * d + dy * dy <= l2;
            if sigma < 0.0 {
                d >= 0.0 && outside
            } else {
                d >= 0.0 || inside
            }
        };
        let at_most = |d: f64, dy: f64, sigma: f64| at_least(-d, dy, -sigma);
        let s1 = self.mode.left.sign();
        let s2 = self.mode.right.sign();
        let bx = point.x - p.l3 / 2.0;
        let cx = point.x + p.l3 / 2.0;
        at_least(bx - a.a_min, dy1, s1)
            && at_most(bx - a.e5x, dy1, s1)
            && at_least(a.e7x - cx, dy2, s2)
            && at_most(a.e6x - cx, dy2, s2)
    }

    fn arcs(&self) -> ([Arc; 2], [Arc; 2]) {
        let p = &self.params;
        let s1 = self.mode.left.sign();
        let s2 = self.mode.right.sign();
        let lo = [
            Arc {
                cx: p.e1x + p.rho1_min + p.l3 / 2.0,
                cy: p.e1y,
                side: -s1,
                tag: ConstraintTag::LeftStrokeMin,
            },
            Arc {
                cx: p.l2 - p.l3 / 2.0 - p.e2x - p.rho2_max,
                cy: p.e2y,
                side: s2,
                tag: ConstraintTag::RightStrokeMax,
            },
        ];
        let hi = [
            Arc {
                cx: p.e1x + p.rho1_max + p.l3 / 2.0,
                cy: p.e1y,
                side: -s1,
                tag: ConstraintTag::LeftStrokeMax,
            },
            Arc {
                cx: p.l2 - p.l3 / 2.0 - p.e2x - p.rho2_min,
                cy: p.e2y,
                side: s2,
                tag: ConstraintTag::RightStrokeMin,
            },
        ];
        (lo, hi)
    }

    /// Heights where two bounding arcs meet.
    fn breakpoints(&self, arcs: &[Arc; 4]) -> Vec<f64> {
        let l = self.params.l;
        let tol = 1e-9 * l;
        let mut ys = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = (arcs[i], arcs[j]);
                let (dx, dy) = (b.cx - a.cx, b.cy - a.cy);
                let d = dx.hypot(dy);
                if d == 0.0 || d > 2.0 * l {
                    continue;
                }
                let half = d / 2.0;
                let h = ((l - half) * (l + half)).max(0.0).sqrt();
                let (ux, uy) = (dx / d, dy / d);
                let (mx, my) = (a.cx + half * ux, a.cy + half * uy);
                for sign in [-1.0, 1.0] {
                    let (px, py) = (mx - sign * h * uy, my + sign * h * ux);
                    if a.side * (px - a.cx) >= -tol && b.side * (px - b.cx) >= -tol {
                        ys.push(py);
                    }
                }
            }
        }
        ys
    }

    /// Closed boundary loops sampled with `samples_per_arc` segments per arc piece.
    pub fn boundary(&self, samples_per_arc: usize) -> Result<WorkspaceRegion> {
        if samples_per_arc < 8 {
            return Err(Error::InvalidArgument(format!(
                "samples_per_arc must be at least 8, got {samples_per_arc}"
            )));
        }
        let p = &self.params;
        let l = p.l;
        let y_lo = p.e1y.max(p.e2y) - l;
        let y_hi = p.e1y.min(p.e2y) + l;
        if !(y_lo < y_hi) {
            return Err(Error::DegenerateRegion);
        }
        let (lo, hi) = self.arcs();
        let all = [lo[0], lo[1], hi[0], hi[1]];
        let mut ys: Vec<f64> = self
            .breakpoints(&all)
            .into_iter()
            .filter(|y| *y > y_lo && *y < y_hi)
            .collect();
        ys.push(y_lo);
        ys.push(y_hi);
        ys.sort_by(f64::total_cmp);
        ys.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * l);

        let left = |y: f64| -> (f64, usize) {
            let (a, b) = (lo[0].x_at(l, y), lo[1].x_at(l, y));
            if a >= b {
                (a, 0)
            } else {
                (b, 1)
            }
        };
        let right = |y: f64| -> (f64, usize) {
            let (a, b) = (hi[0].x_at(l, y), hi[1].x_at(l, y));
            if a <= b {
                (a, 0)
            } else {
                (b, 1)
            }
        };
        let width = |y: f64| right(y).0 - left(y).0;
        let pinch = 1e-9 * l;

        // Feasible slabs between consecutive breakpoints, grouped into components.
        let mut components: Vec<Vec<(f64, f64, usize, usize)>> = Vec::new();
        let mut current: Vec<(f64, f64, usize, usize)> = Vec::new();
        for w in ys.windows(2) {
            let (y0, y1) = (w[0], w[1]);
            let mid = 0.5 * (y0 + y1);
            let feasible = width(mid) > 0.0;
            if feasible && (current.is_empty() || width(y0) > pinch) {
                current.push((y0, y1, left(mid).1, right(mid).1));
                continue;
            }
            if !current.is_empty() {
                components.push(std::mem::take(&mut current));
            }
            if feasible {
                current.push((y0, y1, left(mid).1, right(mid).1));
            }
        }
        if !current.is_empty() {
            components.push(current);
        }
        if components.is_empty() {
            return Err(Error::DegenerateRegion);
        }

        let mut bounds = Bounds::empty();
        let mut loops = Vec::with_capacity(components.len());
        for slabs in &components {
            let mut lp: Vec<BoundaryVertex> = Vec::new();
            let ya = slabs[0].0;
            let yb = slabs[slabs.len() - 1].1;

            // Right chain upwards.
            for (k, &(y0, y1, _, ri)) in slabs.iter().enumerate() {
                sample_arc(&hi[ri], l, y0, y1, samples_per_arc, k > 0, &mut lp);
            }
            // Top edge along the reach limit, right to left.
            if width(yb) > pinch {
                let tag = reach_tag(p, yb);
                let (xr, xl) = (right(yb).0, left(yb).0);
                for k in 1..samples_per_arc {
                    let t = k as f64 / samples_per_arc as f64;
                    lp.push(BoundaryVertex { x: xr + t * (xl - xr), y: yb, tag });
                }
            }
            // Left chain downwards.
            let mut left_chain = Vec::new();
            for (k, &(y0, y1, li, _)) in slabs.iter().enumerate() {
                sample_arc(&lo[li], l, y0, y1, samples_per_arc, k > 0, &mut left_chain);
            }
            left_chain.reverse();
            let skip_top = usize::from(width(yb) <= pinch);
            lp.extend(left_chain.into_iter().skip(skip_top));
            // Bottom edge, left to right.
            if width(ya) > pinch {
                let tag = reach_tag(p, ya);
                let (xl, xr) = (left(ya).0, right(ya).0);
                for k in 1..samples_per_arc {
                    let t = k as f64 / samples_per_arc as f64;
                    lp.push(BoundaryVertex { x: xl + t * (xr - xl), y: ya, tag });
                }
            } else {
                // Bottom corner was emitted first by the right chain.
                lp.pop();
            }
            for v in &lp {
                bounds.include(v.x, v.y);
            }
            loops.push(lp);
        }

        Ok(WorkspaceRegion {
            params: *p,
            mode: self.mode,
            bounds,
            loops,
        })
    }

    /// Parallel-singularity curves (`det A = 0`) clipped to the region.
    /// `grid` is the number of cells per axis over the region's bounding box.
    pub fn singularity_locus(&self, grid: usize) -> Result<Vec<Vec<PlanarPose>>> {
        if grid < 32 {
            return Err(Error::InvalidArgument(format!("grid must be at least 32, got {grid}")));
        }
        let region = match self.boundary(64) {
            Ok(r) => r,
            Err(Error::DegenerateRegion) => return Ok(Vec::new()),
            Err(e) => return Err(e),
        };
        let b = region.bounds;
        let step = (b.width() / grid as f64, b.height() / grid as f64);
        let rows: Vec<Vec<Option<f64>>> = (0..=grid)
            .into_par_iter()
            .map(|j| {
                (0..=grid)
                    .map(|i| {
                        let pose = PlanarPose::new(b.min_x + i as f64 * step.0, b.min_y + j as f64 * step.1);
                        det_a_at(&self.params, pose, self.mode)
                    })
                    .collect()
            })
            .collect();
        let field = ScalarGrid {
            origin: (b.min_x, b.min_y),
            step,
            nx: grid,
            ny: grid,
            values: rows.into_iter().flatten().collect(),
        };
        let mut kept = Vec::new();
        for seg in field.zero_segments() {
            self.clip_segment(seg, &mut kept, 2);
        }
        let tol = 1e-7 * step.0.min(step.1).max(f64::MIN_POSITIVE);
        Ok(join_segments(&kept, tol)
            .into_iter()
            .map(|line| line.into_iter().map(|(x, y)| PlanarPose::new(x, y)).collect())
            .collect())
    }

    fn clip_segment(&self, seg: [(f64, f64); 2], out: &mut Vec<[(f64, f64); 2]>, depth: u8) {
        let inside = |p: (f64, f64)| self.membership(PlanarPose::new(p.0, p.1)).inside;
        let (a, b) = (seg[0], seg[1]);
        let lerp = |t: f64| (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1));
        match (inside(a), inside(b)) {
            (true, true) => out.push(seg),
            (true, false) | (false, true) => {
                let from_a = inside(a);
                let (mut t_in, mut t_out) = if from_a { (0.0, 1.0) } else { (1.0, 0.0) };
                for _ in 0..60 {
                    let t = 0.5 * (t_in + t_out);
                    if inside(lerp(t)) {
                        t_in = t;
                    } else {
                        t_out = t;
                    }
                }
                let cut = lerp(t_in);
                out.push(if from_a { [a, cut] } else { [cut, b] });
            }
            (false, false) => {
                let mid = lerp(0.5);
                if depth > 0 && inside(mid) {
                    self.clip_segment([a, mid], out, depth - 1);
                    self.clip_segment([mid, b], out, depth - 1);
                }
            }
        }
    }
}

fn reach_tag(p: &DesignParams, y: f64) -> ConstraintTag {
    if p.l - (y - p.e1y).abs() <= p.l - (y - p.e2y).abs() {
        ConstraintTag::LeftReach
    } else {
        ConstraintTag::RightReach
    }
}

/// Appends samples of `arc` between heights `y0 < y1`, uniform in the arc
/// angle. The x-extreme of the arc is inserted when it falls inside.
fn sample_arc(arc: &Arc, l: f64, y0: f64, y1: f64, n: usize, skip_first: bool, out: &mut Vec<BoundaryVertex>) {
    let (a0, a1) = (arc.angle_of(l, y0), arc.angle_of(l, y1));
    let push = |out: &mut Vec<BoundaryVertex>, x: f64, y: f64| out.push(BoundaryVertex { x, y, tag: arc.tag });
    for k in 0..=n {
        if k == 0 && skip_first {
            continue;
        }
        let y = match k {
            0 => y0,
            k if k == n => y1,
            _ => arc.cy + l * (a0 + (a1 - a0) * k as f64 / n as f64).sin(),
        };
        let prev_angle = a0 + (a1 - a0) * (k.max(1) - 1) as f64 / n as f64;
        let angle = a0 + (a1 - a0) * k as f64 / n as f64;
        if k > 0 && prev_angle < 0.0 && angle > 0.0 {
            push(out, arc.cx + arc.side * l, arc.cy);
        }
        push(out, arc.x_at(l, y), y);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aspect_margin_is_height_for_level_rails() {
        let ws = Workspace::accessible(DesignParams::zoe());
        for (x, y) in [(570.0, 335.0), (650.0, -120.0), (612.0, 0.0)] {
            let a = ws.aspect_margin(PlanarPose::new(x, y)).unwrap();
            assert!((a - y).abs() < 1e-9, "{a} vs {y}");
        }
        let pt = PlanarPose::new(570.0, 335.0);
        assert_eq!(ws.regular_margin(pt), ws.membership(pt).margin);
        assert!(ws.regular_margin(PlanarPose::new(650.0, -10.0)) <= -10.0 + 1e-9);
        assert!(ws.aspect_margin(PlanarPose::new(650.0, 600.0)).is_none());
    }
    use crate::alpha::alpha_ik;

    fn zoe() -> Workspace {
        Workspace::accessible(DesignParams::zoe())
    }

    #[test]
    fn interior_and_exterior_points() {
        let ws = zoe();
        let m = ws.membership(PlanarPose::new(570.0, 335.0));
        assert!(m.inside && m.margin > 0.0);
        assert!(alpha_ik(&ws.params, PlanarPose::new(570.0, 335.0), ws.mode).is_ok());
        let m = ws.membership(PlanarPose::new(650.0, 533.0));
        assert!(!m.inside);
        assert_eq!(m.active, ConstraintTag::LeftReach);
        assert_eq!(m.margin, -1.0);
    }

    #[test]
    fn stroke_end_point_has_zero_margin() {
        let m = zoe().membership(PlanarPose::new(612.0, 0.0));
        assert!(m.inside);
        assert_eq!(m.margin, 0.0);
        assert_eq!(m.active, ConstraintTag::LeftStrokeMin);
    }

    #[test]
    fn anchors_follow_strokes() {
        let a = zoe().anchors();
        assert_eq!((a.a_min, a.e5x, a.e6x, a.e7x), (0.0, 500.0, 800.0, 1300.0));
    }

    #[test]
    fn circle_inequalities_agree_with_ik_on_grid() {
        let ws = zoe();
        let mut checked = 0;
        for i in 0..=120 {
            for j in 0..=120 {
                let pt = PlanarPose::new(200.0 + 7.5 * i as f64, -600.0 + 10.0 * j as f64);
                let m = ws.membership(pt);
                if m.margin.abs() > 1e-6 {
                    assert_eq!(m.inside, ws.circle_inequalities(pt), "{pt:?}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 14000);
    }

    #[test]
    fn bare_printed_inequalities_are_not_exact() {
        // Far left of the rho1_min circle: outside it (>= L) but unreachable.
        let ws = zoe();
        let pt = PlanarPose::new(-600.0, 0.0);
        let bx: f64 = pt.x - 80.0;
        assert!(bx.hypot(pt.y) >= 532.0);
        assert!(!ws.membership(pt).inside);
        assert!(!ws.circle_inequalities(pt));
    }

    #[test]
    fn boundary_rejects_few_samples() {
        assert!(matches!(zoe().boundary(4), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn boundary_vertices_lie_on_the_boundary() {
        let ws = zoe();
        let region = ws.boundary(32).unwrap();
        assert_eq!(region.loops.len(), 1);
        for v in &region.loops[0] {
            let m = ws.membership(PlanarPose::new(v.x, v.y));
            assert!(m.margin.abs() <= 1e-6, "{v:?} {m:?}");
            let r = ws.residuals(PlanarPose::new(v.x, v.y)).get(v.tag).unwrap();
            assert!(r.abs() <= 1e-6, "{v:?} {r}");
        }
        assert!(region.area() > 0.0);
    }

    #[test]
    fn degenerate_when_strokes_cannot_close() {
        let mut p = DesignParams::zoe();
        p.rho1_max = 0.0;
        p.rho2_max = 0.0;
        p.l2 = 2000.0;
        let ws = Workspace::accessible(p);
        assert!(matches!(ws.boundary(16), Err(Error::DegenerateRegion)));
        assert!(ws.singularity_locus(32).unwrap().is_empty());
    }

    #[test]
    fn split_region_has_two_loops() {
        // Both strokes start at 100: the flat posture y = 0 is out of reach.
        let mut p = DesignParams::zoe();
        p.rho1_min = 100.0;
        p.rho2_min = 100.0;
        let ws = Workspace::accessible(p);
        let region = ws.boundary(16).unwrap();
        assert_eq!(region.loops.len(), 2);
        assert!(!ws.membership(PlanarPose::new(650.0, 0.0)).inside);
    }

    #[test]
    fn locus_follows_flat_posture() {
        let ws = zoe();
        let locus = ws.singularity_locus(64).unwrap();
        assert!(!locus.is_empty());
        let pts: Vec<&PlanarPose> = locus.iter().flatten().collect();
        assert!(pts.iter().all(|p| p.y.abs() < 1e-6));
        let min_x = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
        let max_x = pts.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
        assert!((min_x - 612.0).abs() < 1e-6 && (max_x - 688.0).abs() < 1e-6, "{min_x} {max_x}");
    }

    #[test]
    fn locus_is_empty_when_flat_posture_is_excluded() {
        let mut p = DesignParams::zoe();
        p.rho1_min = 100.0;
        p.rho2_min = 100.0;
        let locus = Workspace::accessible(p).singularity_locus(64).unwrap();
        assert!(locus.is_empty(), "{locus:?}");
    }
}
