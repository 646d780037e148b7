//! Placement of a square-like regular workspace inside the reachable region.
//!
//! The square is approximated by the Lamé curve
//! `|x - x_c|^n + |y - y_c|^n = l_b^n` with `l_b` the half-side, so a
//! 200 mm square is `l_b = 100`. Containment is checked by sampling the curve
//! densely and testing every sample (and the centre) for membership; the
//! worst violation is kept as a certificate. On top of that sit a grid search
//! over centres and a bisection on `l_b`. Sampling makes this a
//! semi-decision: sample counts are the accuracy knobs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::alpha::det_a_at;
use crate::design::{parse_tuple, Assembly, PlanarPose};
use crate::error::{Error, Result};
use crate::workspace::{Bounds, Workspace};

pub const DEFAULT_SAMPLES: usize = 1024;
pub const DEFAULT_GRID: usize = 128;

/// Even exponent `2 <= n <= 256` of a Lamé curve. Past the upper limit
/// the curve is a square to within floating-point resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LameExponent(u32);

impl LameExponent {
    pub const MAX: u32 = 256;

    pub fn new(n: u32) -> Result<Self> {
        if n < 2 || n % 2 != 0 || n > Self::MAX {
            return Err(Error::InvalidArgument(format!(
                "Lamé exponent must be an even integer in [2, {}], got {n}",
                Self::MAX
            )));
        }
        Ok(LameExponent(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for LameExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A candidate regular-workspace placement and its containment verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LamePlacement {
    pub x_c: f64,
    pub y_c: f64,
    /// Half-side of the approximated square, mm.
    pub l_b: f64,
    pub n: LameExponent,
    pub feasible: bool,
    /// Largest membership violation over the samples and the centre, mm.
    /// Zero when feasible.
    pub certificate: f64,
}

impl LamePlacement {
    /// An unchecked candidate.
    pub fn candidate(x_c: f64, y_c: f64, l_b: f64, n: LameExponent) -> Self {
        LamePlacement {
            x_c,
            y_c,
            l_b,
            n,
            feasible: false,
            certificate: f64::INFINITY,
        }
    }
}

/// Parses `x_c,y_c,l_b,n` into an unchecked candidate.
impl FromStr for LamePlacement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let [x_c, y_c, l_b, n] = parse_tuple::<4>(s)?;
        if l_b < 0.0 {
            return Err(Error::InvalidArgument(format!("l_b must be non-negative, got {l_b}")));
        }
        if n.fract() != 0.0 || !(0.0..=u32::MAX as f64).contains(&n) {
            return Err(Error::InvalidArgument(format!("Lamé exponent must be an integer, got {n}")));
        }
        Ok(LamePlacement::candidate(x_c, y_c, l_b, LameExponent::new(n as u32)?))
    }
}

/// Offsets of unit Lamé-curve points, uniform in polar angle starting on +x.
fn unit_offsets(n: u32, samples: usize) -> Vec<(f64, f64)> {
    let exp = n as i32;
    let inv = 1.0 / n as f64;
    (0..samples)
        .map(|k| {
            // Quadrant directions are exact so the cardinal points are.
            let (s, c) = if (4 * k) % samples == 0 {
                match 4 * k / samples {
                    0 => (0.0, 1.0),
                    1 => (1.0, 0.0),
                    2 => (0.0, -1.0),
                    _ => (-1.0, 0.0),
                }
            } else {
                (std::f64::consts::TAU * k as f64 / samples as f64).sin_cos()
            };
            let r = (c.abs().powi(exp) + s.abs().powi(exp)).powf(-inv);
            (r * c, r * s)
        })
        .collect()
}

/// Samples of `|x - x_c|^n + |y - y_c|^n = l_b^n`, uniform in polar angle
/// about the centre, starting on the +x axis and running counter-clockwise.
///
/// # Panics
///
/// If `l_b < 0`, `n` is zero or above [`LameExponent::MAX`], or `samples < 16`.
pub fn lame_boundary(x_c: f64, y_c: f64, l_b: f64, n: u32, samples: usize) -> Vec<PlanarPose> {
    assert!(l_b >= 0.0, "l_b must be non-negative");
    assert!(n > 0 && n <= LameExponent::MAX, "exponent out of range");
    assert!(samples >= 16, "at least 16 samples");
    unit_offsets(n, samples)
        .into_iter()
        .map(|(dx, dy)| PlanarPose::new(x_c + l_b * dx, y_c + l_b * dy))
        .collect()
}

/// Whether `point` lies in the closed Lamé region.
///
/// # Panics
///
/// If `n` is above [`LameExponent::MAX`].
pub fn lame_contains(x_c: f64, y_c: f64, l_b: f64, n: u32, point: PlanarPose) -> bool {
    assert!(n <= LameExponent::MAX, "exponent out of range");
    let e = n as i32;
    (point.x - x_c).abs().powi(e) + (point.y - y_c).abs().powi(e) <= l_b.powi(e)
}

/// Smallest membership margin over the centre and the scaled offsets.
fn min_margin(ws: &Workspace, x_c: f64, y_c: f64, l_b: f64, offsets: &[(f64, f64)]) -> f64 {
    let mut worst = ws.membership(PlanarPose::new(x_c, y_c)).margin;
    for &(dx, dy) in offsets {
        let m = ws.membership(PlanarPose::new(x_c + l_b * dx, y_c + l_b * dy)).margin;
        worst = worst.min(m);
    }
    worst
}

/// [`min_margin`] restricted to one aspect.
fn min_regular_margin(ws: &Workspace, x_c: f64, y_c: f64, l_b: f64, offsets: &[(f64, f64)]) -> f64 {
    let mut worst = ws.regular_margin(PlanarPose::new(x_c, y_c));
    for &(dx, dy) in offsets {
        worst = worst.min(ws.regular_margin(PlanarPose::new(x_c + l_b * dx, y_c + l_b * dy)));
    }
    worst
}

/// Fills in `feasible` and `certificate` for a candidate.
pub fn placement_feasible(ws: &Workspace, candidate: LamePlacement, samples: usize) -> LamePlacement {
    assert!(samples >= 256, "at least 256 samples");
    let offsets = unit_offsets(candidate.n.get(), samples);
    let margin = min_margin(ws, candidate.x_c, candidate.y_c, candidate.l_b, &offsets);
    LamePlacement {
        feasible: margin >= 0.0,
        certificate: (-margin).max(0.0),
        ..candidate
    }
}

/// How a candidate curve sits relative to the reachable region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellClass {
    /// Curve and centre inside: a feasible placement.
    Inside,
    /// No sample and not the centre inside: the curves do not meet and the
    /// square is not contained.
    Disjoint,
    /// The curve crosses the region boundary.
    Crossing,
}

impl CellClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CellClass::Inside => "inside",
            CellClass::Disjoint => "disjoint",
            CellClass::Crossing => "crossing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub ix: usize,
    pub iy: usize,
    pub x_c: f64,
    pub y_c: f64,
    pub class: CellClass,
    /// Smallest membership margin over centre and samples, mm.
    pub min_margin: f64,
    /// `+1`/`-1` when the whole placement keeps one sign of `det A`, else 0.
    /// Only evaluated for inside cells.
    pub aspect: i8,
    pub component: Option<usize>,
}

impl Cell {
    pub fn feasible(&self) -> bool {
        self.class == CellClass::Inside
    }
}

/// 4-connected group of cells sharing a non-crossing class.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub id: usize,
    pub class: CellClass,
    /// Indices into [`PlacementRaster::cells`].
    pub cells: Vec<usize>,
    /// Every placement in the component is contained in the reachable region.
    pub inside_workspace: bool,
    /// Additionally, every placement stays within one aspect (no contact
    /// with the parallel singularity).
    pub inside_aspect: bool,
}

/// Grid evaluation of candidate centres at a fixed size and exponent.
#[derive(Debug, Clone)]
pub struct PlacementRaster {
    pub l_b: f64,
    pub n: LameExponent,
    pub grid: usize,
    pub samples: usize,
    pub bounds: Option<Bounds>,
    /// Sign of `det A` on the working mode's side of the parallel
    /// singularity.
    pub preferred_aspect: i8,
    /// Row-major, `iy * grid + ix`.
    pub cells: Vec<Cell>,
    pub components: Vec<Component>,
}

impl PlacementRaster {
    pub fn feasible_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.feasible())
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_cells().next().is_none()
    }

    /// Largest component contained in the workspace, preferring components
    /// that stay in the working mode's aspect.
    pub fn largest_inside(&self) -> Option<&Component> {
        let rank = |c: &Component| (self.in_preferred_aspect(c), c.cells.len());
        self.components
            .iter()
            .filter(|c| c.inside_workspace)
            .fold(None, |best: Option<&Component>, c| match best {
                Some(b) if rank(b) >= rank(c) => Some(b),
                _ => Some(c),
            })
    }

    pub fn in_preferred_aspect(&self, c: &Component) -> bool {
        c.inside_aspect && self.cells[c.cells[0]].aspect == self.preferred_aspect
    }

    /// Most interior cell of the largest contained component.
    pub fn witness(&self) -> Option<PlanarPose> {
        let comp = self.largest_inside()?;
        comp.cells
            .iter()
            .map(|&i| &self.cells[i])
            .fold(None, |best: Option<&Cell>, c| match best {
                Some(b) if b.min_margin >= c.min_margin => Some(b),
                _ => Some(c),
            })
            .map(|c| PlanarPose::new(c.x_c, c.y_c))
    }

    /// `x,y,feasible,component,class` rows with a header; `component` is
    /// empty for crossing cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,feasible,component,class\n");
        for c in &self.cells {
            let comp = c.component.map(|id| id.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{:.6},{:.6},{},{},{}\n",
                c.x_c,
                c.y_c,
                u8::from(c.feasible()),
                comp,
                c.class.as_str()
            ));
        }
        out
    }
}

fn centre_of(bounds: &Bounds, grid: usize, ix: usize, iy: usize) -> (f64, f64) {
    (
        bounds.min_x + (ix as f64 + 0.5) * bounds.width() / grid as f64,
        bounds.min_y + (iy as f64 + 0.5) * bounds.height() / grid as f64,
    )
}

/// Feasible placements of a fixed curve over a `grid x grid` lattice of
/// centres spanning the workspace bounding box, with default sampling.
pub fn placement_region(ws: &Workspace, l_b: f64, n: LameExponent, grid: usize) -> Result<PlacementRaster> {
    placement_region_with(ws, l_b, n, grid, DEFAULT_SAMPLES)
}

pub fn placement_region_with(
    ws: &Workspace,
    l_b: f64,
    n: LameExponent,
    grid: usize,
    samples: usize,
) -> Result<PlacementRaster> {
    if grid < 32 {
        return Err(Error::InvalidArgument(format!("grid must be at least 32, got {grid}")));
    }
    if !(l_b > 0.0) || !l_b.is_finite() {
        return Err(Error::InvalidArgument(format!("l_b must be positive, got {l_b}")));
    }
    if samples < 256 {
        return Err(Error::InvalidArgument(format!("samples must be at least 256, got {samples}")));
    }
    let preferred_aspect = match ws.mode.assembly {
        Assembly::Upper => 1,
        Assembly::Lower => -1,
    };
    let bounds = match ws.boundary(64) {
        Ok(region) => region.bounds,
        Err(Error::DegenerateRegion) => {
            return Ok(PlacementRaster {
                l_b,
                n,
                grid,
                samples,
                bounds: None,
                preferred_aspect,
                cells: Vec::new(),
                components: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let offsets = unit_offsets(n.get(), samples);

    let mut cells: Vec<Cell> = (0..grid * grid)
        .into_par_iter()
        .map(|idx| {
            let (ix, iy) = (idx % grid, idx / grid);
            let (x_c, y_c) = centre_of(&bounds, grid, ix, iy);
            classify(ws, x_c, y_c, l_b, &offsets, ix, iy)
        })
        .collect();

    let components = label_components(&mut cells, grid);
    Ok(PlacementRaster {
        l_b,
        n,
        grid,
        samples,
        bounds: Some(bounds),
        preferred_aspect,
        cells,
        components,
    })
}

fn classify(ws: &Workspace, x_c: f64, y_c: f64, l_b: f64, offsets: &[(f64, f64)], ix: usize, iy: usize) -> Cell {
    let centre = ws.membership(PlanarPose::new(x_c, y_c)).margin;
    let mut worst = centre;
    let mut any_inside = centre >= 0.0;
    let mut all_inside = centre >= 0.0;
    for &(dx, dy) in offsets {
        let m = ws.membership(PlanarPose::new(x_c + l_b * dx, y_c + l_b * dy)).margin;
        worst = worst.min(m);
        any_inside |= m >= 0.0;
        all_inside &= m >= 0.0;
    }
    let class = if all_inside {
        CellClass::Inside
    } else if !any_inside {
        CellClass::Disjoint
    } else {
        CellClass::Crossing
    };
    let aspect = if class == CellClass::Inside {
        aspect_sign(ws, x_c, y_c, l_b, offsets)
    } else {
        0
    };
    Cell {
        ix,
        iy,
        x_c,
        y_c,
        class,
        min_margin: worst,
        aspect,
        component: None,
    }
}

fn aspect_sign(ws: &Workspace, x_c: f64, y_c: f64, l_b: f64, offsets: &[(f64, f64)]) -> i8 {
    let sign_at = |x: f64, y: f64| match det_a_at(&ws.params, PlanarPose::new(x, y), ws.mode) {
        Some(d) if d > 0.0 => 1i8,
        Some(d) if d < 0.0 => -1,
        _ => 0,
    };
    let first = sign_at(x_c, y_c);
    if first == 0 {
        return 0;
    }
    for &(dx, dy) in offsets {
        if sign_at(x_c + l_b * dx, y_c + l_b * dy) != first {
            return 0;
        }
    }
    first
}

fn label_components(cells: &mut [Cell], grid: usize) -> Vec<Component> {
    let mut components = Vec::new();
    for start in 0..cells.len() {
        if cells[start].component.is_some() || cells[start].class == CellClass::Crossing {
            continue;
        }
        let id = components.len();
        let class = cells[start].class;
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        cells[start].component = Some(id);
        while let Some(idx) = queue.pop_front() {
            members.push(idx);
            let (ix, iy) = (idx % grid, idx / grid);
            let mut neighbours = Vec::with_capacity(4);
            if ix > 0 {
                neighbours.push(idx - 1);
            }
            if ix + 1 < grid {
                neighbours.push(idx + 1);
            }
            if iy > 0 {
                neighbours.push(idx - grid);
            }
            if iy + 1 < grid {
                neighbours.push(idx + grid);
            }
            for nb in neighbours {
                if cells[nb].component.is_none() && cells[nb].class == class {
                    cells[nb].component = Some(id);
                    queue.push_back(nb);
                }
            }
        }
        members.sort_unstable();
        let inside = class == CellClass::Inside;
        let first_aspect = cells[members[0]].aspect;
        let inside_aspect = inside && first_aspect != 0 && members.iter().all(|&i| cells[i].aspect == first_aspect);
        components.push(Component {
            id,
            class,
            cells: members,
            inside_workspace: inside,
            inside_aspect,
        });
    }
    components
}

/// Largest regular workspace found by bisection on `l_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct InscribedSquare {
    pub x_c: f64,
    pub y_c: f64,
    /// Largest certified half-side, mm.
    pub l_b: f64,
    pub n: LameExponent,
    /// Certificate of the witness re-checked with four times the samples.
    pub certificate: f64,
    /// Every size tried, in order, with its verdict.
    pub trace: Vec<(f64, bool)>,
}

/// Sampling and grid resolution for [`max_inscribed_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchSettings {
    pub samples: usize,
    pub grid: usize,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchSettings {
            samples: DEFAULT_SAMPLES,
            grid: DEFAULT_GRID,
        }
    }
}

pub fn max_inscribed(ws: &Workspace, n: LameExponent, tolerance: f64) -> Result<InscribedSquare> {
    max_inscribed_with(ws, n, tolerance, SearchSettings::default())
}

/// Bisection on the half-side over "some centre admits a contained curve".
/// The curve must also stay on the working mode's side of the parallel
/// singularity, so the result is usable without crossing it. Each probe scans the centre lattice, then polishes the best few centres
/// with a compass search on the containment margin. The final witness is
/// re-certified with four times the samples and shrunk until it passes.
pub fn max_inscribed_with(
    ws: &Workspace,
    n: LameExponent,
    tolerance: f64,
    settings: SearchSettings,
) -> Result<InscribedSquare> {
    if !(tolerance > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
    }
    if settings.grid < 32 || settings.samples < 256 {
        return Err(Error::InvalidArgument("grid must be >= 32 and samples >= 256".into()));
    }
    let bounds = ws.boundary(64)?.bounds;
    let offsets = unit_offsets(n.get(), settings.samples);
    let mut trace = Vec::new();

    let probe = |l_b: f64, trace: &mut Vec<(f64, bool)>| {
        let found = best_centre(ws, &bounds, settings.grid, l_b, &offsets);
        let ok = found.is_some_and(|(_, m)| m >= 0.0);
        trace.push((l_b, ok));
        found.filter(|_| ok).map(|(c, _)| c)
    };

    let mut lo = 0.0;
    let mut witness = probe(lo, &mut trace).ok_or(Error::DegenerateRegion)?;
    let mut hi = 0.5 * bounds.width().min(bounds.height()) + tolerance;
    if let Some(c) = probe(hi, &mut trace) {
        // Cannot happen for a curve wider than the bounding box; keep the
        // bracket honest anyway.
        lo = hi;
        witness = c;
    }
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        match probe(mid, &mut trace) {
            Some(c) => {
                lo = mid;
                witness = c;
            }
            None => hi = mid,
        }
    }

    let mut l_b = lo;
    let fine = unit_offsets(n.get(), 4 * settings.samples);
    let certify = |l_b: f64, c: PlanarPose| {
        let margin = min_regular_margin(ws, c.x, c.y, l_b, &fine);
        LamePlacement {
            feasible: margin >= 0.0,
            certificate: (-margin).max(0.0),
            ..LamePlacement::candidate(c.x, c.y, l_b, n)
        }
    };
    let mut checked = certify(l_b, witness);
    while !checked.feasible && l_b > 0.0 {
        l_b = (l_b - tolerance / 4.0).max(0.0);
        checked = certify(l_b, witness);
    }
    Ok(InscribedSquare {
        x_c: witness.x,
        y_c: witness.y,
        l_b,
        n,
        certificate: checked.certificate,
        trace,
    })
}

/// Best centre for a fixed size: lattice scan, then compass-search polish
/// of the three best cells. Returns the centre and its margin.
fn best_centre(ws: &Workspace, bounds: &Bounds, grid: usize, l_b: f64, offsets: &[(f64, f64)]) -> Option<(PlanarPose, f64)> {
    let mut scored: Vec<(usize, f64)> = (0..grid * grid)
        .into_par_iter()
        .map(|idx| {
            let (x, y) = centre_of(bounds, grid, idx % grid, idx / grid);
            (idx, min_regular_margin(ws, x, y, l_b, offsets))
        })
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let step = (bounds.width().max(bounds.height()) / grid as f64).max(1e-3);
    scored
        .iter()
        .take(3)
        .map(|&(idx, m)| {
            let (x, y) = centre_of(bounds, grid, idx % grid, idx / grid);
            polish(ws, PlanarPose::new(x, y), m, l_b, offsets, step)
        })
        .fold(None, |best: Option<(PlanarPose, f64)>, cand| match best {
            Some(b) if b.1 >= cand.1 => Some(b),
            _ => Some(cand),
        })
}

fn polish(ws: &Workspace, start: PlanarPose, margin: f64, l_b: f64, offsets: &[(f64, f64)], step: f64) -> (PlanarPose, f64) {
    const D: f64 = std::f64::consts::FRAC_1_SQRT_2;
    const DIRS: [(f64, f64); 8] = [
        (1.0, 0.0),
        (-1.0, 0.0),
        (0.0, 1.0),
        (0.0, -1.0),
        (D, D),
        (-D, D),
        (D, -D),
        (-D, -D),
    ];
    let (mut best, mut best_m) = (start, margin);
    let mut step = step;
    let mut iterations = 0;
    while step > 1e-4 && iterations < 2000 {
        iterations += 1;
        let mut moved = false;
        for (dx, dy) in DIRS {
            let c = PlanarPose::new(best.x + step * dx, best.y + step * dy);
            let m = min_regular_margin(ws, c.x, c.y, l_b, offsets);
            if m > best_m {
                best = c;
                best_m = m;
                moved = true;
                break;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    (best, best_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::DesignParams;

    fn n(v: u32) -> LameExponent {
        LameExponent::new(v).unwrap()
    }

    #[test]
    fn exponent_must_be_even() {
        assert!(LameExponent::new(5).is_err());
        assert!(LameExponent::new(0).is_err());
        assert_eq!(LameExponent::new(12).unwrap().get(), 12);
        assert!(LameExponent::new(258).is_err());
        assert!(LameExponent::new(256).is_ok());
    }

    #[test]
    fn circle_for_n_two() {
        let pts = lame_boundary(10.0, -5.0, 100.0, 2, 64);
        assert_eq!((pts[0].x, pts[0].y), (110.0, -5.0));
        assert_eq!((pts[16].x, pts[16].y), (10.0, 95.0));
        assert_eq!((pts[32].x, pts[32].y), (-90.0, -5.0));
        assert_eq!((pts[48].x, pts[48].y), (10.0, -105.0));
        for p in &pts {
            assert!(((p.x - 10.0).hypot(p.y + 5.0) - 100.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_size_collapses() {
        assert!(lame_boundary(3.0, 4.0, 0.0, 12, 32).iter().all(|p| p.x == 3.0 && p.y == 4.0));
    }

    #[test]
    fn corner_of_n_twelve() {
        // 2 t^12 = 100^12  =>  t = 100 * 2^(-1/12).
        let t = 100.0 * 2f64.powf(-1.0 / 12.0);
        assert!((t - 94.387).abs() < 1e-3);
        let pts = lame_boundary(0.0, 0.0, 100.0, 12, 64);
        assert!((pts[8].x - t).abs() < 1e-9 && (pts[8].y - t).abs() < 1e-9);
        for p in &pts {
            let lhs = p.x.abs().powi(12) + p.y.abs().powi(12);
            assert!((lhs / 100f64.powi(12) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn parses_candidates() {
        let c: LamePlacement = "650,300,10,12".parse().unwrap();
        assert_eq!((c.x_c, c.y_c, c.l_b, c.n.get()), (650.0, 300.0, 10.0, 12));
        assert!("650,300,10,5".parse::<LamePlacement>().is_err());
        assert!("650,300,-1,4".parse::<LamePlacement>().is_err());
        assert!("650,300,10,4.5".parse::<LamePlacement>().is_err());
        assert!("650,300,10".parse::<LamePlacement>().is_err());
    }

    #[test]
    fn small_square_deep_inside() {
        let ws = Workspace::accessible(DesignParams::zoe());
        let r = placement_feasible(&ws, LamePlacement::candidate(650.0, 300.0, 10.0, n(12)), 256);
        assert!(r.feasible);
        assert_eq!(r.certificate, 0.0);
    }

    #[test]
    fn centre_outside_is_infeasible() {
        let ws = Workspace::accessible(DesignParams::zoe());
        let r = placement_feasible(&ws, LamePlacement::candidate(200.0, 0.0, 10.0, n(12)), 256);
        assert!(!r.feasible);
        assert!(r.certificate > 0.0);
    }

    #[test]
    fn point_on_boundary_is_feasible() {
        let ws = Workspace::accessible(DesignParams::zoe());
        let r = placement_feasible(&ws, LamePlacement::candidate(612.0, 0.0, 0.0, n(12)), 256);
        assert!(r.feasible);
        assert_eq!(r.certificate, 0.0);
    }

    #[test]
    fn oversized_square_has_no_placement() {
        let ws = Workspace::accessible(DesignParams::zoe());
        let raster = placement_region(&ws, 1000.0, n(12), 32).unwrap();
        assert!(raster.is_empty());
        assert!(raster.witness().is_none());
    }

    #[test]
    fn region_rejects_bad_arguments() {
        let ws = Workspace::accessible(DesignParams::zoe());
        assert!(placement_region(&ws, 100.0, n(12), 16).is_err());
        assert!(placement_region(&ws, 0.0, n(12), 32).is_err());
    }
}
