//! Independent reference computations for the integration tests.
//!
//! Nothing here calls the kinematics of the library: arm geometry is solved
//! from the mechanism sketch by bisection, and regions are rasterised.
#![allow(dead_code)]

use evcharge_kin::DesignParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bisection for a sign change of `f` on `[lo, hi]`.
pub fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if (fm > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Slider positions for V at `(x, y)`: each slider sits at distance `L` from
/// its arm tip, on the base side (left slider left of B, right slider right
/// of C). B and C are `L3/2` either side of V.
pub fn ik(p: &DesignParams, x: f64, y: f64) -> Option<(f64, f64)> {
    if (y - p.e1y).abs() > p.l || (y - p.e2y).abs() > p.l {
        return None;
    }
    let bx = x - p.l3 / 2.0;
    let cx = x + p.l3 / 2.0;
    // Left slider at e1x + rho1; distance to B shrinks as it approaches bx.
    let left = |rho: f64| (bx - p.e1x - rho).powi(2) + (y - p.e1y).powi(2) - p.l * p.l;
    let lo1 = bx - p.e1x - p.l;
    let rho1 = bisect(lo1, bx - p.e1x, left);
    // Right slider at L2 - e2x - rho2.
    let right = |rho: f64| (p.l2 - p.e2x - rho - cx).powi(2) + (y - p.e2y).powi(2) - p.l * p.l;
    let rho2 = bisect(p.l2 - p.e2x - cx - p.l, p.l2 - p.e2x - cx, right);
    Some((rho1, rho2))
}

/// Reachable with both sliders inside their strokes.
pub fn inside(p: &DesignParams, x: f64, y: f64) -> bool {
    ik(p, x, y).is_some_and(|(r1, r2)| {
        (p.rho1_min..=p.rho1_max).contains(&r1) && (p.rho2_min..=p.rho2_max).contains(&r2)
    })
}

/// Both assembly poses of V for slider positions `(rho1, rho2)`, found by
/// scanning the left arm angle. Sorted by descending y.
pub fn fk(p: &DesignParams, rho1: f64, rho2: f64) -> Vec<(f64, f64)> {
    let a1 = (p.e1x + rho1, p.e1y);
    let a2 = (p.l2 - p.e2x - rho2, p.e2y);
    // Tip B on the left circle; C = B + (L3, 0) must be at distance L from A2.
    let tip = |phi: f64| (a1.0 + p.l * phi.cos(), a1.1 + p.l * phi.sin());
    let r = |phi: f64| {
        let b = tip(phi);
        (b.0 + p.l3 - a2.0).powi(2) + (b.1 - a2.1).powi(2) - p.l * p.l
    };
    let steps = 4096;
    let step = std::f64::consts::TAU / steps as f64;
    let mut out = Vec::new();
    for i in 0..steps {
        let (a, b) = (-std::f64::consts::PI + i as f64 * step, -std::f64::consts::PI + (i + 1) as f64 * step);
        if (r(a) > 0.0) != (r(b) > 0.0) {
            let phi = bisect(a, b, r);
            let t = tip(phi);
            out.push((t.0 + p.l3 / 2.0, t.1));
        }
    }
    out.sort_by(|u, v| v.1.total_cmp(&u.1));
    out
}

/// Uniform random design near the prototype, valid and with a workspace of
/// at least 100 x 100 mm^2 by area.
pub fn random_design(rng: &mut impl Rng) -> DesignParams {
    loop {
        let p = random_candidate(rng);
        let area = evcharge_kin::Workspace::accessible(p).boundary(64).map_or(0.0, |r| r.area());
        if area > 1e4 {
            return p;
        }
    }
}

fn random_candidate(rng: &mut impl Rng) -> DesignParams {
    let mut p = DesignParams::zoe();
    p.l = rng.gen_range(350.0..700.0);
    p.l3 = rng.gen_range(60.0..250.0);
    p.l2 = rng.gen_range(900.0..1600.0);
    p.e1x = rng.gen_range(-30.0..30.0);
    p.e2x = rng.gen_range(-30.0..30.0);
    p.e1y = rng.gen_range(-20.0..20.0);
    p.e2y = rng.gen_range(-20.0..20.0);
    p.rho1_min = rng.gen_range(0.0..80.0);
    p.rho1_max = p.rho1_min + rng.gen_range(150.0..600.0);
    p.rho2_min = rng.gen_range(0.0..80.0);
    p.rho2_max = p.rho2_min + rng.gen_range(150.0..600.0);
    p.e3y = rng.gen_range(-20.0..20.0);
    p.e3z = rng.gen_range(0.0..20.0);
    p.e4y = rng.gen_range(-20.0..20.0);
    p.e4z = rng.gen_range(0.0..20.0);
    p.theta = rng.gen_range(0.2..1.3);
    p.validate().expect("random design is valid");
    p
}

/// Axis-aligned box that certainly contains the reachable region.
pub fn reach_box(p: &DesignParams) -> (f64, f64, f64, f64) {
    let min_x = p.e1x + p.rho1_min + p.l3 / 2.0 - p.l - 1.0;
    let max_x = p.l2 - p.e2x - p.rho2_min - p.l3 / 2.0 + p.l + 1.0;
    let min_y = p.e1y.min(p.e2y) - p.l - 1.0;
    let max_y = p.e1y.max(p.e2y) + p.l + 1.0;
    (min_x, max_x, min_y, max_y)
}

/// Monte-Carlo area of the reachable in-stroke region.
pub fn monte_carlo_area(p: &DesignParams, samples: usize, seed: u64) -> f64 {
    let (x0, x1, y0, y1) = reach_box(p);
    let chunks = 64;
    let per = samples / chunks;
    let hits: usize = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut r = rng(seed.wrapping_mul(1 << 20).wrapping_add(c as u64));
            (0..per)
                .filter(|_| inside(p, r.gen_range(x0..x1), r.gen_range(y0..y1)))
                .count()
        })
        .sum();
    hits as f64 / (per * chunks) as f64 * (x1 - x0) * (y1 - y0)
}

/// Raster of the region at spacing `h`: interior points and the exterior
/// points bordering them.
pub struct Raster {
    pub interior: Vec<(f64, f64)>,
    pub rim: Vec<(f64, f64)>,
    pub h: f64,
}

pub fn rasterise(p: &DesignParams, h: f64) -> Raster {
    rasterise_where(p, h, |x, y| inside(p, x, y))
}

/// As [`rasterise`] with a custom membership predicate.
pub fn rasterise_where(p: &DesignParams, h: f64, member: impl Fn(f64, f64) -> bool + Sync) -> Raster {
    let (x0, x1, y0, y1) = reach_box(p);
    let nx = ((x1 - x0) / h).ceil() as usize + 1;
    let ny = ((y1 - y0) / h).ceil() as usize + 1;
    let mask: Vec<bool> = (0..ny)
        .into_par_iter()
        .flat_map_iter(|j| (0..nx).map(move |i| (i, j)))
        .map(|(i, j)| member(x0 + i as f64 * h, y0 + j as f64 * h))
        .collect();
    let at = |i: usize, j: usize| mask[j * nx + i];
    let mut interior = Vec::new();
    let mut rim = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let pt = (x0 + i as f64 * h, y0 + j as f64 * h);
            if at(i, j) {
                interior.push(pt);
                continue;
            }
            let touches = (i > 0 && at(i - 1, j))
                || (i + 1 < nx && at(i + 1, j))
                || (j > 0 && at(i, j - 1))
                || (j + 1 < ny && at(i, j + 1));
            if touches {
                rim.push(pt);
            }
        }
    }
    Raster { interior, rim, h }
}

/// Largest Lamé half-side at centre `c` that avoids every rim point.
pub fn lame_radius(rim: &[(f64, f64)], n: u32, c: (f64, f64)) -> f64 {
    let e = n as i32;
    rim.iter()
        .map(|&(x, y)| ((x - c.0).abs().powi(e) + (y - c.1).abs().powi(e)).powf(1.0 / n as f64))
        .fold(f64::INFINITY, f64::min)
}

/// Monte-Carlo inscribed placement: the best of `trials` random interior
/// centres, then a shrinking compass search around the best few.
pub fn monte_carlo_inscribed(raster: &Raster, n: u32, trials: usize, seed: u64) -> (f64, (f64, f64)) {
    let mut r = rng(seed);
    let centres: Vec<(f64, f64)> = (0..trials)
        .map(|_| raster.interior[r.gen_range(0..raster.interior.len())])
        .collect();
    let mut scored: Vec<(f64, (f64, f64))> = centres
        .par_iter()
        .map(|&c| (lame_radius(&raster.rim, n, c), c))
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    scored
        .iter()
        .take(8)
        .map(|&(best, c)| {
            let (mut best, mut c) = (best, c);
            let mut step = 8.0 * raster.h;
            while step > raster.h / 16.0 {
                let mut moved = false;
                for (dx, dy) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
                    let cand = (c.0 + dx * step, c.1 + dy * step);
                    let v = lame_radius(&raster.rim, n, cand);
                    if v > best {
                        best = v;
                        c = cand;
                        moved = true;
                    }
                }
                if !moved {
                    step /= 2.0;
                }
            }
            (best, c)
        })
        .fold((f64::NEG_INFINITY, (0.0, 0.0)), |a, b| if b.0 > a.0 { b } else { a })
}
