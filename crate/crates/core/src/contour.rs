//! Marching squares over a regular grid of optional samples.

use std::collections::HashMap;

/// Values sampled at `(nx + 1) x (ny + 1)` nodes, row-major from the lower-left
/// corner. `None` marks nodes where the field is undefined; cells touching
/// such a node produce no contour.
#[derive(Debug, Clone)]
pub struct ScalarGrid {
    pub origin: (f64, f64),
    pub step: (f64, f64),
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<Option<f64>>,
}

impl ScalarGrid {
    pub fn sample(origin: (f64, f64), step: (f64, f64), nx: usize, ny: usize, f: impl Fn(f64, f64) -> Option<f64>) -> Self {
        let mut values = Vec::with_capacity((nx + 1) * (ny + 1));
        for j in 0..=ny {
            for i in 0..=nx {
                values.push(f(origin.0 + i as f64 * step.0, origin.1 + j as f64 * step.1));
            }
        }
        ScalarGrid {
            origin,
            step,
            nx,
            ny,
            values,
        }
    }

    fn at(&self, i: usize, j: usize) -> Option<f64> {
        self.values[j * (self.nx + 1) + i]
    }

    fn node(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.origin.0 + i as f64 * self.step.0,
            self.origin.1 + j as f64 * self.step.1,
        )
    }

    /// Zero-level segments. Nodes with value exactly zero count as positive.
    pub fn zero_segments(&self) -> Vec<[(f64, f64); 2]> {
        let mut out = Vec::new();
        for j in 0..self.ny {
            for i in 0..self.nx {
                let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
                let mut vals = [0.0; 4];
                let mut defined = true;
                for (slot, &(ci, cj)) in vals.iter_mut().zip(&corners) {
                    match self.at(ci, cj) {
                        Some(v) if v.is_finite() => *slot = v,
                        _ => defined = false,
                    }
                }
                if !defined {
                    continue;
                }
                let pos = vals.map(|v| v >= 0.0);
                // Edge k joins corner k and corner k+1.
                let mut crossing: [Option<(f64, f64)>; 4] = [None; 4];
                for k in 0..4 {
                    let (a, b) = (k, (k + 1) % 4);
                    if pos[a] != pos[b] {
                        // Interpolate from the lower node so neighbouring cells agree bitwise.
                        let (a, b) = if (corners[a].1, corners[a].0) <= (corners[b].1, corners[b].0) { (a, b) } else { (b, a) };
                        let t = vals[a] / (vals[a] - vals[b]);
                        let pa = self.node(corners[a].0, corners[a].1);
                        let pb = self.node(corners[b].0, corners[b].1);
                        crossing[k] = Some(if t >= 1.0 { pb } else { (pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1)) });
                    }
                }
                let hits: Vec<usize> = (0..4).filter(|&k| crossing[k].is_some()).collect();
                match hits.len() {
                    2 => {
                        let (a, b) = (crossing[hits[0]].unwrap(), crossing[hits[1]].unwrap());
                        // A zero node on a corner gives a point-sized segment.
                        if (a.0 - b.0).abs() + (a.1 - b.1).abs() > 1e-9 * (self.step.0 + self.step.1) {
                            out.push([a, b]);
                        }
                    }
                    4 => {
                        let centre = vals.iter().sum::<f64>() / 4.0 >= 0.0;
                        // Corners whose sign differs from the centre are cut off.
                        for c in 0..4 {
                            if pos[c] != centre {
                                let before = (c + 3) % 4;
                                out.push([crossing[before].unwrap(), crossing[c].unwrap()]);
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        out
    }
}

/// Chains segments sharing endpoints (within `tol`) into polylines.
pub fn join_segments(segments: &[[(f64, f64); 2]], tol: f64) -> Vec<Vec<(f64, f64)>> {
    let key = |p: (f64, f64)| ((p.0 / tol).floor() as i64, (p.1 / tol).floor() as i64);
    let mut ends: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (idx, seg) in segments.iter().enumerate() {
        for p in seg {
            ends.entry(key(*p)).or_default().push(idx);
        }
    }
    let near = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol;
    let mut used = vec![false; segments.len()];
    let mut lines = Vec::new();

    let extend = |line: &mut Vec<(f64, f64)>, used: &mut Vec<bool>| loop {
        let tail = *line.last().unwrap();
        let (kx, ky) = key(tail);
        let mut next = None;
        'search: for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(cands) = ends.get(&(kx + dx, ky + dy)) else { continue };
                for &s in cands {
                    if used[s] {
                        continue;
                    }
                    let [a, b] = segments[s];
                    if near(a, tail) {
                        next = Some((s, b));
                        break 'search;
                    }
                    if near(b, tail) {
                        next = Some((s, a));
                        break 'search;
                    }
                }
            }
        }
        let Some((s, far)) = next else { break };
        used[s] = true;
        line.push(far);
    };

    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let mut line = vec![segments[start][0], segments[start][1]];
        extend(&mut line, &mut used);
        line.reverse();
        extend(&mut line, &mut used);
        lines.push(line);
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_contour_lies_on_circle() {
        let grid = ScalarGrid::sample((-2.0, -2.0), (0.1, 0.1), 40, 40, |x, y| Some(x * x + y * y - 1.0));
        let segs = grid.zero_segments();
        assert!(!segs.is_empty());
        for s in &segs {
            for p in s {
                let r = (p.0 * p.0 + p.1 * p.1).sqrt();
                assert!((r - 1.0).abs() < 0.01, "{r}");
            }
        }
        let lines = join_segments(&segs, 1e-9);
        assert_eq!(lines.len(), 1);
        let line = &lines[0];
        let (a, b) = (line[0], line[line.len() - 1]);
        assert!((a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9, "closed");
    }

    #[test]
    fn undefined_nodes_are_skipped() {
        let grid = ScalarGrid::sample((0.0, 0.0), (1.0, 1.0), 4, 4, |x, y| if x > 2.0 { None } else { Some(y - 1.5) });
        let segs = grid.zero_segments();
        assert_eq!(segs.len(), 2);
        assert!(segs.iter().flatten().all(|p| (p.1 - 1.5).abs() < 1e-12 && p.0 <= 2.0));
    }

    #[test]
    fn zero_row_is_traced() {
        let grid = ScalarGrid::sample((0.0, -2.0), (1.0, 1.0), 3, 4, |_, y| Some(y));
        let segs = grid.zero_segments();
        assert_eq!(segs.len(), 3);
        assert!(segs.iter().flatten().all(|p| p.1 == 0.0));
    }

    #[test]
    fn saddle_pairs_by_centre() {
        // + - / - + with positive centre: two segments cutting off the negative corners.
        let vals = [1.0, -1.0, 1.0, -1.0];
        let grid = ScalarGrid {
            origin: (0.0, 0.0),
            step: (1.0, 1.0),
            nx: 1,
            ny: 1,
            values: vec![Some(vals[0] + 0.5), Some(vals[1]), Some(vals[3]), Some(vals[2] + 0.5)],
        };
        let segs = grid.zero_segments();
        assert_eq!(segs.len(), 2);
        for s in segs {
            // Each segment stays near one of the negative corners (1,0) or (0,1).
            let mid = ((s[0].0 + s[1].0) / 2.0, (s[0].1 + s[1].1) / 2.0);
            let d1 = (mid.0 - 1.0).hypot(mid.1);
            let d2 = mid.0.hypot(mid.1 - 1.0);
            assert!(d1.min(d2) < 0.5);
        }
    }
}
