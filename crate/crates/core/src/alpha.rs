//! Planar P-Pi-R-P mechanism: constraints, inverse and forward kinematics,
//! Jacobians and singularity margins.
//!
//! Each arm of length `L` joins an actuated slider to one tip of the coupler
//! BC. With `B = (x - L3/2, y)` and `C = (x + L3/2, y)` the closure equations
//! are
//!
//! ```text
//! f1 = (x - e1x - rho1 - L3/2)^2 + (y - e1y)^2 - L^2 = 0
//! f2 = (L2 - x - L3/2 - e2x - rho2)^2 + (y - e2y)^2 - L^2 = 0
//! ```
//!
//! The inverse kinematics below is solved directly from these two equations.
//! Solving them gives `L^2` under the radical and `e2y` in the right-arm
//! term; forms that carry `2 L^2` or reuse `e1y` for the right arm do not
//! satisfy the closure equations and are not used.
//!
//! Jacobians are taken of `f / 2`, so `A` and `B` carry no factor of two.

use crate::design::{validate_joints, Assembly, DesignParams, JointVector, PlanarPose, WorkingMode};
use crate::error::{Arm, Error, Result};

/// Tolerance on `|f|` (mm^2) for a (pose, joints) pair to count as consistent.
pub const CONSISTENCY_TOL: f64 = 1e-6;

/// Residuals of the two closure equations, mm^2.
pub fn alpha_constraints(p: &DesignParams, pose: PlanarPose, q: &JointVector) -> (f64, f64) {
    let (u1, u2) = arm_offsets(p, pose, q);
    let f1 = u1 * u1 + (pose.y - p.e1y).powi(2) - p.l * p.l;
    let f2 = u2 * u2 + (pose.y - p.e2y).powi(2) - p.l * p.l;
    (f1, f2)
}

/// Horizontal offsets `x - e1x - rho1 - L3/2` and `L2 - x - L3/2 - e2x - rho2`.
fn arm_offsets(p: &DesignParams, pose: PlanarPose, q: &JointVector) -> (f64, f64) {
    (
        pose.x - p.e1x - q.rho1 - p.l3 / 2.0,
        p.l2 - pose.x - p.l3 / 2.0 - p.e2x - q.rho2,
    )
}

/// Horizontal half-chord `sqrt(L^2 - (y - ey)^2)` of an arm, or `None` when
/// the arm cannot reach height `y`.
pub(crate) fn half_chord(l: f64, dy: f64) -> Option<f64> {
    let disc = (l - dy.abs()) * (l + dy.abs());
    if disc < 0.0 {
        None
    } else {
        Some(disc.sqrt())
    }
}

/// Inverse kinematics without stroke checks. Only fails when an arm cannot
/// reach the requested height.
pub fn alpha_ik_unbounded(p: &DesignParams, pose: PlanarPose, mode: WorkingMode) -> Result<JointVector> {
    let s1 = half_chord(p.l, pose.y - p.e1y).ok_or(Error::Unreachable {
        arm: Arm::Left,
        excess: (pose.y - p.e1y).abs() - p.l,
    })?;
    let s2 = half_chord(p.l, pose.y - p.e2y).ok_or(Error::Unreachable {
        arm: Arm::Right,
        excess: (pose.y - p.e2y).abs() - p.l,
    })?;
    let rho1 = pose.x - p.e1x - p.l3 / 2.0 + mode.left.sign() * s1;
    let rho2 = p.l2 - pose.x - p.l3 / 2.0 - p.e2x + mode.right.sign() * s2;
    Ok(JointVector::planar(rho1, rho2))
}

/// Inverse kinematics with the branch signs of `mode`; the result is checked
/// against the stroke intervals.
pub fn alpha_ik(p: &DesignParams, pose: PlanarPose, mode: WorkingMode) -> Result<JointVector> {
    let q = alpha_ik_unbounded(p, pose, mode)?;
    validate_joints(p, q)?;
    Ok(q)
}

/// Forward kinematics: intersection of the two arm circles. Tangent circles
/// give a single pose for both assembly modes.
pub fn alpha_fk(p: &DesignParams, q: &JointVector, assembly: Assembly) -> Result<PlanarPose> {
    let c1 = (p.e1x + q.rho1 + p.l3 / 2.0, p.e1y);
    let c2 = (p.l2 - q.rho2 - p.e2x - p.l3 / 2.0, p.e2y);
    let dx = c2.0 - c1.0;
    let dy = c2.1 - c1.1;
    let d = dx.hypot(dy);
    let reach = 2.0 * p.l;
    if !(d > 0.0) || d > reach * (1.0 + 1e-15) {
        return Err(Error::NoAssembly { distance: d, reach });
    }
    let half = d / 2.0;
    let h = ((p.l - half) * (p.l + half)).max(0.0).sqrt();
    let (ux, uy) = (dx / d, dy / d);
    // Normal pointing to +y (or +x for a vertical centre line).
    let (mut nx, mut ny) = (-uy, ux);
    if ny < 0.0 || (ny == 0.0 && nx < 0.0) {
        nx = -nx;
        ny = -ny;
    }
    let sign = match assembly {
        Assembly::Upper => 1.0,
        Assembly::Lower => -1.0,
    };
    Ok(PlanarPose {
        x: c1.0 + half * ux + sign * h * nx,
        y: c1.1 + half * uy + sign * h * ny,
    })
}

/// Assembly mode that contains `pose`, judged against the line through the
/// circle centres of `q`.
pub fn assembly_of(p: &DesignParams, pose: PlanarPose, q: &JointVector) -> Assembly {
    let c1 = (p.e1x + q.rho1 + p.l3 / 2.0, p.e1y);
    let c2 = (p.l2 - q.rho2 - p.e2x - p.l3 / 2.0, p.e2y);
    let (dx, dy) = (c2.0 - c1.0, c2.1 - c1.1);
    let (mut nx, mut ny) = (-dy, dx);
    if ny < 0.0 || (ny == 0.0 && nx < 0.0) {
        nx = -nx;
        ny = -ny;
    }
    if (pose.x - c1.0) * nx + (pose.y - c1.1) * ny >= 0.0 {
        Assembly::Upper
    } else {
        Assembly::Lower
    }
}

/// Partial derivatives of the halved closure equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaJacobians {
    /// d(f/2)/d(x, y), row per equation.
    pub a: [[f64; 2]; 2],
    /// d(f/2)/d(rho1, rho2); diagonal.
    pub b: [f64; 2],
    pub det_a: f64,
    pub det_b: f64,
}

impl AlphaJacobians {
    /// Pose displacement `-A^-1 B d_rho` for a small joint displacement.
    /// Returns `None` at a parallel singularity.
    pub fn pose_rate(&self, d_rho: [f64; 2]) -> Option<[f64; 2]> {
        if self.det_a == 0.0 {
            return None;
        }
        let rhs = [-self.b[0] * d_rho[0], -self.b[1] * d_rho[1]];
        let [[a, b], [c, d]] = self.a;
        Some([
            (d * rhs[0] - b * rhs[1]) / self.det_a,
            (-c * rhs[0] + a * rhs[1]) / self.det_a,
        ])
    }
}

fn jacobians_unchecked(p: &DesignParams, pose: PlanarPose, q: &JointVector) -> AlphaJacobians {
    let (u1, u2) = arm_offsets(p, pose, q);
    let a = [[u1, pose.y - p.e1y], [-u2, pose.y - p.e2y]];
    let b = [-u1, -u2];
    AlphaJacobians {
        a,
        b,
        det_a: a[0][0] * a[1][1] - a[0][1] * a[1][0],
        det_b: b[0] * b[1],
    }
}

pub fn alpha_jacobians(p: &DesignParams, pose: PlanarPose, q: &JointVector) -> Result<AlphaJacobians> {
    let (f1, f2) = alpha_constraints(p, pose, q);
    let residual = f1.abs().max(f2.abs());
    if !(residual <= CONSISTENCY_TOL) {
        return Err(Error::Inconsistent { residual });
    }
    Ok(jacobians_unchecked(p, pose, q))
}

/// Normalized distances to the two singularity types.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularityMargin {
    /// `|det A| / L^2`; zero at a parallel singularity.
    pub parallel: f64,
    /// `min |B_ii| / L`; zero at a serial singularity.
    pub serial: f64,
}

pub fn singularity_margin(p: &DesignParams, pose: PlanarPose, q: &JointVector) -> Result<SingularityMargin> {
    let j = alpha_jacobians(p, pose, q)?;
    Ok(margin_of(p, &j))
}

fn margin_of(p: &DesignParams, j: &AlphaJacobians) -> SingularityMargin {
    SingularityMargin {
        parallel: j.det_a.abs() / (p.l * p.l),
        serial: j.b[0].abs().min(j.b[1].abs()) / p.l,
    }
}

/// `det A` as a field over the plane, using the unbounded inverse kinematics
/// of `mode`. `None` where an arm cannot reach.
pub fn det_a_at(p: &DesignParams, pose: PlanarPose, mode: WorkingMode) -> Option<f64> {
    let q = alpha_ik_unbounded(p, pose, mode).ok()?;
    Some(jacobians_unchecked(p, pose, &q).det_a)
}

/// Parallel margin at `pose` under `mode`, if both arms reach it.
pub fn parallel_margin_at(p: &DesignParams, pose: PlanarPose, mode: WorkingMode) -> Option<f64> {
    let q = alpha_ik_unbounded(p, pose, mode).ok()?;
    Some(margin_of(p, &jacobians_unchecked(p, pose, &q)).parallel)
}
