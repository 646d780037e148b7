//! Straight-line waypoint plans in joint space.
//!
//! A plan is a list of Cartesian samples with their joint solutions; nothing
//! between waypoints is modelled.

use crate::alpha::{alpha_fk, assembly_of, singularity_margin};
use crate::design::{stroke_clearance, DesignParams, JointVector, SpatialPose, WorkingMode};
use crate::error::{Error, Result};
use crate::gamma::{gamma_ik, split_target};

/// Default floor on the normalized parallel margin `|det A| / L^2`.
pub const DEFAULT_MARGIN_FLOOR: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Waypoint {
    pub pose: SpatialPose,
    pub joints: JointVector,
    pub parallel_margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MotionPlan {
    pub waypoints: Vec<Waypoint>,
    pub min_parallel_margin: f64,
    /// Closest approach of any actuator to a stroke end, mm.
    pub min_stroke_clearance: f64,
    /// Requested maximum Cartesian spacing, mm.
    pub step: f64,
    /// Working mode used for every waypoint; replay with `gamma_fk` under it.
    pub mode: WorkingMode,
}

impl MotionPlan {
    /// `index,x,y,z,rho1,rho2,rho3,parallel_margin` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,x,y,z,rho1,rho2,rho3,parallel_margin\n");
        for (i, w) in self.waypoints.iter().enumerate() {
            out.push_str(&format!(
                "{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}\n",
                i,
                w.pose.x,
                w.pose.y,
                w.pose.z,
                w.joints.rho1,
                w.joints.rho2,
                w.joints.rho3.unwrap_or(0.0),
                w.parallel_margin
            ));
        }
        out
    }
}

/// Samples the segment `from -> to` at spacing at most `step` and solves
/// each sample. Fails on the first unreachable or out-of-stroke sample, or
/// when any sample's parallel margin is below `margin_floor`.
pub fn plan_line(
    p: &DesignParams,
    from: SpatialPose,
    to: SpatialPose,
    step: f64,
    margin_floor: f64,
) -> Result<MotionPlan> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    let length = from.distance(&to);
    let segments = (length / step).ceil() as usize;
    let mut mode = WorkingMode::accessible(p);

    let mut waypoints = Vec::with_capacity(segments + 1);
    let mut worst: Option<(f64, SpatialPose)> = None;
    for i in 0..=segments {
        let t = if segments == 0 { 0.0 } else { i as f64 / segments as f64 };
        let pose = if i == segments {
            to
        } else {
            SpatialPose::new(
                from.x + t * (to.x - from.x),
                from.y + t * (to.y - from.y),
                from.z + t * (to.z - from.z),
            )
        };
        let joints = gamma_ik(p, pose, mode).map_err(|e| Error::Waypoint {
            fraction: t,
            source: Box::new(e),
        })?;
        let (_, v) = split_target(p, pose)?;
        if i == 0 {
            mode.assembly = assembly_of(p, v, &joints);
        }
        let margin = singularity_margin(p, v, &joints)?.parallel;
        if worst.is_none_or(|(m, _)| margin < m) {
            worst = Some((margin, pose));
        }
        waypoints.push(Waypoint {
            pose,
            joints,
            parallel_margin: margin,
        });
    }

    let (min_margin, at) = worst.expect("at least one waypoint");
    if min_margin < margin_floor {
        return Err(Error::Singularity {
            margin: min_margin,
            floor: margin_floor,
            x: at.x,
            y: at.y,
            z: at.z,
        });
    }
    // Every waypoint must stay on the starting assembly branch.
    debug_assert!(waypoints.iter().all(|w| {
        let (_, v) = split_target(p, w.pose).unwrap();
        alpha_fk(p, &w.joints, mode.assembly)
            .is_ok_and(|fk| (fk.x - v.x).abs() < 1e-6 && (fk.y - v.y).abs() < 1e-6)
    }));
    let min_stroke_clearance = waypoints
        .iter()
        .map(|w| stroke_clearance(p, &w.joints))
        .fold(f64::INFINITY, f64::min);
    Ok(MotionPlan {
        waypoints,
        min_parallel_margin: min_margin,
        min_stroke_clearance,
        step,
        mode,
    })
}

/// Axial insertion: from the pre-contact pose, `depth` back along the
/// insertion axis, to the socket.
pub fn plan_insertion(p: &DesignParams, socket: SpatialPose, depth: f64, step: f64) -> Result<MotionPlan> {
    if !(depth > 0.0) || !depth.is_finite() {
        return Err(Error::InvalidArgument(format!("depth must be positive, got {depth}")));
    }
    let stroke = p.rho3_max - p.rho3_min;
    if depth > stroke {
        return Err(Error::DepthExceedsStroke { depth, stroke });
    }
    let (sin, cos) = p.insertion_axis();
    let start = SpatialPose::new(socket.x, socket.y - depth * sin, socket.z - depth * cos);
    plan_line(p, start, socket, step, DEFAULT_MARGIN_FLOOR)
}
