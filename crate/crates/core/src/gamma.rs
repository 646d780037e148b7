//! Inclined insertion actuator and the composed three-axis mechanism.
//!
//! The insertion actuator moves the plug point P along a line of inclination
//! `theta` in its own `z'`-`y'` frame. That frame rides on V: the composed
//! pose is `(x_V, y_V + e4y + y', e4z + z')`, with `e4y`/`e4z` applied as
//! world-axis translations.

use crate::alpha::{alpha_fk, alpha_ik};
use crate::design::{validate_joints, DesignParams, JointVector, PlanarPose, SpatialPose, WorkingMode};
use crate::error::{Error, Result, Stage};

/// Maximum distance (mm) of a pose from the insertion line for inverse kinematics.
pub const AXIS_TOL: f64 = 1e-6;

/// Plug point P in the insertion frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BetaPose {
    pub y_prime: f64,
    pub z_prime: f64,
}

pub fn beta_fk(p: &DesignParams, rho3: f64) -> BetaPose {
    let (sin, cos) = p.theta.sin_cos();
    BetaPose {
        y_prime: p.e3y + rho3 * sin,
        z_prime: p.e3z + rho3 * cos,
    }
}

/// Actuator length for a pose on the insertion line.
///
/// The distance formula alone accepts any point in the plane, so the pose is
/// first required to lie on the actuator line, in front of its origin.
pub fn beta_ik(p: &DesignParams, pose: BetaPose) -> Result<f64> {
    let (sin, cos) = p.theta.sin_cos();
    let dz = pose.z_prime - p.e3z;
    let dy = pose.y_prime - p.e3y;
    let off_axis = dz * sin - dy * cos;
    if !(off_axis.abs() <= AXIS_TOL) {
        return Err(Error::OffAxis { residual: off_axis });
    }
    let along = dz * cos + dy * sin;
    if along < 0.0 {
        return Err(Error::NegativeDirection { along });
    }
    Ok(dz.hypot(dy))
}

/// Forward kinematics of the composed mechanism. `q.rho3` is required.
pub fn gamma_fk(p: &DesignParams, q: &JointVector, mode: WorkingMode) -> Result<SpatialPose> {
    let rho3 = q
        .rho3
        .ok_or_else(|| Error::InvalidArgument("rho3 is required for the composed mechanism".into()))?;
    validate_joints(p, *q)?;
    let v = alpha_fk(p, q, mode.assembly)?;
    let b = beta_fk(p, rho3);
    Ok(SpatialPose {
        x: v.x,
        y: v.y + p.e4y + b.y_prime,
        z: p.e4z + b.z_prime,
    })
}

/// Splits a target into the insertion stroke (from its depth) and the planar
/// pose of V, then solves each stage. Errors carry the failing stage.
pub fn gamma_ik(p: &DesignParams, target: SpatialPose, mode: WorkingMode) -> Result<JointVector> {
    let (rho3, v) = split_target(p, target).map_err(|e| Error::Gamma {
        stage: Stage::Beta,
        source: Box::new(e),
    })?;
    let q = alpha_ik(p, v, mode).map_err(|e| Error::Gamma {
        stage: Stage::Alpha,
        source: Box::new(e),
    })?;
    Ok(JointVector::spatial(q.rho1, q.rho2, rho3))
}

/// Insertion stroke and planar pose of V for a spatial target. The stroke is
/// checked; the planar pose is not.
pub fn split_target(p: &DesignParams, target: SpatialPose) -> Result<(f64, PlanarPose)> {
    let (sin, cos) = p.theta.sin_cos();
    let rho3 = (target.z - p.e4z - p.e3z) / cos;
    if rho3 < 0.0 {
        return Err(Error::NegativeDirection { along: rho3 });
    }
    validate_joints(p, JointVector::spatial(p.rho1_min, p.rho2_min, rho3))?;
    let y_v = target.y - p.e4y - p.e3y - rho3 * sin;
    Ok((rho3, PlanarPose::new(target.x, y_v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::Assembly;
    use crate::error::{Actuator, ErrorKind};
    use std::f64::consts::FRAC_PI_6;

    fn params() -> DesignParams {
        DesignParams::zoe()
    }

    #[test]
    fn beta_fk_examples() {
        let p = params();
        let b = beta_fk(&p, 100.0);
        assert!((b.y_prime - 50.0).abs() < 1e-12);
        assert!((b.z_prime - 100.0 * 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((b.z_prime - 86.6025).abs() < 1e-4);
        assert_eq!(beta_fk(&p, 0.0), BetaPose { y_prime: 0.0, z_prime: 0.0 });

        let mut p = params();
        p.e3y = 10.0;
        p.e3z = 5.0;
        let b = beta_fk(&p, 150.0);
        assert!((b.y_prime - 85.0).abs() < 1e-12);
        assert!((b.z_prime - (5.0 + 75.0 * 3f64.sqrt())).abs() < 1e-12);
        assert!((b.z_prime - 134.904).abs() < 1e-3);
        assert!((beta_ik(&p, b).unwrap() - 150.0).abs() < 1e-12);
        assert_eq!(beta_ik(&p, BetaPose { y_prime: 10.0, z_prime: 5.0 }).unwrap(), 0.0);
    }

    #[test]
    fn beta_ik_examples() {
        let p = params();
        let pose = BetaPose {
            y_prime: 50.0,
            z_prime: 50.0 * 3f64.sqrt(),
        };
        assert!((beta_ik(&p, pose).unwrap() - 100.0).abs() < 1e-12);
        assert_eq!(beta_ik(&p, BetaPose::default()).unwrap(), 0.0);
        // (100, 0): residual 0 * sin - 100 * cos = -86.6 mm.
        let err = beta_ik(&p, BetaPose { y_prime: 100.0, z_prime: 0.0 }).unwrap_err();
        let Error::OffAxis { residual } = err else { panic!("{err:?}") };
        assert!((residual + 100.0 * FRAC_PI_6.cos()).abs() < 1e-12);
        let err = beta_ik(&p, BetaPose { y_prime: -50.0, z_prime: -50.0 * 3f64.sqrt() }).unwrap_err();
        assert!(matches!(err, Error::NegativeDirection { .. }));
    }

    #[test]
    fn gamma_fk_examples() {
        let p = params();
        let mode = WorkingMode::default();
        let h = 172800.0_f64.sqrt();
        let t = gamma_fk(&p, &JointVector::spatial(238.0, 238.0, 0.0), mode).unwrap();
        assert!(t.distance(&SpatialPose::new(650.0, h, 0.0)) < 1e-12);
        let t = gamma_fk(&p, &JointVector::spatial(238.0, 238.0, 100.0), mode).unwrap();
        assert!(t.distance(&SpatialPose::new(650.0, h + 50.0, 50.0 * 3f64.sqrt())) < 1e-12);
        assert!((t.y - 465.692).abs() < 1e-3 && (t.z - 86.6025).abs() < 1e-4);

        let mut p = params();
        p.e4y = 30.0;
        p.e4z = 10.0;
        let t = gamma_fk(&p, &JointVector::spatial(238.0, 238.0, 0.0), mode).unwrap();
        assert!(t.distance(&SpatialPose::new(650.0, h + 30.0, 10.0)) < 1e-12);
    }

    #[test]
    fn gamma_fk_requires_rho3_in_stroke() {
        let p = params();
        let err = gamma_fk(&p, &JointVector::spatial(238.0, 238.0, 250.0), WorkingMode::default()).unwrap_err();
        assert!(matches!(err, Error::OutOfStroke { actuator: Actuator::Rho3, .. }));
        assert!(gamma_fk(&p, &JointVector::planar(238.0, 238.0), WorkingMode::default()).is_err());
    }

    #[test]
    fn gamma_ik_examples() {
        let p = params();
        let mode = WorkingMode::default();
        let h = 172800.0_f64.sqrt();
        let q = gamma_ik(&p, SpatialPose::new(650.0, h + 50.0, 50.0 * 3f64.sqrt()), mode).unwrap();
        assert!((q.rho1 - 238.0).abs() < 1e-9);
        assert!((q.rho2 - 238.0).abs() < 1e-9);
        assert!((q.rho3.unwrap() - 100.0).abs() < 1e-9);

        let q = gamma_ik(&p, SpatialPose::new(650.0, h, 0.0), mode).unwrap();
        assert!((q.rho1 - 238.0).abs() < 1e-9 && (q.rho2 - 238.0).abs() < 1e-9);
        assert_eq!(q.rho3, Some(0.0));

        let err = gamma_ik(&p, SpatialPose::new(650.0, h, -10.0), mode).unwrap_err();
        assert!(matches!(
            &err,
            Error::Gamma { stage: Stage::Beta, source } if matches!(**source, Error::NegativeDirection { .. })
        ));

        let err = gamma_ik(&p, SpatialPose::new(650.0, 900.0, 0.0), mode).unwrap_err();
        assert!(matches!(&err, Error::Gamma { stage: Stage::Alpha, .. }));
        assert_eq!(err.kind(), ErrorKind::Unreachable);
    }

    #[test]
    fn composed_roundtrip_lower_assembly() {
        let p = params();
        let mode = WorkingMode::default().with_assembly(Assembly::Lower);
        let target = SpatialPose::new(700.0, -300.0, 40.0);
        let q = gamma_ik(&p, target, mode).unwrap();
        let back = gamma_fk(&p, &q, mode).unwrap();
        assert!(back.distance(&target) < 1e-9);
    }
}
