//! Kinematics and workspace synthesis for a wall-mounted electric-vehicle
//! charging robot.
//!
//! The robot is a planar P-Pi-R-P parallel mechanism (two horizontal sliders
//! driving two parallelogram arms that meet at a coupler) carrying an
//! inclined linear actuator that inserts the plug. The crate covers
//!
//! - [`design`]: geometric constants, joint and pose types, the config format;
//! - [`alpha`]: planar inverse/forward kinematics, Jacobians, singularity margins;
//! - [`gamma`]: the insertion actuator and the composed three-axis mechanism;
//! - [`workspace`]: reachable-region membership, boundary loops, singularity curves;
//! - [`placement`]: fitting a Lamé-curve approximation of a square into the region;
//! - [`trajectory`]: straight-line waypoint plans with stroke and singularity checks;
//! - [`requirements`]: evaluation of the kinematic design requirements;
//! - [`svg`]: plain SVG output of the above.
//!
//! Units are millimetres and radians throughout.
//!
//! ```
//! use evcharge_kin::{alpha, design::{DesignParams, PlanarPose, WorkingMode}};
//!
//! let p = DesignParams::zoe();
//! let q = alpha::alpha_ik(&p, PlanarPose::new(612.0, 0.0), WorkingMode::default()).unwrap();
//! assert_eq!((q.rho1, q.rho2), (0.0, 76.0));
//! ```

pub mod alpha;
pub mod contour;
pub mod design;
pub mod error;
pub mod gamma;
pub mod placement;
pub mod requirements;
pub mod svg;
pub mod trajectory;
pub mod workspace;

pub use design::{load_design, validate_joints, DesignParams, JointVector, PlanarPose, SpatialPose, WorkingMode};
pub use error::{Error, ErrorKind, Result};
pub use workspace::Workspace;
