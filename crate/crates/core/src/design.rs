//! Geometric constants, joint and pose types, and the design-study config format.
//!
//! All lengths are millimetres, all angles radians.
//!
//! The config format is one `key = value` pair per line. `#` starts a comment,
//! blank lines are ignored. Keys are the [`DesignParams`] field names and are
//! case-sensitive. Offsets (`e1x`..`e4z`, `e_py`) may be omitted and take the
//! defaults of [`DesignParams::zoe`]; every other key is required.

use std::fmt;
use std::str::FromStr;

use crate::error::{Actuator, Error, Result, StrokeBound};

/// Every geometric constant of the robot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignParams {
    /// Length of each parallelogram arm.
    pub l: f64,
    /// Base length.
    pub l2: f64,
    /// Distance between the arm tips B and C.
    pub l3: f64,
    pub e1x: f64,
    pub e1y: f64,
    pub e2x: f64,
    pub e2y: f64,
    /// Vertical offset from V to F. Must stay positive to keep the
    /// parallelogram out of its folded singularity.
    pub e_py: f64,
    pub rho1_min: f64,
    pub rho1_max: f64,
    pub rho2_min: f64,
    pub rho2_max: f64,
    /// Coordinates of H relative to P in the insertion frame.
    pub e3y: f64,
    pub e3z: f64,
    /// Offset of the insertion frame relative to V, applied in world axes.
    pub e4y: f64,
    pub e4z: f64,
    /// Inclination of the insertion actuator.
    pub theta: f64,
    pub rho3_min: f64,
    pub rho3_max: f64,
}

/// Config keys in serialization order.
pub const KEYS: [&str; 19] = [
    "L", "L2", "L3", "e1x", "e1y", "e2x", "e2y", "e_py", "rho1_min", "rho1_max", "rho2_min",
    "rho2_max", "e3y", "e3z", "e4y", "e4z", "theta", "rho3_min", "rho3_max",
];

const OPTIONAL_KEYS: [&str; 9] = ["e1x", "e1y", "e2x", "e2y", "e_py", "e3y", "e3z", "e4y", "e4z"];

impl DesignParams {
    /// The built prototype: L = 532, L2 = 1300, L3 = 160, zero offsets,
    /// e_py = 20, strokes [0, 500] / [0, 500] / [0, 200] and a 30 degree
    /// insertion axis.
    pub fn zoe() -> Self {
        DesignParams {
            l: 532.0,
            l2: 1300.0,
            l3: 160.0,
            e1x: 0.0,
            e1y: 0.0,
            e2x: 0.0,
            e2y: 0.0,
            e_py: 20.0,
            rho1_min: 0.0,
            rho1_max: 500.0,
            rho2_min: 0.0,
            rho2_max: 500.0,
            e3y: 0.0,
            e3z: 0.0,
            e4y: 0.0,
            e4z: 0.0,
            theta: std::f64::consts::FRAC_PI_6,
            rho3_min: 0.0,
            rho3_max: 200.0,
        }
    }

    fn values(&self) -> [f64; 19] {
        [
            self.l, self.l2, self.l3, self.e1x, self.e1y, self.e2x, self.e2y, self.e_py,
            self.rho1_min, self.rho1_max, self.rho2_min, self.rho2_max, self.e3y, self.e3z,
            self.e4y, self.e4z, self.theta, self.rho3_min, self.rho3_max,
        ]
    }

    fn slot(&mut self, key: &str) -> Option<&mut f64> {
        Some(match key {
            "L" => &mut self.l,
            "L2" => &mut self.l2,
            "L3" => &mut self.l3,
            "e1x" => &mut self.e1x,
            "e1y" => &mut self.e1y,
            "e2x" => &mut self.e2x,
            "e2y" => &mut self.e2y,
            "e_py" => &mut self.e_py,
            "rho1_min" => &mut self.rho1_min,
            "rho1_max" => &mut self.rho1_max,
            "rho2_min" => &mut self.rho2_min,
            "rho2_max" => &mut self.rho2_max,
            "e3y" => &mut self.e3y,
            "e3z" => &mut self.e3z,
            "e4y" => &mut self.e4y,
            "e4z" => &mut self.e4z,
            "theta" => &mut self.theta,
            "rho3_min" => &mut self.rho3_min,
            "rho3_max" => &mut self.rho3_max,
            _ => return None,
        })
    }

    /// Checks every structural invariant; the error names the first one violated.
    pub fn validate(&self) -> Result<()> {
        for (key, value) in KEYS.iter().zip(self.values()) {
            if !value.is_finite() {
                return Err(Error::NonFinite { field: key });
            }
        }
        if self.l <= 0.0 {
            return Err(Error::Invariant("L > 0"));
        }
        if self.l2 <= 0.0 {
            return Err(Error::Invariant("L2 > 0"));
        }
        if self.l3 < 0.0 {
            return Err(Error::Invariant("L3 >= 0"));
        }
        if self.l2 <= self.l3 {
            return Err(Error::Invariant("L2 > L3"));
        }
        if self.rho1_min > self.rho1_max {
            return Err(Error::Invariant("rho1_min <= rho1_max"));
        }
        if self.rho2_min > self.rho2_max {
            return Err(Error::Invariant("rho2_min <= rho2_max"));
        }
        if self.rho3_min > self.rho3_max {
            return Err(Error::Invariant("rho3_min <= rho3_max"));
        }
        if !(self.theta > 0.0 && self.theta < std::f64::consts::FRAC_PI_2) {
            return Err(Error::Invariant("0 < theta < pi/2"));
        }
        if self.e_py <= 0.0 {
            return Err(Error::Invariant("e_py > 0"));
        }
        Ok(())
    }

    pub fn stroke(&self, actuator: Actuator) -> (f64, f64) {
        match actuator {
            Actuator::Rho1 => (self.rho1_min, self.rho1_max),
            Actuator::Rho2 => (self.rho2_min, self.rho2_max),
            Actuator::Rho3 => (self.rho3_min, self.rho3_max),
        }
    }

    /// Unit direction of the insertion axis as (world y, world z).
    pub fn insertion_axis(&self) -> (f64, f64) {
        self.theta.sin_cos()
    }

    /// Writes the config format with keys in [`KEYS`] order. Values use the
    /// shortest representation that parses back to the same `f64`.
    pub fn to_config(&self) -> String {
        let mut out = String::new();
        for (key, value) in KEYS.iter().zip(self.values()) {
            out.push_str(key);
            out.push_str(" = ");
            out.push_str(&value.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parses and validates a design-study config.
pub fn load_design(text: &str) -> Result<DesignParams> {
    let mut params = DesignParams::zoe();
    let mut seen = [false; KEYS.len()];

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Parse {
            line,
            message: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let pos = KEYS
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| Error::UnknownKey {
                line,
                key: key.to_string(),
            })?;
        if seen[pos] {
            return Err(Error::DuplicateKey {
                line,
                key: key.to_string(),
            });
        }
        seen[pos] = true;
        let number: f64 = value.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{value}` is not a decimal number"),
        })?;
        if !number.is_finite() {
            return Err(Error::NonFinite { field: KEYS[pos] });
        }
        *params.slot(key).expect("key list and slots agree") = number;
    }

    let missing: Vec<String> = KEYS
        .iter()
        .zip(seen)
        .filter(|(key, seen)| !seen && !OPTIONAL_KEYS.contains(key))
        .map(|(key, _)| key.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingKeys(missing));
    }

    params.validate()?;
    Ok(params)
}

impl FromStr for DesignParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        load_design(s)
    }
}

/// Actuated coordinates. `rho3` is absent for planar-only computations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointVector {
    pub rho1: f64,
    pub rho2: f64,
    pub rho3: Option<f64>,
}

impl JointVector {
    pub fn planar(rho1: f64, rho2: f64) -> Self {
        JointVector { rho1, rho2, rho3: None }
    }

    pub fn spatial(rho1: f64, rho2: f64, rho3: f64) -> Self {
        JointVector {
            rho1,
            rho2,
            rho3: Some(rho3),
        }
    }
}

/// A [`JointVector`] that has been checked against the stroke intervals of a design.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidJoints(JointVector);

impl ValidJoints {
    pub fn get(&self) -> JointVector {
        self.0
    }
}

impl std::ops::Deref for ValidJoints {
    type Target = JointVector;

    fn deref(&self) -> &JointVector {
        &self.0
    }
}

fn check_stroke(actuator: Actuator, value: f64, (lo, hi): (f64, f64)) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite {
            field: match actuator {
                Actuator::Rho1 => "rho1",
                Actuator::Rho2 => "rho2",
                Actuator::Rho3 => "rho3",
            },
        });
    }
    if value < lo {
        return Err(Error::OutOfStroke {
            actuator,
            bound: StrokeBound::Lower,
            value,
            limit: lo,
        });
    }
    if value > hi {
        return Err(Error::OutOfStroke {
            actuator,
            bound: StrokeBound::Upper,
            value,
            limit: hi,
        });
    }
    Ok(())
}

/// Checks each present coordinate against its closed stroke interval.
pub fn validate_joints(params: &DesignParams, q: JointVector) -> Result<ValidJoints> {
    check_stroke(Actuator::Rho1, q.rho1, params.stroke(Actuator::Rho1))?;
    check_stroke(Actuator::Rho2, q.rho2, params.stroke(Actuator::Rho2))?;
    if let Some(rho3) = q.rho3 {
        check_stroke(Actuator::Rho3, rho3, params.stroke(Actuator::Rho3))?;
    }
    Ok(ValidJoints(q))
}

/// Smallest distance from any present coordinate to its nearest stroke bound.
pub fn stroke_clearance(params: &DesignParams, q: &JointVector) -> f64 {
    let gap = |v: f64, (lo, hi): (f64, f64)| (v - lo).min(hi - v);
    let mut clearance = gap(q.rho1, params.stroke(Actuator::Rho1))
        .min(gap(q.rho2, params.stroke(Actuator::Rho2)));
    if let Some(rho3) = q.rho3 {
        clearance = clearance.min(gap(rho3, params.stroke(Actuator::Rho3)));
    }
    clearance
}

/// Point V, midpoint of the arm tips B and C.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanarPose {
    pub x: f64,
    pub y: f64,
}

impl PlanarPose {
    pub fn new(x: f64, y: f64) -> Self {
        PlanarPose { x, y }
    }
}

/// Plug point of the composed mechanism: x is the abscissa of V, y the world
/// vertical and z the world insertion depth of P.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpatialPose {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpatialPose {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        SpatialPose { x, y, z }
    }

    pub fn distance(&self, other: &SpatialPose) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2) + (self.z - other.z).powi(2))
            .sqrt()
    }
}

pub(crate) fn parse_tuple<const N: usize>(s: &str) -> Result<[f64; N]> {
    let mut out = [0.0; N];
    let mut parts = s.split(',');
    for slot in out.iter_mut() {
        let part = parts
            .next()
            .ok_or_else(|| Error::InvalidArgument(format!("expected {N} comma-separated numbers")))?
            .trim();
        let v: f64 = part
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("`{part}` is not a number")))?;
        if !v.is_finite() {
            return Err(Error::InvalidArgument(format!("`{part}` is not finite")));
        }
        *slot = v;
    }
    if parts.next().is_some() {
        return Err(Error::InvalidArgument(format!(
            "expected {N} comma-separated numbers"
        )));
    }
    Ok(out)
}

/// Parses `x,y,z`.
impl FromStr for SpatialPose {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let [x, y, z] = parse_tuple::<3>(s)?;
        Ok(SpatialPose { x, y, z })
    }
}

impl fmt::Display for SpatialPose {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

/// Sign of the square-root term in the inverse kinematics of one arm.
///
/// `Minus` places the actuated joint on the base side of the arm tip
/// (`rho = ... - sqrt(...)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Branch {
    #[default]
    Minus,
    Plus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Minus => -1.0,
            Branch::Plus => 1.0,
        }
    }
}

/// Forward-kinematics solution: V above or below the line through the two
/// circle centres.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Assembly {
    #[default]
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct WorkingMode {
    pub left: Branch,
    pub right: Branch,
    pub assembly: Assembly,
}

impl WorkingMode {
    /// The aspect reachable under the joint limits of the built robot: both
    /// arms on the minus branch, upper assembly.
    pub fn accessible(_params: &DesignParams) -> Self {
        WorkingMode::default()
    }

    pub fn with_assembly(self, assembly: Assembly) -> Self {
        WorkingMode { assembly, ..self }
    }
}

/// Finite-element results for the built prototype, kept for reference only;
/// nothing in this crate computes stiffness.
pub mod stiffness_reference {
    /// Maximum displacement (mm) at the nine test points of the regular workspace.
    pub const PLANAR_MAX_DISPLACEMENT: [(u8, f64); 9] = [
        (1, 0.995),
        (2, 0.993),
        (3, 0.991),
        (4, 0.990),
        (5, 0.996),
        (6, 0.989),
        (7, 1.030),
        (8, 1.010),
        (9, 1.030),
    ];

    /// Maximum displacement (mm) against insertion stroke rho3 (mm).
    pub const INSERTION_MAX_DISPLACEMENT: [(f64, f64); 5] = [
        (50.0, 1.080),
        (75.0, 0.996),
        (100.0, 0.936),
        (125.0, 0.907),
        (150.0, 0.958),
    ];
}
