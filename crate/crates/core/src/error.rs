use std::fmt;

use thiserror::Error;

/// Which prismatic actuator a joint-space error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Actuator {
    Rho1,
    Rho2,
    Rho3,
}

impl fmt::Display for Actuator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Actuator::Rho1 => "rho1",
            Actuator::Rho2 => "rho2",
            Actuator::Rho3 => "rho3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrokeBound {
    Lower,
    Upper,
}

impl fmt::Display for StrokeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrokeBound::Lower => "lower",
            StrokeBound::Upper => "upper",
        })
    }
}

/// Arm of the planar mechanism (left carries joint A, right carries joint E).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arm {
    Left,
    Right,
}

impl fmt::Display for Arm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arm::Left => "left",
            Arm::Right => "right",
        })
    }
}

/// Stage of the composed mechanism at which an inverse problem failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Alpha,
    Beta,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Alpha => "alpha",
            Stage::Beta => "beta",
        })
    }
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Unreachable,
    Stroke,
    Singularity,
    Degenerate,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },

    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },

    #[error("missing keys: {}", .0.join(", "))]
    MissingKeys(Vec<String>),

    #[error("`{field}` must be finite")]
    NonFinite { field: &'static str },

    #[error("invariant violated: {0}")]
    Invariant(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{actuator} = {value} violates its {bound} stroke bound {limit}")]
    OutOfStroke {
        actuator: Actuator,
        bound: StrokeBound,
        value: f64,
        limit: f64,
    },

    #[error("unreachable: |y-{}| exceeds L", if *.arm == Arm::Left { "e1y" } else { "e2y" })]
    Unreachable { arm: Arm, excess: f64 },

    #[error("no assembly: centre distance {distance} outside (0, {reach}]")]
    NoAssembly { distance: f64, reach: f64 },

    #[error("pose and joints inconsistent: residual {residual} mm^2")]
    Inconsistent { residual: f64 },

    #[error("pose is {residual} mm off the insertion axis")]
    OffAxis { residual: f64 },

    #[error("pose lies behind the insertion actuator origin ({along} mm)")]
    NegativeDirection { along: f64 },

    #[error("{stage} stage: {source}")]
    Gamma { stage: Stage, source: Box<Error> },

    #[error("degenerate region: the reachable workspace is empty")]
    DegenerateRegion,

    #[error("waypoint at {fraction:.4} of the segment: {source}")]
    Waypoint { fraction: f64, source: Box<Error> },

    #[error("singularity: parallel margin {margin:.6} below floor {floor} at ({x:.3}, {y:.3}, {z:.3})")]
    Singularity {
        margin: f64,
        floor: f64,
        x: f64,
        y: f64,
        z: f64,
    },

    #[error("insertion depth {depth} mm exceeds the rho3 stroke {stroke} mm")]
    DepthExceedsStroke { depth: f64, stroke: f64 },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. }
            | Error::UnknownKey { .. }
            | Error::DuplicateKey { .. }
            | Error::MissingKeys(_)
            | Error::NonFinite { .. }
            | Error::Invariant(_)
            | Error::InvalidArgument(_)
            | Error::Inconsistent { .. } => ErrorKind::Input,
            Error::OutOfStroke { .. } | Error::DepthExceedsStroke { .. } => ErrorKind::Stroke,
            Error::Unreachable { .. }
            | Error::NoAssembly { .. }
            | Error::OffAxis { .. }
            | Error::NegativeDirection { .. } => ErrorKind::Unreachable,
            Error::Singularity { .. } => ErrorKind::Singularity,
            Error::DegenerateRegion => ErrorKind::Degenerate,
            Error::Gamma { source, .. } | Error::Waypoint { source, .. } => source.kind(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
