use core::fmt;

use crate::geometry::Point;

/// Errors raised by contract violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Projective dimension outside the supported range 2..=4.
    UnsupportedDimension { r: u32 },
    /// A point encoding outside 1..=2^(r+1)-1.
    PointOutOfRange { encoding: u32 },
    /// `third_point` needs two distinct points to determine a line.
    IdenticalPoints { point: Point },
    /// The operation is only defined for caps; a collinear triple is the
    /// witness.
    NotACap { line: [Point; 3] },
    /// The operation is only defined for spanning sets (rank = r+1).
    NotSpanning { rank: u32, required: u32 },
    /// The given tuple is linearly dependent.
    DependentTuple,
    /// A classification record failed its post-hoc re-check.
    InvariantViolation { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::UnsupportedDimension { r } => {
                write!(
                    f,
                    "unsupported projective dimension r = {r} (supported: 2..=4)"
                )
            }
            Error::PointOutOfRange { encoding } => {
                write!(f, "point encoding {encoding} is outside the point universe")
            }
            Error::IdenticalPoints { point } => {
                write!(f, "no unique line through a repeated point ({point})")
            }
            Error::NotACap { line } => write!(
                f,
                "not a cap: points {}, {}, {} are collinear",
                line[0], line[1], line[2]
            ),
            Error::NotSpanning { rank, required } => {
                write!(f, "set does not span: rank {rank} < {required}")
            }
            Error::DependentTuple => write!(f, "tuple is linearly dependent"),
            Error::InvariantViolation { what } => {
                write!(f, "classification invariant violated: {what}")
            }
        }
    }
}

impl core::error::Error for Error {}
