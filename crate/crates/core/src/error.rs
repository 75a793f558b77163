use alloc::string::String;
use core::fmt;

use crate::complex::ValidationReport;

/// Everything that can go wrong in the core crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ShapeMismatch {
        context: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A vector is not an integer combination of the lattice basis.
    NotInLattice,
    /// A lattice basis was required but the columns are dependent.
    DependentBasis,
    /// Some denominator generator lies outside the numerator lattice.
    ContainmentViolation,
    /// Two maps that must compose to zero do not.
    ChainConditionViolation,
    InvalidParameter(&'static str),
    ParseGroup {
        position: usize,
        message: &'static str,
    },
    /// A matrix does not respect the relations of the source group.
    NotWellDefined,
    IncompatibleGroups,
    NotAnIsomorphism,
    NotASphereModel,
    NotAnEndomorphism,
    NotPointed,
    InvalidComplex(ValidationReport),
    InvalidMap(ValidationReport),
    OutOfRange {
        what: &'static str,
        value: i64,
        max: i64,
    },
    MalformedWord {
        face: usize,
        reason: &'static str,
    },
    UnknownComplex(String),
    /// The cone-versus-quotient comparison failed to be an isomorphism.
    IsoTransportFailure,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "{}: expected shape {}x{}, found {}x{}",
                context, expected.0, expected.1, found.0, found.1
            ),
            Error::NotInLattice => f.write_str("vector is not in the lattice"),
            Error::DependentBasis => f.write_str("lattice basis columns are linearly dependent"),
            Error::ContainmentViolation => {
                f.write_str("denominator lattice is not contained in the numerator lattice")
            }
            Error::ChainConditionViolation => f.write_str("consecutive maps do not compose to zero"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {}", msg),
            Error::ParseGroup { position, message } => {
                write!(f, "group syntax error at position {}: {}", position, message)
            }
            Error::NotWellDefined => f.write_str("matrix does not define a homomorphism"),
            Error::IncompatibleGroups => f.write_str("groups do not match"),
            Error::NotAnIsomorphism => f.write_str("homomorphism is not an isomorphism"),
            Error::NotASphereModel => {
                f.write_str("NotASphereModel: reduced integral homology is not Z in a single dimension")
            }
            Error::NotAnEndomorphism => f.write_str("source and target complexes differ"),
            Error::NotPointed => f.write_str("map does not preserve basepoints"),
            Error::InvalidComplex(r) => write!(f, "invalid complex: {}", r),
            Error::InvalidMap(r) => write!(f, "invalid chain map: {}", r),
            Error::OutOfRange { what, value, max } => {
                write!(f, "{} {} out of range (maximum {})", what, value, max)
            }
            Error::MalformedWord { face, reason } => {
                write!(f, "attaching word of face {}: {}", face + 1, reason)
            }
            Error::UnknownComplex(name) => write!(f, "unknown complex '{}'", name),
            Error::IsoTransportFailure => {
                f.write_str("cone-to-quotient comparison is not an isomorphism")
            }
        }
    }
}

impl core::error::Error for Error {}
