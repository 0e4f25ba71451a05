//! Error type shared across the crate.

use std::fmt;

/// Everything that can go wrong while building series, solving for theta
/// weights, certifying minima, or enumerating lattice vectors.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A series constructor was asked for a truncation order below its
    /// minimum (theta series need order >= 1, Delta needs order >= 2).
    InvalidOrder { requested: i64, minimum: i64 },
    /// A dimension that must be a multiple of 8 was not.
    DimensionNotMultipleOf8(u32),
    /// A dimension outside the range an operation supports.
    DimensionOutOfRange { dimension: u32, low: u32, high: u32 },
    /// A prescribed-coefficient vector of the wrong length.
    PrefixLength { expected: usize, got: usize },
    /// A weight vector of the wrong length for its dimension and parity.
    WeightsLength { expected: usize, got: usize },
    /// A weight vector whose leading entry is not 1.
    LeadingWeightNotOne(String),
    /// Mixed even/general objects where the parities must agree.
    ParityMismatch,
    /// A basis truncated too short for the requested solve or reconstruction.
    OrderTooSmall { needed: i64, got: i64 },
    /// The zero polynomial has no minimum certificate or gain.
    ZeroPolynomial,
    /// A polynomial whose value at z = 1/4 is not strictly positive has no
    /// secrecy gain.
    NonPositiveAtUnity(String),
    /// A Gram matrix that is not symmetric.
    NotSymmetric,
    /// A Gram matrix that is not positive definite.
    NotPositiveDefinite,
    /// A Gram matrix with no rows.
    EmptyMatrix,
    /// An enumeration request beyond the configured safety caps.
    LimitExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    /// An evaluation point with a non-positive coordinate or tolerance.
    InvalidEvalPoint(String),
    /// An empty sampling grid.
    EmptyGrid,
    /// A string that does not parse as a rational number.
    ParseRational(String),
    /// A file or literal that does not parse as a Gram matrix.
    ParseMatrix(String),
    /// A theorem instance outside the dimensions the statement covers.
    TheoremDimension {
        dimension: u32,
        reason: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder { requested, minimum } => {
                write!(f, "order {} is below the minimum {}", requested, minimum)
            }
            Error::DimensionNotMultipleOf8(n) => {
                write!(f, "dimension {} is not a multiple of 8", n)
            }
            Error::DimensionOutOfRange {
                dimension,
                low,
                high,
            } => {
                write!(
                    f,
                    "dimension {} is outside the supported range {}..={}",
                    dimension, low, high
                )
            }
            Error::PrefixLength { expected, got } => {
                write!(
                    f,
                    "prescribed coefficient vector has length {}, expected {}",
                    got, expected
                )
            }
            Error::WeightsLength { expected, got } => {
                write!(f, "weight vector has length {}, expected {}", got, expected)
            }
            Error::LeadingWeightNotOne(w) => {
                write!(f, "leading weight must be 1, got {}", w)
            }
            Error::ParityMismatch => write!(f, "even/general parity mismatch"),
            Error::OrderTooSmall { needed, got } => {
                write!(
                    f,
                    "series order {} is too small, need at least {}",
                    got, needed
                )
            }
            Error::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            Error::NonPositiveAtUnity(v) => {
                write!(f, "polynomial value {} at z = 1/4 is not positive", v)
            }
            Error::NotSymmetric => write!(f, "Gram matrix is not symmetric"),
            Error::NotPositiveDefinite => write!(f, "Gram matrix is not positive definite"),
            Error::EmptyMatrix => write!(f, "Gram matrix has no rows"),
            Error::LimitExceeded { what, value, cap } => {
                write!(
                    f,
                    "{} {} exceeds the safety cap {} (override the cap to proceed)",
                    what, value, cap
                )
            }
            Error::InvalidEvalPoint(msg) => write!(f, "invalid evaluation point: {}", msg),
            Error::EmptyGrid => write!(f, "sampling grid is empty"),
            Error::ParseRational(s) => write!(f, "cannot parse {:?} as a rational", s),
            Error::ParseMatrix(msg) => write!(f, "cannot parse Gram matrix: {}", msg),
            Error::TheoremDimension { dimension, reason } => {
                write!(f, "dimension {} not covered: {}", dimension, reason)
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
