//! The error type shared by every module in this crate.

use core::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Domain and validation failures.
///
/// Every operation in this crate either returns a finite number or one of
/// these errors; no function returns NaN or an infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// An input that must be a real number was NaN or infinite.
    NonFinite {
        /// Which input was rejected.
        what: &'static str,
    },
    /// Latitude outside `[-pi/2, pi/2]` radians.
    LatitudeOutOfRange {
        /// The rejected value in radians.
        radians: f64,
    },
    /// Longitude outside `[-pi, pi]` radians.
    LongitudeOutOfRange {
        /// The rejected value in radians.
        radians: f64,
    },
    /// Sphere radius must be a positive, finite number of kilometers.
    InvalidRadius {
        /// The rejected value.
        radius_km: f64,
    },
    /// A standard parallel of +-pi/2 collapses the x axis of the projection.
    PolarStandardParallel {
        /// The rejected value in radians.
        radians: f64,
    },
    /// The parallel scale factor grows without bound at the poles, so
    /// pole-latitude inputs are rejected rather than answered with infinity.
    PoleSingularity {
        /// The offending latitude in radians.
        latitude_radians: f64,
    },
    /// A chord length outside `[0, 2R]` does not correspond to any pair of
    /// surface points.
    InvalidChord {
        /// The rejected chord length.
        chord_km: f64,
        /// The sphere diameter `2R` bounding valid chords.
        diameter_km: f64,
    },
    /// The vertical fraction of the distortion model must lie in `[0, 1]`.
    FractionOutOfRange {
        /// The rejected value.
        value: f64,
    },
    /// A longitude difference outside `[-pi, pi]` radians.
    DeltaLonOutOfRange {
        /// The rejected value in radians.
        radians: f64,
    },
    /// A survey needs at least one point pair.
    EmptyPairs,
    /// The random sampler cannot produce zero pairs.
    ZeroPairCount,
    /// Pair labels must be non-empty.
    EmptyLabel {
        /// Which label was empty.
        which: &'static str,
    },
    /// A grid step must be positive and divide its axis span evenly.
    InvalidGridStep {
        /// The rejected step in degrees.
        step_deg: f64,
        /// The axis span the step must divide (180 or 360 degrees).
        span_deg: f64,
    },
    /// The pole exclusion margin must lie in `[0, 90)` degrees.
    InvalidPoleMargin {
        /// The rejected margin.
        margin_deg: f64,
    },
    /// A sampled curve needs at least two points.
    TooFewSamples {
        /// The rejected sample count.
        count: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { what } => write!(f, "{what} must be finite"),
            Error::LatitudeOutOfRange { radians } => {
                write!(f, "latitude {radians} rad is outside [-pi/2, pi/2]")
            }
            Error::LongitudeOutOfRange { radians } => {
                write!(f, "longitude {radians} rad is outside [-pi, pi]")
            }
            Error::InvalidRadius { radius_km } => {
                write!(f, "sphere radius {radius_km} km must be positive and finite")
            }
            Error::PolarStandardParallel { radians } => write!(
                f,
                "standard parallel {radians} rad is a pole; cos(lat) = 0 collapses the x axis"
            ),
            Error::PoleSingularity { latitude_radians } => write!(
                f,
                "latitude {latitude_radians} rad is a pole where the parallel scale is unbounded"
            ),
            Error::InvalidChord {
                chord_km,
                diameter_km,
            } => write!(
                f,
                "chord {chord_km} km is outside [0, {diameter_km}] km"
            ),
            Error::FractionOutOfRange { value } => {
                write!(f, "fraction {value} is outside [0, 1]")
            }
            Error::DeltaLonOutOfRange { radians } => {
                write!(f, "longitude difference {radians} rad is outside [-pi, pi]")
            }
            Error::EmptyPairs => write!(f, "the pair list is empty"),
            Error::ZeroPairCount => write!(f, "the requested pair count must be at least 1"),
            Error::EmptyLabel { which } => write!(f, "label {which} is empty"),
            Error::InvalidGridStep { step_deg, span_deg } => write!(
                f,
                "grid step {step_deg} deg must be positive and divide {span_deg} deg evenly"
            ),
            Error::InvalidPoleMargin { margin_deg } => {
                write!(f, "pole margin {margin_deg} deg is outside [0, 90)")
            }
            Error::TooFewSamples { count } => {
                write!(f, "{count} samples requested, at least 2 required")
            }
        }
    }
}

impl core::error::Error for Error {}
