//! Spherical-earth toolkit for the equidistant cylindrical (plate carree)
//! map projection and its distance distortion.
//!
//! The crate covers:
//!
//! - forward/inverse transforms and scale factors in the general form with
//!   a configurable central meridian and standard parallel ([`projection`])
//! - four distance formulations between surface points (planar on the map,
//!   chord through the sphere, great-circle arc, haversine) plus the
//!   chord-to-arc conversions ([`distance`])
//! - indicatrix ellipses and the angular and distance distortion of the
//!   projected unit cell ([`distortion`])
//! - batch surveys over point-pair sets and distortion fields over
//!   graticule grids, with a seeded area-uniform sphere sampler
//!   ([`survey`])
//!
//! Angles are radians everywhere; degrees belong to I/O boundaries.
//! Distances are kilometers. All types are immutable values and all
//! operations are pure functions, safe for unrestricted concurrent use.
//!
//! The crate is `no_std` (with `alloc`) and does all float math through
//! [`libm`], so results are reproducible bit for bit across platforms.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod distance;
pub mod distortion;
pub mod error;
pub mod geo;
pub mod projection;
pub mod survey;

pub use error::{Error, Result};
pub use geo::{spherical_to_cartesian, Angle, Cartesian3, GeoPoint, SphereModel, EARTH_RADIUS_KM};
pub use projection::{forward, inverse, scale_factors, MapPoint, ProjectionParams, ScaleFactors};
