//! Forward and inverse equidistant cylindrical transform and its scale
//! factors, in the general form with a configurable central meridian and
//! standard parallel:
//!
//! ```text
//! forward:  x = R (lon - lon0) cos(lat1)      y = R lat
//! inverse:  lon = x / (R cos(lat1)) + lon0    lat = y / R
//! scale:    meridian = 1                      parallel = cos(lat1) / cos(lat)
//! ```
//!
//! The defaults `lon0 = 0`, `lat1 = 0` place the intersection of the
//! Greenwich meridian and the equator at the map origin; the forward map
//! then sends the valid coordinate domain onto the rectangle
//! `[-R pi, R pi] x [-R pi/2, R pi/2]`.
//!
//! `forward` applies no wrapping to `lon - lon0`: a pair of points on
//! opposite sides of the antimeridian keeps its full map-plane offset.

use crate::error::{Error, Result};
use crate::geo::{Angle, GeoPoint, SphereModel};
use core::f64::consts::{FRAC_PI_2, PI};

/// Absorbs forward-then-divide roundoff when an inverse result lands a few
/// ulps past a domain endpoint. Small enough that the re-projected point
/// moves by well under 1e-9 km.
const DOMAIN_SLACK_RAD: f64 = 1e-14;

/// Central meridian and standard parallel of the general transform.
///
/// The standard parallel must stay strictly between the poles; at a pole
/// its cosine vanishes and every forward x would collapse to zero, so such
/// parameters are rejected at construction rather than at projection time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionParams {
    central_meridian: Angle,
    standard_parallel: Angle,
}

impl ProjectionParams {
    /// Validates `-pi <= lon0 <= pi` and `-pi/2 < lat1 < pi/2`.
    pub fn new(central_meridian: Angle, standard_parallel: Angle) -> Result<Self> {
        let lon0 = central_meridian.radians();
        if lon0.abs() > PI {
            return Err(Error::LongitudeOutOfRange { radians: lon0 });
        }
        let lat1 = standard_parallel.radians();
        if lat1.abs() > FRAC_PI_2 {
            return Err(Error::LatitudeOutOfRange { radians: lat1 });
        }
        if lat1.abs() == FRAC_PI_2 {
            return Err(Error::PolarStandardParallel { radians: lat1 });
        }
        Ok(ProjectionParams {
            central_meridian,
            standard_parallel,
        })
    }

    /// Convenience constructor from degree values.
    pub fn from_degrees(central_meridian_deg: f64, standard_parallel_deg: f64) -> Result<Self> {
        Self::new(
            Angle::from_degrees(central_meridian_deg)?,
            Angle::from_degrees(standard_parallel_deg)?,
        )
    }

    /// The central meridian `lon0`.
    pub fn central_meridian(self) -> Angle {
        self.central_meridian
    }

    /// The standard parallel `lat1`.
    pub fn standard_parallel(self) -> Angle {
        self.standard_parallel
    }

    /// Cosine of the standard parallel; strictly positive for valid params.
    pub fn cos_standard_parallel(self) -> f64 {
        libm::cos(self.standard_parallel.radians())
    }
}

impl Default for ProjectionParams {
    fn default() -> Self {
        ProjectionParams {
            central_meridian: Angle::ZERO,
            standard_parallel: Angle::ZERO,
        }
    }
}

/// A projected map position in kilometers; x grows eastward, y northward.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MapPoint {
    /// East-west coordinate in kilometers.
    pub x_km: f64,
    /// North-south coordinate in kilometers.
    pub y_km: f64,
}

impl MapPoint {
    /// Builds a map point.
    pub fn new(x_km: f64, y_km: f64) -> Self {
        MapPoint { x_km, y_km }
    }

    /// Euclidean distance to another map point, in kilometers.
    pub fn distance_to(self, other: MapPoint) -> f64 {
        libm::hypot(self.x_km - other.x_km, self.y_km - other.y_km)
    }
}

/// Local length distortion of the transform at one latitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleFactors {
    /// Scale along the meridian (north-south); identically 1.
    pub meridian: f64,
    /// Scale along the parallel (east-west); `cos(lat1) / cos(lat)`.
    pub parallel: f64,
}

/// Projects a geographic position onto the map plane.
pub fn forward(point: GeoPoint, params: ProjectionParams, sphere: SphereModel) -> MapPoint {
    let r = sphere.radius_km();
    let x = r
        * (point.lon_radians() - params.central_meridian().radians())
        * params.cos_standard_parallel();
    let y = r * point.lat_radians();
    MapPoint { x_km: x, y_km: y }
}

/// Recovers the geographic position of a map point.
///
/// Fails with a domain error naming the offending coordinate when the
/// algebraic result lands outside the latitude or longitude range.
pub fn inverse(map: MapPoint, params: ProjectionParams, sphere: SphereModel) -> Result<GeoPoint> {
    if !map.x_km.is_finite() {
        return Err(Error::NonFinite {
            what: "map x coordinate",
        });
    }
    if !map.y_km.is_finite() {
        return Err(Error::NonFinite {
            what: "map y coordinate",
        });
    }
    let r = sphere.radius_km();
    let lat = map.y_km / r;
    let lon = map.x_km / (r * params.cos_standard_parallel()) + params.central_meridian().radians();
    let lat = clamp_into(lat, FRAC_PI_2).ok_or(Error::LatitudeOutOfRange { radians: lat })?;
    let lon = clamp_into(lon, PI).ok_or(Error::LongitudeOutOfRange { radians: lon })?;
    GeoPoint::from_radians(lat, lon)
}

fn clamp_into(value: f64, bound: f64) -> Option<f64> {
    if value.abs() <= bound {
        Some(value)
    } else if value.abs() <= bound + DOMAIN_SLACK_RAD {
        Some(bound.copysign(value))
    } else {
        None
    }
}

/// Scale factors of the transform at the given latitude.
///
/// Rejects pole latitudes: `parallel` diverges as the latitude approaches
/// `+-pi/2`.
pub fn scale_factors(lat: Angle, params: ProjectionParams) -> Result<ScaleFactors> {
    let phi = lat.radians();
    if phi.abs() > FRAC_PI_2 {
        return Err(Error::LatitudeOutOfRange { radians: phi });
    }
    if phi.abs() == FRAC_PI_2 {
        return Err(Error::PoleSingularity {
            latitude_radians: phi,
        });
    }
    Ok(ScaleFactors {
        meridian: 1.0,
        parallel: params.cos_standard_parallel() / libm::cos(phi),
    })
}
