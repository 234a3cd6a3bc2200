//! Angles, geographic positions, the spherical earth model, and the
//! spherical-to-Cartesian conversion that the rest of the crate builds on.
//!
//! All angles are stored in radians; degrees exist only at I/O boundaries.
//! Latitudes south of the equator and longitudes west of the prime meridian
//! are negative. Every type here is an immutable value and every function is
//! pure, so unrestricted concurrent use is safe.

use crate::error::{Error, Result};
use core::f64::consts::{FRAC_PI_2, PI};

/// Mean earth radius in kilometers.
pub const EARTH_RADIUS_KM: f64 = 6371.0;

/// A plane angle stored in radians. Guaranteed finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    /// The zero angle.
    pub const ZERO: Angle = Angle(0.0);

    /// Wraps a radian value, rejecting NaN and infinities.
    pub fn from_radians(radians: f64) -> Result<Self> {
        if !radians.is_finite() {
            return Err(Error::NonFinite {
                what: "angle in radians",
            });
        }
        Ok(Angle(radians))
    }

    /// Converts degrees to radians as `degrees * pi / 180`.
    pub fn from_degrees(degrees: f64) -> Result<Self> {
        if !degrees.is_finite() {
            return Err(Error::NonFinite {
                what: "angle in degrees",
            });
        }
        Ok(Angle(degrees.to_radians()))
    }

    /// The value in radians.
    pub fn radians(self) -> f64 {
        self.0
    }

    /// The value converted to degrees.
    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }
}

/// A position on the sphere: latitude in `[-pi/2, pi/2]` and longitude in
/// `[-pi, pi]`, both in radians.
///
/// Constructors reject out-of-range coordinates instead of wrapping or
/// clamping. Silent wrapping would mask caller errors and change planar
/// distances across the antimeridian; the exact domain endpoints are valid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoPoint {
    lat: Angle,
    lon: Angle,
}

impl GeoPoint {
    /// Builds a point from validated angles, checking the coordinate domain.
    pub fn new(lat: Angle, lon: Angle) -> Result<Self> {
        if lat.radians().abs() > FRAC_PI_2 {
            return Err(Error::LatitudeOutOfRange {
                radians: lat.radians(),
            });
        }
        if lon.radians().abs() > PI {
            return Err(Error::LongitudeOutOfRange {
                radians: lon.radians(),
            });
        }
        Ok(GeoPoint { lat, lon })
    }

    /// Builds a point from raw radian coordinates.
    pub fn from_radians(lat: f64, lon: f64) -> Result<Self> {
        Self::new(Angle::from_radians(lat)?, Angle::from_radians(lon)?)
    }

    /// Builds a point from degree coordinates, converting exactly once.
    pub fn from_degrees(lat: f64, lon: f64) -> Result<Self> {
        Self::new(Angle::from_degrees(lat)?, Angle::from_degrees(lon)?)
    }

    /// Latitude.
    pub fn lat(self) -> Angle {
        self.lat
    }

    /// Longitude.
    pub fn lon(self) -> Angle {
        self.lon
    }

    /// Latitude in radians.
    pub fn lat_radians(self) -> f64 {
        self.lat.radians()
    }

    /// Longitude in radians.
    pub fn lon_radians(self) -> f64 {
        self.lon.radians()
    }
}

/// A spherical earth of a fixed radius in kilometers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereModel {
    radius_km: f64,
}

impl SphereModel {
    /// The 6371 km mean-radius sphere used by default.
    pub const EARTH: SphereModel = SphereModel {
        radius_km: EARTH_RADIUS_KM,
    };

    /// Builds a sphere, rejecting non-positive or non-finite radii.
    pub fn new(radius_km: f64) -> Result<Self> {
        if !radius_km.is_finite() || radius_km <= 0.0 {
            return Err(Error::InvalidRadius { radius_km });
        }
        Ok(SphereModel { radius_km })
    }

    /// Radius in kilometers.
    pub fn radius_km(self) -> f64 {
        self.radius_km
    }

    /// Diameter `2R` in kilometers, the longest possible chord.
    pub fn diameter_km(self) -> f64 {
        2.0 * self.radius_km
    }
}

impl Default for SphereModel {
    fn default() -> Self {
        Self::EARTH
    }
}

/// A point in the earth-centered Cartesian frame, in kilometers.
///
/// `x` points at (lat 0, lon 0), `y` at (lat 0, lon pi/2), and `z` at the
/// north pole.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cartesian3 {
    /// Kilometers toward (0, 0).
    pub x: f64,
    /// Kilometers toward (0, pi/2).
    pub y: f64,
    /// Kilometers toward the north pole.
    pub z: f64,
}

impl Cartesian3 {
    /// Euclidean norm.
    pub fn norm(self) -> f64 {
        libm::sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
    }

    /// Euclidean distance to another point.
    pub fn distance_to(self, other: Cartesian3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        libm::sqrt(dx * dx + dy * dy + dz * dz)
    }
}

/// Converts a geographic position to Cartesian coordinates on the sphere:
///
/// ```text
/// x = R cos(lon) cos(lat)
/// y = R sin(lon) cos(lat)
/// z = R sin(lat)
/// ```
///
/// The result lies on the sphere: its norm equals the radius to within
/// floating-point rounding.
pub fn spherical_to_cartesian(point: GeoPoint, sphere: SphereModel) -> Cartesian3 {
    let lat = point.lat_radians();
    let lon = point.lon_radians();
    let r = sphere.radius_km();
    let cos_lat = libm::cos(lat);
    Cartesian3 {
        x: r * libm::cos(lon) * cos_lat,
        y: r * libm::sin(lon) * cos_lat,
        z: r * libm::sin(lat),
    }
}
