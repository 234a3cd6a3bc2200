//! Local distortion analysis: indicatrix ellipses on the graticule, the
//! angular distortion of the projected unit cell, and the unit-free
//! distance distortion of a map-plane offset.
//!
//! The angular distortion of a point whose vertical fraction inside the
//! unit cell is `a` comes out as
//!
//! ```text
//! omega(a) = arctan((1 - a) / (1 + a)),   0 <= a <= 1
//! ```
//!
//! which decreases from `pi/4` at `a = 0` to zero at `a = 1`; its
//! derivative is `-1 / (1 + a^2)`.
//!
//! The distance distortion of an offset `(dlon, lat)` measured in
//! projection-plane units (multiples of the sphere radius) is
//!
//! ```text
//! sqrt(lat^2 + dlon^2 sec^2(lat)) - sqrt(dlon^2 + lat^2)
//! ```
//!
//! zero on the equator and along a meridian, and unbounded toward the
//! poles.

use crate::error::{Error, Result};
use crate::geo::{Angle, GeoPoint};
use crate::projection::{scale_factors, ProjectionParams};
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

/// The projected image of an infinitesimal circle drawn on the sphere.
///
/// The semi-axes are length ratios against the original circle: the
/// meridian axis stays 1 while the parallel axis carries the parallel
/// scale factor, so the image is a circle exactly on the standard
/// parallel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TissotEllipse {
    /// Where the indicatrix is anchored.
    pub center: GeoPoint,
    /// Semi-axis along the parallel (east-west); the parallel scale factor.
    pub semi_axis_parallel: f64,
    /// Semi-axis along the meridian (north-south); identically 1.
    pub semi_axis_meridian: f64,
    /// Largest angular distortion of the unit cell, `omega(0) = pi/4`.
    pub max_angular_distortion: f64,
}

/// Angular distortion sampled over the vertical fraction `a in [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularDistortionCurve {
    samples: Vec<(f64, f64)>,
}

impl AngularDistortionCurve {
    /// Samples the curve at `count >= 2` evenly spaced fractions from 0
    /// to 1 inclusive. The omega values are strictly decreasing.
    pub fn sample(count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::TooFewSamples { count });
        }
        let last = (count - 1) as f64;
        let samples = (0..count)
            .map(|i| {
                let a = i as f64 / last;
                (a, omega(a))
            })
            .collect();
        Ok(AngularDistortionCurve { samples })
    }

    /// The `(a, omega)` samples in increasing order of `a`.
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }
}

/// Angular distortion `arctan((1 - a) / (1 + a))` for `a in [0, 1]`.
pub fn angular_distortion(a: f64) -> Result<f64> {
    validate_fraction(a)?;
    Ok(omega(a))
}

/// Derivative of [`angular_distortion`], `-1 / (1 + a^2)`; strictly
/// negative on the domain, so the maximum distortion sits at `a = 0`.
pub fn angular_distortion_derivative(a: f64) -> Result<f64> {
    validate_fraction(a)?;
    Ok(-1.0 / (1.0 + a * a))
}

/// Distance distortion of a map-plane offset of `delta_lon` radians of
/// longitude taken at latitude `lat`, in projection-plane units.
///
/// Non-negative everywhere; zero exactly when `delta_lon = 0` or the
/// latitude is zero. Pole latitudes are rejected since the value grows
/// without bound there.
pub fn distance_distortion(delta_lon: f64, lat: Angle) -> Result<f64> {
    if !(-PI..=PI).contains(&delta_lon) {
        return Err(Error::DeltaLonOutOfRange { radians: delta_lon });
    }
    let phi = lat.radians();
    if phi.abs() > FRAC_PI_2 {
        return Err(Error::LatitudeOutOfRange { radians: phi });
    }
    if phi.abs() == FRAC_PI_2 {
        return Err(Error::PoleSingularity {
            latitude_radians: phi,
        });
    }
    let stretched = delta_lon / libm::cos(phi);
    Ok(libm::sqrt(phi * phi + stretched * stretched)
        - libm::sqrt(delta_lon * delta_lon + phi * phi))
}

/// The indicatrix at a point: axes from the scale factors at its latitude.
pub fn indicatrix(at: GeoPoint, params: ProjectionParams) -> Result<TissotEllipse> {
    let scale = scale_factors(at.lat(), params)?;
    Ok(TissotEllipse {
        center: at,
        semi_axis_parallel: scale.parallel,
        semi_axis_meridian: scale.meridian,
        max_angular_distortion: omega(0.0),
    })
}

fn omega(a: f64) -> f64 {
    libm::atan((1.0 - a) / (1.0 + a))
}

fn validate_fraction(a: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::FractionOutOfRange { value: a });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_4;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "left={a} right={b} tol={tol}");
    }

    #[test]
    fn omega_endpoints_and_midpoint() {
        close(angular_distortion(0.0).unwrap(), FRAC_PI_4, 1e-12);
        assert_eq!(angular_distortion(1.0).unwrap(), 0.0);
        // arctan(1/3) in extended precision
        close(angular_distortion(0.5).unwrap(), 0.3217505543966422, 1e-6);
    }

    #[test]
    fn omega_rejects_out_of_range() {
        assert!(matches!(
            angular_distortion(-0.001),
            Err(Error::FractionOutOfRange { .. })
        ));
        assert!(angular_distortion(1.001).is_err());
        assert!(angular_distortion(f64::NAN).is_err());
        assert!(angular_distortion_derivative(2.0).is_err());
    }

    #[test]
    fn derivative_closed_form() {
        assert_eq!(angular_distortion_derivative(0.0).unwrap(), -1.0);
        assert_eq!(angular_distortion_derivative(1.0).unwrap(), -0.5);
        close(angular_distortion_derivative(0.3).unwrap(), -1.0 / 1.09, 1e-12);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let h = 1e-6;
        for i in 1..100 {
            let a = i as f64 / 100.0;
            let fd = (omega(a + h) - omega(a - h)) / (2.0 * h);
            close(angular_distortion_derivative(a).unwrap(), fd, 1e-4);
        }
    }

    #[test]
    fn curve_is_strictly_decreasing() {
        let curve = AngularDistortionCurve::sample(1000).unwrap();
        let samples = curve.samples();
        assert_eq!(samples.len(), 1000);
        assert_eq!(samples[0].0, 0.0);
        close(samples[0].1, FRAC_PI_4, 1e-12);
        assert_eq!(samples[999], (1.0, 0.0));
        for pair in samples.windows(2) {
            assert!(pair[1].1 < pair[0].1, "omega must strictly decrease");
        }
        assert!(AngularDistortionCurve::sample(1).is_err());
    }

    #[test]
    fn distance_distortion_zero_lines() {
        // preserved along the equator for any longitude offset
        assert_eq!(distance_distortion(1.0, Angle::ZERO).unwrap(), 0.0);
        // and for a zero offset at any latitude
        for deg in [-80.0, -15.0, 30.0, 89.0] {
            let lat = Angle::from_degrees(deg).unwrap();
            assert_eq!(distance_distortion(0.0, lat).unwrap(), 0.0);
        }
    }

    #[test]
    fn distance_distortion_worked_value() {
        let lat = Angle::from_radians(core::f64::consts::FRAC_PI_3).unwrap();
        close(distance_distortion(1.0, lat).unwrap(), 0.8095981595912347, 1e-4);
    }

    #[test]
    fn distance_distortion_domain_errors() {
        assert!(matches!(
            distance_distortion(3.2, Angle::ZERO),
            Err(Error::DeltaLonOutOfRange { .. })
        ));
        assert!(matches!(
            distance_distortion(1.0, Angle::from_radians(FRAC_PI_2).unwrap()),
            Err(Error::PoleSingularity { .. })
        ));
        assert!(matches!(
            distance_distortion(1.0, Angle::from_radians(2.0).unwrap()),
            Err(Error::LatitudeOutOfRange { .. })
        ));
    }

    #[test]
    fn distance_distortion_diverges_toward_the_pole() {
        let lat = Angle::from_radians(FRAC_PI_2 - 1e-6).unwrap();
        assert!(distance_distortion(1.0, lat).unwrap() > 1e5);
    }

    #[test]
    fn indicatrix_axes() {
        let params = ProjectionParams::default();
        let at = |lat_deg| GeoPoint::from_degrees(lat_deg, 10.0).unwrap();

        let eq = indicatrix(at(0.0), params).unwrap();
        assert_eq!(eq.semi_axis_parallel, 1.0);
        assert_eq!(eq.semi_axis_meridian, 1.0);
        close(eq.max_angular_distortion, FRAC_PI_4, 1e-12);

        let sixty = indicatrix(at(60.0), params).unwrap();
        close(sixty.semi_axis_parallel, 2.0, 1e-12);

        let eighty = indicatrix(at(80.0), params).unwrap();
        close(eighty.semi_axis_parallel, 5.758770483143631, 1e-3);

        assert!(indicatrix(
            GeoPoint::from_degrees(90.0, 0.0).unwrap(),
            params
        )
        .is_err());
    }
}
