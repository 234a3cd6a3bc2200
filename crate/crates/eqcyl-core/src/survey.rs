//! Batch analytics: distance reports over sets of point pairs and
//! distortion fields over graticule grids.
//!
//! Row computations are independent of one another and results always
//! follow input order, so callers may farm them out and reassemble. The
//! random sampler is a seeded deterministic stream: identical inputs give
//! identical output, byte for byte.

use crate::distance::{distance_report, DistanceReport};
use crate::distortion::{distance_distortion, indicatrix, TissotEllipse};
use crate::error::{Error, Result};
use crate::geo::{GeoPoint, SphereModel};
use crate::projection::{forward, ProjectionParams};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Width of the latitude buckets used for survey summaries, in degrees.
pub const LAT_BAND_WIDTH_DEG: u32 = 20;

/// A labelled pair of surface points.
#[derive(Debug, Clone, PartialEq)]
pub struct PairRecord {
    name_a: String,
    name_b: String,
    a: GeoPoint,
    b: GeoPoint,
}

impl PairRecord {
    /// Builds a record, rejecting empty labels. The points carry their own
    /// domain guarantees.
    pub fn new(
        name_a: impl Into<String>,
        a: GeoPoint,
        name_b: impl Into<String>,
        b: GeoPoint,
    ) -> Result<Self> {
        let name_a = name_a.into();
        let name_b = name_b.into();
        if name_a.is_empty() {
            return Err(Error::EmptyLabel { which: "name_a" });
        }
        if name_b.is_empty() {
            return Err(Error::EmptyLabel { which: "name_b" });
        }
        Ok(PairRecord {
            name_a,
            name_b,
            a,
            b,
        })
    }

    /// Label of the first point.
    pub fn name_a(&self) -> &str {
        &self.name_a
    }

    /// Label of the second point.
    pub fn name_b(&self) -> &str {
        &self.name_b
    }

    /// The first point.
    pub fn a(&self) -> GeoPoint {
        self.a
    }

    /// The second point.
    pub fn b(&self) -> GeoPoint {
        self.b
    }
}

/// One evaluated pair: labels, coordinates, every distance formulation,
/// and the latitude band the pair falls into.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyRow {
    /// Label of the first point.
    pub name_a: String,
    /// Label of the second point.
    pub name_b: String,
    /// The first point.
    pub a: GeoPoint,
    /// The second point.
    pub b: GeoPoint,
    /// All distance formulations for the pair.
    pub report: DistanceReport,
    /// Planar distance with the longitude difference wrapped into
    /// `[-pi, pi]`; present when the survey ran with `wrapped_planar`.
    pub wrapped_planar_km: Option<f64>,
    /// Lower edge of the 20-degree bucket holding the absolute midpoint
    /// latitude of the pair.
    pub lat_band_deg: u32,
}

/// Evaluates one row per pair, in input order.
pub fn run_survey(
    pairs: &[PairRecord],
    params: ProjectionParams,
    sphere: SphereModel,
    wrapped_planar: bool,
) -> Result<Vec<SurveyRow>> {
    if pairs.is_empty() {
        return Err(Error::EmptyPairs);
    }
    Ok(pairs
        .iter()
        .map(|pair| {
            let report = distance_report(pair.a, pair.b, params, sphere);
            let wrapped_planar_km = wrapped_planar
                .then(|| wrapped_planar_distance(pair.a, pair.b, params, sphere));
            SurveyRow {
                name_a: pair.name_a.clone(),
                name_b: pair.name_b.clone(),
                a: pair.a,
                b: pair.b,
                report,
                wrapped_planar_km,
                lat_band_deg: lat_band_deg(pair.a, pair.b),
            }
        })
        .collect())
}

/// Planar distance with the longitude difference first wrapped into
/// `[-pi, pi]`, so a pair straddling the antimeridian measures the short
/// way across the map edge. Never exceeds the unwrapped planar distance.
pub fn wrapped_planar_distance(
    p: GeoPoint,
    q: GeoPoint,
    params: ProjectionParams,
    sphere: SphereModel,
) -> f64 {
    let r = sphere.radius_km();
    let dx = r * wrap_longitude_difference(p.lon_radians() - q.lon_radians())
        * params.cos_standard_parallel();
    let dy = forward(p, params, sphere).y_km - forward(q, params, sphere).y_km;
    libm::hypot(dx, dy)
}

// valid longitudes keep the raw difference inside [-2 pi, 2 pi]
fn wrap_longitude_difference(dlon: f64) -> f64 {
    if dlon > PI {
        dlon - TAU
    } else if dlon < -PI {
        dlon + TAU
    } else {
        dlon
    }
}

/// Lower edge, in degrees, of the 20-degree bucket holding the absolute
/// midpoint latitude of the pair. The top band covers `[80, 90]`.
pub fn lat_band_deg(a: GeoPoint, b: GeoPoint) -> u32 {
    let mid = (a.lat().degrees() + b.lat().degrees()) / 2.0;
    let band = (mid.abs() / LAT_BAND_WIDTH_DEG as f64) as u32 * LAT_BAND_WIDTH_DEG;
    // a midpoint of exactly 90 folds into the top band
    band.min(90 / LAT_BAND_WIDTH_DEG * LAT_BAND_WIDTH_DEG)
}

/// Draws `count` labelled pairs, area-uniform on the sphere: latitudes
/// uniform in `sin(lat)` so the poles are not oversampled, longitudes
/// uniform over `[-pi, pi)`. Deterministic for a fixed seed.
pub fn random_pairs(count: usize, seed: u64) -> Result<Vec<PairRecord>> {
    if count == 0 {
        return Err(Error::ZeroPairCount);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|i| {
            let a = random_point(&mut rng);
            let b = random_point(&mut rng);
            PairRecord::new(format!("r{i}-a"), a, format!("r{i}-b"), b)
                .expect("generated labels are non-empty")
        })
        .collect())
}

fn random_point(rng: &mut ChaCha8Rng) -> GeoPoint {
    let lat = libm::asin(2.0 * unit_f64(rng) - 1.0);
    let lon = PI * (2.0 * unit_f64(rng) - 1.0);
    GeoPoint::from_radians(lat, lon).expect("sampled coordinates stay in range")
}

// 53 uniform bits mapped onto [0, 1)
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A graticule grid: step sizes that evenly divide the 180-degree
/// latitude span and the 360-degree longitude span, plus a latitude
/// margin excluded around each pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    lat_step_deg: f64,
    lon_step_deg: f64,
    pole_margin_deg: f64,
}

impl GridSpec {
    /// Validates the steps and margin.
    pub fn new(lat_step_deg: f64, lon_step_deg: f64, pole_margin_deg: f64) -> Result<Self> {
        validate_step(lat_step_deg, 180.0)?;
        validate_step(lon_step_deg, 360.0)?;
        if !pole_margin_deg.is_finite() || !(0.0..90.0).contains(&pole_margin_deg) {
            return Err(Error::InvalidPoleMargin {
                margin_deg: pole_margin_deg,
            });
        }
        Ok(GridSpec {
            lat_step_deg,
            lon_step_deg,
            pole_margin_deg,
        })
    }

    /// Latitude step in degrees.
    pub fn lat_step_deg(self) -> f64 {
        self.lat_step_deg
    }

    /// Longitude step in degrees.
    pub fn lon_step_deg(self) -> f64 {
        self.lon_step_deg
    }

    /// Pole exclusion margin in degrees.
    pub fn pole_margin_deg(self) -> f64 {
        self.pole_margin_deg
    }
}

impl Default for GridSpec {
    /// 30-degree graticule with a 10-degree pole margin.
    fn default() -> Self {
        GridSpec {
            lat_step_deg: 30.0,
            lon_step_deg: 30.0,
            pole_margin_deg: 10.0,
        }
    }
}

fn validate_step(step_deg: f64, span_deg: f64) -> Result<()> {
    if step_deg.is_finite() && step_deg > 0.0 {
        let count = span_deg / step_deg;
        if (count - libm::round(count)).abs() < 1e-9 && count >= 1.0 - 1e-9 {
            return Ok(());
        }
    }
    Err(Error::InvalidGridStep { step_deg, span_deg })
}

/// One graticule intersection with its indicatrix and the distance
/// distortion of a one-grid-step longitude offset at that latitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistortionSample {
    /// The graticule intersection.
    pub point: GeoPoint,
    /// Indicatrix ellipse at the point.
    pub ellipse: TissotEllipse,
    /// `distance_distortion(lon_step in radians, lat)` at the point.
    pub distance_distortion: f64,
}

/// Evaluates the distortion field over the graticule intersections,
/// row-major from north to south and west to east. Rows inside the pole
/// margin are skipped, and the pole rows themselves are always excluded.
pub fn distortion_field(grid: GridSpec, params: ProjectionParams) -> Result<Vec<DistortionSample>> {
    let lat_rows = libm::round(180.0 / grid.lat_step_deg) as i64;
    let lon_cols = libm::round(360.0 / grid.lon_step_deg) as i64;
    let lat_limit = 90.0 - grid.pole_margin_deg;
    let delta_lon = grid.lon_step_deg.to_radians();

    let mut samples = Vec::new();
    for i in 0..=lat_rows {
        let lat_deg = 90.0 - i as f64 * grid.lat_step_deg;
        // the tiny slack keeps edge rows stable when the step is not
        // exactly representable
        if lat_deg.abs() > lat_limit + 1e-9 || lat_deg.abs() > 90.0 - 1e-9 {
            continue;
        }
        for j in 0..=lon_cols {
            let lon_deg = -180.0 + j as f64 * grid.lon_step_deg;
            let point = GeoPoint::from_degrees(lat_deg, lon_deg)?;
            samples.push(DistortionSample {
                point,
                ellipse: indicatrix(point, params)?,
                distance_distortion: distance_distortion(delta_lon, point.lat())?,
            });
        }
    }
    Ok(samples)
}
