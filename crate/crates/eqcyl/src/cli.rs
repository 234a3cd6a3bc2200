//! Flag and subcommand definitions.
//!
//! Coordinates are always written as latitude,longitude in degrees, on
//! flags and in CSV files alike. Everything internal runs in radians.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Equidistant cylindrical (plate carree) projection toolkit.
#[derive(Debug, Parser)]
#[command(
    name = "eqcyl",
    version,
    about = "Equidistant cylindrical (plate carree) projection toolkit",
    long_about = "Equidistant cylindrical (plate carree) projection toolkit.\n\
                  Projects points, compares distance formulations, runs batch\n\
                  surveys to CSV, and renders the graticule with distortion\n\
                  ellipses to SVG.\n\n\
                  Coordinates are always latitude,longitude in DEGREES, both\n\
                  on flags and in CSV columns. Distances are kilometers.\n\n\
                  Settings precedence: flags > --config file > built-in\n\
                  defaults (radius 6371 km, central meridian 0, standard\n\
                  parallel 0)."
)]
pub struct Cli {
    /// Sphere radius in kilometers
    #[arg(long, global = true)]
    pub radius_km: Option<f64>,

    /// Central meridian in degrees
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub central_meridian: Option<f64>,

    /// Standard parallel in degrees
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub standard_parallel: Option<f64>,

    /// Key-value config file; flags override its entries
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Write output to this file (atomically); stdout when omitted
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Output format; each command defaults to its natural format
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Plain text lines.
    Text,
    /// Comma-separated values with a header row.
    Csv,
    /// SVG 1.1 document.
    Svg,
}

/// The available subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Project latitude,longitude degrees to map kilometers (or back with --inverse)
    Project(ProjectArgs),
    /// Distance between two points by the chosen formulation
    Distance(DistanceArgs),
    /// Batch distance reports over a pair file or a random sample, as CSV
    Survey(SurveyArgs),
    /// Render the graticule with indicatrix ellipses as SVG
    Tissot(TissotArgs),
}

/// Arguments of `project`.
#[derive(Debug, Args)]
pub struct ProjectArgs {
    /// Latitude in degrees (forward)
    #[arg(
        long,
        allow_negative_numbers = true,
        required_unless_present = "inverse",
        conflicts_with = "inverse"
    )]
    pub lat: Option<f64>,

    /// Longitude in degrees (forward)
    #[arg(
        long,
        allow_negative_numbers = true,
        required_unless_present = "inverse",
        conflicts_with = "inverse"
    )]
    pub lon: Option<f64>,

    /// Convert map kilometers back to degrees
    #[arg(long)]
    pub inverse: bool,

    /// Map x coordinate in kilometers (with --inverse)
    #[arg(long, allow_negative_numbers = true, requires = "inverse")]
    pub x: Option<f64>,

    /// Map y coordinate in kilometers (with --inverse)
    #[arg(long, allow_negative_numbers = true, requires = "inverse")]
    pub y: Option<f64>,
}

/// Arguments of `distance`.
#[derive(Debug, Args)]
pub struct DistanceArgs {
    /// First point as lat,lon in degrees
    #[arg(long, allow_hyphen_values = true, value_name = "LAT,LON")]
    pub from: String,

    /// Second point as lat,lon in degrees
    #[arg(long, allow_hyphen_values = true, value_name = "LAT,LON")]
    pub to: String,

    /// Distance formulation
    #[arg(long, value_enum)]
    pub method: Method,
}

/// Distance formulation selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Euclidean distance on the map plane.
    Planar,
    /// Straight line through the sphere.
    Chord,
    /// Arc along the surface, from the chord.
    GreatCircle,
    /// Arc along the surface, via the haversine identity.
    Haversine,
    /// Arc via the single-arcsin form (folds past a quarter turn).
    PaperArcsin,
    /// All formulations plus the planar error percentage.
    Report,
}

/// Arguments of `survey`.
#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["pairs", "random"])))]
pub struct SurveyArgs {
    /// CSV file of labelled point pairs
    #[arg(long, value_name = "PATH")]
    pub pairs: Option<PathBuf>,

    /// Generate this many random pairs, area-uniform on the sphere
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,

    /// Seed for --random
    #[arg(long, default_value_t = 0, requires = "random")]
    pub seed: u64,

    /// Add a planar column with the longitude difference wrapped to [-180, 180]
    #[arg(long)]
    pub wrapped_planar: bool,
}

/// Arguments of `tissot`.
#[derive(Debug, Args)]
pub struct TissotArgs {
    /// Graticule spacing in degrees; must divide 180 and 360 evenly
    #[arg(long, default_value_t = 30.0, allow_negative_numbers = true)]
    pub grid_step: f64,

    /// Visual radius in kilometers of an undistorted unit indicatrix
    #[arg(long, default_value_t = 500.0, allow_negative_numbers = true)]
    pub ellipse_scale: f64,

    /// Latitude band excluded around each pole, in degrees
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pub margin: f64,
}
