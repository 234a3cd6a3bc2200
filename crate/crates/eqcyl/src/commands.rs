//! Command implementations. Each one produces its output as a string and
//! hands it to the shared writer, so file output is always whole-file
//! atomic and stdout output is identical byte for byte.

use crate::cli::{Cli, Command, DistanceArgs, Format, Method, ProjectArgs, SurveyArgs, TissotArgs};
use crate::config::{resolve, Settings};
use crate::csv_io::{read_pairs, survey_to_csv, write_output};
use crate::error::CliError;
use crate::svg;
use eqcyl_core::distance::{
    arc_from_chord_principal_arcsin, chord_distance, distance_report, great_circle_distance,
    haversine_distance, planar_distance,
};
use eqcyl_core::survey::{random_pairs, run_survey, GridSpec};
use eqcyl_core::{forward, inverse, GeoPoint, MapPoint};

/// Dispatches the parsed invocation.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let settings = resolve(&cli)?;
    let output = match &cli.command {
        Command::Project(args) => cmd_project(args, &settings)?,
        Command::Distance(args) => cmd_distance(args, &settings)?,
        Command::Survey(args) => cmd_survey(args, &settings)?,
        Command::Tissot(args) => cmd_tissot(args, &settings)?,
    };
    write_output(settings.output.as_deref(), &output)
}

fn cmd_project(args: &ProjectArgs, settings: &Settings) -> Result<String, CliError> {
    let format = expect_format(settings.format, &[Format::Text, Format::Csv], "project")?;
    if args.inverse {
        let (Some(x), Some(y)) = (args.x, args.y) else {
            return Err(CliError::usage("--inverse needs both --x and --y"));
        };
        let point = inverse(MapPoint::new(x, y), settings.params, settings.sphere)?;
        let (lat, lon) = (point.lat().degrees(), point.lon().degrees());
        return Ok(match format {
            Format::Csv => format!("lat_deg,lon_deg\n{lat:.6},{lon:.6}\n"),
            _ => format!("{lat:.6}, {lon:.6}\n"),
        });
    }
    let lat = parse_coordinate("--lat", "latitude", args.lat.unwrap_or(f64::NAN), 90.0)?;
    let lon = parse_coordinate("--lon", "longitude", args.lon.unwrap_or(f64::NAN), 180.0)?;
    let point = GeoPoint::from_degrees(lat, lon)?;
    let map = forward(point, settings.params, settings.sphere);
    Ok(match format {
        Format::Csv => format!("x_km,y_km\n{:.6},{:.6}\n", map.x_km, map.y_km),
        _ => format!("{:.6}, {:.6}\n", map.x_km, map.y_km),
    })
}

fn cmd_distance(args: &DistanceArgs, settings: &Settings) -> Result<String, CliError> {
    let format = expect_format(settings.format, &[Format::Text, Format::Csv], "distance")?;
    let from = parse_point("--from", &args.from)?;
    let to = parse_point("--to", &args.to)?;
    let (params, sphere) = (settings.params, settings.sphere);

    if args.method == Method::Report {
        let report = distance_report(from, to, params, sphere);
        return Ok(match format {
            Format::Csv => format!(
                "planar_km,chord_km,great_circle_km,haversine_km,paper_arcsin_km,error_pct\n\
                 {:.3},{:.3},{:.3},{:.3},{:.3},{:.3}\n",
                report.planar_km,
                report.chord_km,
                report.great_circle_km,
                report.haversine_km,
                report.paper_arcsin_km,
                report.planar_error_pct,
            ),
            _ => format!(
                "planar_km {:.3}\nchord_km {:.3}\ngreat_circle_km {:.3}\n\
                 haversine_km {:.3}\npaper_arcsin_km {:.3}\nerror_pct {:.3}\n",
                report.planar_km,
                report.chord_km,
                report.great_circle_km,
                report.haversine_km,
                report.paper_arcsin_km,
                report.planar_error_pct,
            ),
        });
    }

    let km = match args.method {
        Method::Planar => planar_distance(from, to, params, sphere),
        Method::Chord => chord_distance(from, to, sphere),
        Method::GreatCircle => great_circle_distance(from, to, sphere),
        Method::Haversine => haversine_distance(from, to, sphere),
        Method::PaperArcsin => {
            arc_from_chord_principal_arcsin(chord_distance(from, to, sphere), sphere)?
        }
        Method::Report => unreachable!("handled above"),
    };
    Ok(match format {
        Format::Csv => format!("distance_km\n{km:.3}\n"),
        _ => format!("{km:.3}\n"),
    })
}

fn cmd_survey(args: &SurveyArgs, settings: &Settings) -> Result<String, CliError> {
    expect_format(settings.format, &[Format::Csv], "survey")?;
    let pairs = match (&args.pairs, args.random) {
        (Some(path), None) => read_pairs(path)?,
        (None, Some(count)) => random_pairs(count, args.seed)?,
        _ => return Err(CliError::usage("survey needs exactly one of --pairs or --random")),
    };
    let rows = run_survey(&pairs, settings.params, settings.sphere, args.wrapped_planar)?;
    Ok(survey_to_csv(&rows, args.wrapped_planar))
}

fn cmd_tissot(args: &TissotArgs, settings: &Settings) -> Result<String, CliError> {
    expect_format(settings.format, &[Format::Svg], "tissot")?;
    if !args.ellipse_scale.is_finite() || args.ellipse_scale <= 0.0 {
        return Err(CliError::usage(format!(
            "--ellipse-scale {} must be a positive number of kilometers",
            args.ellipse_scale
        )));
    }
    let grid = GridSpec::new(args.grid_step, args.grid_step, args.margin)?;
    let scene = svg::build_scene(grid, args.ellipse_scale, settings.params, settings.sphere)?;
    Ok(svg::render(&scene))
}

// The first allowed format is the command's default.
fn expect_format(
    requested: Option<Format>,
    allowed: &[Format],
    command: &str,
) -> Result<Format, CliError> {
    match requested {
        None => Ok(allowed[0]),
        Some(format) if allowed.contains(&format) => Ok(format),
        Some(format) => Err(CliError::usage(format!(
            "{command} cannot emit {format:?} output"
        ))),
    }
}

fn parse_point(flag: &str, text: &str) -> Result<GeoPoint, CliError> {
    let (lat, lon) = text.split_once(',').ok_or_else(|| {
        CliError::usage(format!("{flag} '{text}': expected lat,lon in degrees"))
    })?;
    let lat: f64 = lat.trim().parse().map_err(|_| {
        CliError::usage(format!("{flag}: latitude '{}' is not a number", lat.trim()))
    })?;
    let lon: f64 = lon.trim().parse().map_err(|_| {
        CliError::usage(format!("{flag}: longitude '{}' is not a number", lon.trim()))
    })?;
    let lat = parse_coordinate(flag, "latitude", lat, 90.0)?;
    let lon = parse_coordinate(flag, "longitude", lon, 180.0)?;
    Ok(GeoPoint::from_degrees(lat, lon)?)
}

fn parse_coordinate(flag: &str, name: &str, value: f64, bound: f64) -> Result<f64, CliError> {
    if !value.is_finite() || value.abs() > bound {
        return Err(CliError::usage(format!(
            "{flag}: {name} {value} is outside [-{bound}, {bound}] degrees"
        )));
    }
    Ok(value)
}
