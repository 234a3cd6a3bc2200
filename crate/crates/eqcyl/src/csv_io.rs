//! CSV ingestion of point pairs and CSV serialization of survey rows.
//!
//! Pair files are UTF-8, comma-separated, decimal point only, with a
//! required header whose first six columns are
//! `name_a,lat_a,lon_a,name_b,lat_b,lon_b` (extra columns are ignored, so
//! a survey report re-parses as a pair file). Lines starting with `#` are
//! comments. Coordinates are degrees.

use crate::error::CliError;
use eqcyl_core::survey::{PairRecord, SurveyRow, LAT_BAND_WIDTH_DEG};
use eqcyl_core::GeoPoint;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

const PAIR_HEADER: [&str; 6] = ["name_a", "lat_a", "lon_a", "name_b", "lat_b", "lon_b"];

/// Reads and parses a pair file.
pub fn read_pairs(path: &Path) -> Result<Vec<PairRecord>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("reading pairs file {}: {e}", path.display())))?;
    parse_pairs(&text)
        .map_err(|e| CliError::usage(format!("pairs file {}: {e}", path.display())))
}

/// Parses pair-file text. Errors name the offending line.
pub fn parse_pairs(text: &str) -> Result<Vec<PairRecord>, String> {
    let mut pairs = Vec::new();
    let mut header_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if !header_seen {
            validate_header(number, &fields)?;
            header_seen = true;
            continue;
        }
        if fields.len() < PAIR_HEADER.len() {
            return Err(format!(
                "line {number}: expected at least {} fields, found {}",
                PAIR_HEADER.len(),
                fields.len()
            ));
        }
        let a = parse_point(number, fields[1], fields[2])?;
        let b = parse_point(number, fields[4], fields[5])?;
        let pair = PairRecord::new(fields[0], a, fields[3], b)
            .map_err(|e| format!("line {number}: {e}"))?;
        pairs.push(pair);
    }
    if !header_seen {
        return Err("missing header row".to_string());
    }
    Ok(pairs)
}

fn validate_header(number: usize, fields: &[&str]) -> Result<(), String> {
    if fields.len() < PAIR_HEADER.len()
        || fields[..PAIR_HEADER.len()] != PAIR_HEADER
    {
        return Err(format!(
            "line {number}: header must start with '{}'",
            PAIR_HEADER.join(",")
        ));
    }
    Ok(())
}

fn parse_point(number: usize, lat: &str, lon: &str) -> Result<GeoPoint, String> {
    let lat: f64 = lat
        .parse()
        .map_err(|_| format!("line {number}: latitude '{lat}' is not a number"))?;
    let lon: f64 = lon
        .parse()
        .map_err(|_| format!("line {number}: longitude '{lon}' is not a number"))?;
    GeoPoint::from_degrees(lat, lon).map_err(|e| format!("line {number}: {e}"))
}

/// Serializes survey rows as CSV, appending per-band mean error summaries
/// as `#` comment lines.
pub fn survey_to_csv(rows: &[SurveyRow], wrapped: bool) -> String {
    let mut out = String::new();
    out.push_str("name_a,lat_a,lon_a,name_b,lat_b,lon_b,planar_km,chord_km,great_circle_km,haversine_km,paper_arcsin_km,error_pct");
    if wrapped {
        out.push_str(",wrapped_planar_km");
    }
    out.push('\n');

    for row in rows {
        let _ = write!(
            out,
            "{},{:.9},{:.9},{},{:.9},{:.9},{:.3},{:.3},{:.3},{:.3},{:.3},{:.3}",
            row.name_a,
            row.a.lat().degrees(),
            row.a.lon().degrees(),
            row.name_b,
            row.b.lat().degrees(),
            row.b.lon().degrees(),
            row.report.planar_km,
            row.report.chord_km,
            row.report.great_circle_km,
            row.report.haversine_km,
            row.report.paper_arcsin_km,
            row.report.planar_error_pct,
        );
        if let Some(wrapped_km) = row.wrapped_planar_km {
            let _ = write!(out, ",{wrapped_km:.3}");
        }
        out.push('\n');
    }

    out.push_str("# mean error_pct by |mid-latitude| band\n");
    for band in (0..90).step_by(LAT_BAND_WIDTH_DEG as usize) {
        let band = band as u32;
        let errors: Vec<f64> = rows
            .iter()
            .filter(|row| row.lat_band_deg == band)
            .map(|row| row.report.planar_error_pct)
            .collect();
        if errors.is_empty() {
            continue;
        }
        let mean = errors.iter().sum::<f64>() / errors.len() as f64;
        let upper = (band + LAT_BAND_WIDTH_DEG).min(90);
        let _ = writeln!(
            out,
            "# band {band}-{upper} deg: mean_error_pct={mean:.3} pairs={}",
            errors.len()
        );
    }
    out
}

/// Writes content to the path (whole-file atomic: temp file then rename),
/// or to stdout when no path is given.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| CliError::io(format!("writing to stdout: {e}")))?;
            Ok(())
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(parent) if !parent.as_os_str().is_empty() => parent,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .map_err(|e| CliError::io(format!("creating temp file in {}: {e}", dir.display())))?;
            tmp.write_all(content.as_bytes())
                .map_err(|e| CliError::io(format!("writing {}: {e}", path.display())))?;
            tmp.persist(path)
                .map_err(|e| CliError::io(format!("renaming into {}: {e}", path.display())))?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_pair_file_with_comments() {
        let pairs = parse_pairs(
            "# fixture\n\
             name_a,lat_a,lon_a,name_b,lat_b,lon_b\n\
             P1,23.4,24.3,P2,-3.67,-39.2\n\
             \n\
             C,65.1,170.8,D,64.7,-152.7\n",
        )
        .unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].name_a(), "P1");
        assert!((pairs[1].b().lon().degrees() + 152.7).abs() < 1e-9);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_pairs("name_a,lat_a,lon_a,name_b,lat_b,lon_b\nP,91,0,Q,0,0\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
        assert!(err.contains("latitude"), "{err}");

        let err = parse_pairs("name_a,lat_a,lon_a,name_b,lat_b,lon_b\nP,1,2\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");

        let err =
            parse_pairs("name_a,lat_a,lon_a,name_b,lat_b,lon_b\nP,x,0,Q,0,0\n").unwrap_err();
        assert!(err.contains("not a number"), "{err}");

        let err = parse_pairs("nome,lat,lon\n").unwrap_err();
        assert!(err.contains("header"), "{err}");

        assert!(parse_pairs("# only comments\n").is_err());
    }

    #[test]
    fn survey_headers_round_trip_as_pair_files() {
        let pairs = parse_pairs(
            "name_a,lat_a,lon_a,name_b,lat_b,lon_b\nP1,23.4,24.3,P2,-3.67,-39.2\n",
        )
        .unwrap();
        let rows = eqcyl_core::survey::run_survey(
            &pairs,
            eqcyl_core::ProjectionParams::default(),
            eqcyl_core::SphereModel::EARTH,
            true,
        )
        .unwrap();
        let csv = survey_to_csv(&rows, true);
        let reparsed = parse_pairs(&csv).unwrap();
        assert_eq!(reparsed.len(), 1);
        assert!(
            (reparsed[0].a().lat_radians() - pairs[0].a().lat_radians()).abs() < 1e-9
        );
        assert!(csv.contains("# band 0-20 deg"));
        assert!(csv.lines().next().unwrap().ends_with(",wrapped_planar_km"));
    }
}
