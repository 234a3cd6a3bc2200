//! Settings resolution: built-in defaults, then the optional config file,
//! then flags, later sources winning.

use crate::cli::{Cli, Format};
use crate::error::CliError;
use eqcyl_core::{ProjectionParams, SphereModel, EARTH_RADIUS_KM};
use std::fs;
use std::path::PathBuf;

/// Fully resolved run settings.
#[derive(Debug, Clone)]
pub struct Settings {
    /// The sphere every command computes on.
    pub sphere: SphereModel,
    /// Projection parameters shared by every command.
    pub params: ProjectionParams,
    /// Output file; stdout when absent.
    pub output: Option<PathBuf>,
    /// Requested output format, if any.
    pub format: Option<Format>,
}

/// Entries a config file may set; all optional.
#[derive(Debug, Default, PartialEq)]
struct FileConfig {
    radius_km: Option<f64>,
    central_meridian_deg: Option<f64>,
    standard_parallel_deg: Option<f64>,
    output: Option<PathBuf>,
    format: Option<Format>,
}

/// Resolves the effective settings for this invocation.
pub fn resolve(cli: &Cli) -> Result<Settings, CliError> {
    let file = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::io(format!("reading config {}: {e}", path.display())))?;
            parse_config(&text)?
        }
        None => FileConfig::default(),
    };

    let radius_km = cli
        .radius_km
        .or(file.radius_km)
        .unwrap_or(EARTH_RADIUS_KM);
    let central_meridian_deg = cli
        .central_meridian
        .or(file.central_meridian_deg)
        .unwrap_or(0.0);
    let standard_parallel_deg = cli
        .standard_parallel
        .or(file.standard_parallel_deg)
        .unwrap_or(0.0);

    let sphere = SphereModel::new(radius_km)
        .map_err(|e| CliError::usage(format!("radius_km {radius_km}: {e}")))?;
    let params = ProjectionParams::from_degrees(central_meridian_deg, standard_parallel_deg)
        .map_err(|e| {
            CliError::usage(format!(
                "central_meridian {central_meridian_deg} deg, standard_parallel \
                 {standard_parallel_deg} deg: {e}"
            ))
        })?;

    Ok(Settings {
        sphere,
        params,
        output: cli.output.clone().or(file.output),
        format: cli.format.or(file.format),
    })
}

fn parse_config(text: &str) -> Result<FileConfig, CliError> {
    let mut config = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let number = idx + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(format!("config line {number}: expected key = value"))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "radius_km" => config.radius_km = Some(parse_number(number, key, value)?),
            "central_meridian_deg" => {
                config.central_meridian_deg = Some(parse_number(number, key, value)?)
            }
            "standard_parallel_deg" => {
                config.standard_parallel_deg = Some(parse_number(number, key, value)?)
            }
            "output" => config.output = Some(PathBuf::from(value)),
            "format" => {
                config.format = Some(match value {
                    "text" => Format::Text,
                    "csv" => Format::Csv,
                    "svg" => Format::Svg,
                    other => {
                        return Err(CliError::usage(format!(
                            "config line {number}: format '{other}' is not text, csv, or svg"
                        )))
                    }
                })
            }
            other => {
                return Err(CliError::usage(format!(
                    "config line {number}: unknown key '{other}'"
                )))
            }
        }
    }
    Ok(config)
}

fn parse_number(line: usize, key: &str, value: &str) -> Result<f64, CliError> {
    value
        .parse()
        .map_err(|_| CliError::usage(format!("config line {line}: {key} '{value}' is not a number")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_skips_comments() {
        let config = parse_config(
            "# a comment\n\
             radius_km = 1000\n\
             \n\
             central_meridian_deg = -10.5\n\
             format = csv\n\
             output = out/report.csv\n",
        )
        .unwrap();
        assert_eq!(config.radius_km, Some(1000.0));
        assert_eq!(config.central_meridian_deg, Some(-10.5));
        assert_eq!(config.standard_parallel_deg, None);
        assert_eq!(config.format, Some(Format::Csv));
        assert_eq!(config.output, Some(PathBuf::from("out/report.csv")));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        let err = parse_config("radius = 5\n").unwrap_err();
        assert!(err.to_string().contains("line 1"));
        assert!(err.to_string().contains("unknown key"));

        let err = parse_config("\nradius_km = abc\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));

        let err = parse_config("format = png\n").unwrap_err();
        assert!(err.to_string().contains("png"));

        let err = parse_config("just words\n").unwrap_err();
        assert!(err.to_string().contains("key = value"));
    }
}
