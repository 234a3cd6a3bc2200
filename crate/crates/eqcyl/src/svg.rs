//! SVG rendering of the projected map rectangle: graticule lines plus one
//! indicatrix ellipse per distortion-field sample.
//!
//! The canvas is normalized to 512 px of map height, so the default
//! parameters give a 1024 x 512 canvas (the map rectangle has a 2:1
//! aspect). All coordinates are emitted with fixed three-decimal
//! formatting and stable element ordering, so identical inputs render
//! byte-identical documents.

use eqcyl_core::survey::{distortion_field, GridSpec};
use eqcyl_core::{forward, GeoPoint, ProjectionParams, Result, SphereModel};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

/// Canvas height in pixels; the width follows the map aspect.
const CANVAS_HEIGHT_PX: f64 = 512.0;

/// A straight graticule segment in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    /// Start x.
    pub x1: f64,
    /// Start y.
    pub y1: f64,
    /// End x.
    pub x2: f64,
    /// End y.
    pub y2: f64,
}

/// An indicatrix ellipse in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseMark {
    /// Center x.
    pub cx: f64,
    /// Center y.
    pub cy: f64,
    /// Semi-axis along the parallel.
    pub rx: f64,
    /// Semi-axis along the meridian.
    pub ry: f64,
}

/// A corner annotation.
#[derive(Debug, Clone, PartialEq)]
pub struct Label {
    /// Anchor x.
    pub x: f64,
    /// Baseline y.
    pub y: f64,
    /// SVG text-anchor value.
    pub anchor: &'static str,
    /// The annotation text.
    pub text: String,
}

/// The fully laid-out scene, ready to render.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgScene {
    /// Canvas width in pixels.
    pub width_px: f64,
    /// Canvas height in pixels.
    pub height_px: f64,
    /// Graticule lines: meridians west to east, then parallels north to
    /// south.
    pub graticule: Vec<Line>,
    /// Ellipses in distortion-field order (north to south, west to east).
    pub ellipses: Vec<EllipseMark>,
    /// Corner labels with the map-plane extents in kilometers.
    pub labels: Vec<Label>,
}

/// Lays out the scene for the given grid and indicatrix visual scale.
pub fn build_scene(
    grid: GridSpec,
    ellipse_scale_km: f64,
    params: ProjectionParams,
    sphere: SphereModel,
) -> Result<SvgScene> {
    let r = sphere.radius_km();
    let px_per_km = CANVAS_HEIGHT_PX / (PI * r);
    let width_px = 2.0 * PI * r * params.cos_standard_parallel() * px_per_km;

    let project = |lat_deg: f64, lon_deg: f64| -> (f64, f64) {
        let point = GeoPoint::from_degrees(lat_deg, lon_deg)
            .expect("graticule coordinates stay in range");
        let map = forward(point, params, sphere);
        to_px(map.x_km, map.y_km, params, sphere, px_per_km)
    };

    let mut graticule = Vec::new();
    let lon_cols = (360.0 / grid.lon_step_deg()).round() as i64;
    for j in 0..=lon_cols {
        let lon = -180.0 + j as f64 * grid.lon_step_deg();
        let (x, y_top) = project(90.0, lon);
        let (_, y_bottom) = project(-90.0, lon);
        graticule.push(Line {
            x1: x,
            y1: y_top,
            x2: x,
            y2: y_bottom,
        });
    }
    let lat_rows = (180.0 / grid.lat_step_deg()).round() as i64;
    for i in 0..=lat_rows {
        let lat = 90.0 - i as f64 * grid.lat_step_deg();
        let (x_left, y) = project(lat, -180.0);
        let (x_right, _) = project(lat, 180.0);
        graticule.push(Line {
            x1: x_left,
            y1: y,
            x2: x_right,
            y2: y,
        });
    }

    let ellipses = distortion_field(grid, params)?
        .into_iter()
        .map(|sample| {
            let map = forward(sample.point, params, sphere);
            let (cx, cy) = to_px(map.x_km, map.y_km, params, sphere, px_per_km);
            EllipseMark {
                cx,
                cy,
                rx: sample.ellipse.semi_axis_parallel * ellipse_scale_km * px_per_km,
                ry: sample.ellipse.semi_axis_meridian * ellipse_scale_km * px_per_km,
            }
        })
        .collect();

    let x_min_km = map_x_min_km(params, sphere);
    let x_max_km = x_min_km + 2.0 * PI * r * params.cos_standard_parallel();
    let y_max_km = r * FRAC_PI_2;
    let height_px = CANVAS_HEIGHT_PX;
    let pad = 4.0;
    let labels = vec![
        Label {
            x: pad,
            y: 14.0,
            anchor: "start",
            text: format!("({x_min_km:.1}, {y_max_km:.1})"),
        },
        Label {
            x: width_px - pad,
            y: 14.0,
            anchor: "end",
            text: format!("({x_max_km:.1}, {y_max_km:.1})"),
        },
        Label {
            x: pad,
            y: height_px - pad,
            anchor: "start",
            text: format!("({x_min_km:.1}, {:.1})", -y_max_km),
        },
        Label {
            x: width_px - pad,
            y: height_px - pad,
            anchor: "end",
            text: format!("({x_max_km:.1}, {:.1})", -y_max_km),
        },
    ];

    Ok(SvgScene {
        width_px,
        height_px,
        graticule,
        ellipses,
        labels,
    })
}

// west edge of the map rectangle: the projection of lon = -180
fn map_x_min_km(params: ProjectionParams, sphere: SphereModel) -> f64 {
    forward(
        GeoPoint::from_degrees(0.0, -180.0).expect("the antimeridian is in range"),
        params,
        sphere,
    )
    .x_km
}

fn to_px(
    x_km: f64,
    y_km: f64,
    params: ProjectionParams,
    sphere: SphereModel,
    px_per_km: f64,
) -> (f64, f64) {
    let x = (x_km - map_x_min_km(params, sphere)) * px_per_km;
    // SVG y grows downward
    let y = (sphere.radius_km() * FRAC_PI_2 - y_km) * px_per_km;
    (x, y)
}

/// Renders the scene as an SVG 1.1 document.
pub fn render(scene: &SvgScene) -> String {
    let mut out = String::new();
    let w = scene.width_px;
    let h = scene.height_px;
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.3}\" height=\"{h:.3}\" viewBox=\"0 0 {w:.3} {h:.3}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0.000\" y=\"0.000\" width=\"{w:.3}\" height=\"{h:.3}\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>"
    );
    out.push_str("<g id=\"graticule\" stroke=\"#9aa7b0\" stroke-width=\"0.5\">\n");
    for line in &scene.graticule {
        let _ = writeln!(
            out,
            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\"/>",
            line.x1, line.y1, line.x2, line.y2
        );
    }
    out.push_str("</g>\n<g id=\"indicatrices\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"1\">\n");
    for ellipse in &scene.ellipses {
        let _ = writeln!(
            out,
            "<ellipse cx=\"{:.3}\" cy=\"{:.3}\" rx=\"{:.3}\" ry=\"{:.3}\"/>",
            ellipse.cx, ellipse.cy, ellipse.rx, ellipse.ry
        );
    }
    out.push_str("</g>\n<g id=\"labels\" font-family=\"monospace\" font-size=\"10\" fill=\"black\">\n");
    for label in &scene.labels {
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{:.3}\" text-anchor=\"{}\">{}</text>",
            label.x, label.y, label.anchor, label.text
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
