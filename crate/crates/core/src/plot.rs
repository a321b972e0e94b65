//! Minimal deterministic SVG scatter plots.

use std::fmt::Write as _;

use crate::geometry::GridPoint;

const MARGIN: i64 = 2;

/// Scatter plot with the y axis pointing up and the view box fitted to the
/// bounding box of the points. One `<circle>` per point.
pub fn scatter_svg(points: &[GridPoint]) -> String {
    let (x0, x1, y0, y1) = match points.first() {
        None => (0, 1, 0, 1),
        Some(_) => (
            points.iter().map(|q| q.x).min().unwrap(),
            points.iter().map(|q| q.x).max().unwrap(),
            points.iter().map(|q| q.y).min().unwrap(),
            points.iter().map(|q| q.y).max().unwrap(),
        ),
    };
    let (w, h) = (x1 - x0 + 2 * MARGIN, y1 - y0 + 2 * MARGIN);
    let radius = ((w.max(h) as f64) / 400.0).max(0.35);
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="800" preserveAspectRatio="xMidYMid meet">"#,
        x0 - MARGIN,
        -(y1 + MARGIN),
        w,
        h
    )
    .unwrap();
    writeln!(
        svg,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white" stroke="black" stroke-width="{:.3}"/>"#,
        x0 - MARGIN,
        -(y1 + MARGIN),
        w,
        h,
        radius / 4.0
    )
    .unwrap();
    // SVG y grows downward, so plot (x, -y).
    svg.push_str("<g fill=\"black\">\n");
    for q in points {
        writeln!(svg, r#"<circle cx="{}" cy="{}" r="{:.3}"/>"#, q.x, -q.y, radius).unwrap();
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}
