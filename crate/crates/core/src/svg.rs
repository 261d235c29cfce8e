//! Deterministic SVG rendering of a scenario and its report: nodes sized by
//! weight, selected nodes highlighted, the coverage circle, and the waypoint
//! ground projection.

use std::fmt::Write as _;
use std::path::Path;

use crate::scenario::{Report, Scenario};

const MARGIN: f64 = 40.0;
const CANVAS: f64 = 800.0;

fn fmt(v: f64) -> String {
    format!("{v:.3}")
}

/// Render the report to an SVG string. Output bytes are a pure function of
/// the inputs.
pub fn render_svg_string(scenario: &Scenario, report: &Report) -> String {
    // World bounds: all nodes plus the coverage circle.
    let mut min_x = report.circle.cx - report.circle.r;
    let mut max_x = report.circle.cx + report.circle.r;
    let mut min_y = report.circle.cy - report.circle.r;
    let mut max_y = report.circle.cy + report.circle.r;
    for n in &scenario.nodes {
        min_x = min_x.min(n.x);
        max_x = max_x.max(n.x);
        min_y = min_y.min(n.y);
        max_y = max_y.max(n.y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1.0);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    let sx = |x: f64| MARGIN + (x - min_x) * scale;
    // flip y so north is up
    let sy = |y: f64| CANVAS - MARGIN - (y - min_y) * scale;

    let max_weight = scenario.nodes.iter().map(|n| n.w).fold(0.0_f64, f64::max).max(1e-12);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(out, r#"<rect width="{c}" height="{c}" fill="white"/>"#, c = CANVAS);

    let _ = writeln!(
        out,
        r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
        fmt(sx(report.circle.cx)),
        fmt(sy(report.circle.cy)),
        fmt(report.circle.r * scale)
    );

    for (i, n) in scenario.nodes.iter().enumerate() {
        // area proportional to weight
        let r = 3.0 + 9.0 * (n.w / max_weight).sqrt();
        let selected = report.per_node[i].selected;
        let fill = if selected { "tomato" } else { "gray" };
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}" fill-opacity="0.8"><title>node {} w={}</title></circle>"#,
            fmt(sx(n.x)),
            fmt(sy(n.y)),
            fmt(r),
            fill,
            i,
            fmt(n.w)
        );
    }

    let wx = sx(report.waypoint.x);
    let wy = sy(report.waypoint.y);
    let _ = writeln!(
        out,
        r#"<path d="M {} {} L {} {} M {} {} L {} {}" stroke="black" stroke-width="2"/>"#,
        fmt(wx - 8.0),
        fmt(wy),
        fmt(wx + 8.0),
        fmt(wy),
        fmt(wx),
        fmt(wy - 8.0),
        fmt(wx),
        fmt(wy + 8.0)
    );

    out.push_str("</svg>\n");
    out
}

pub fn render_svg(scenario: &Scenario, report: &Report, path: &Path) -> Result<(), std::io::Error> {
    std::fs::write(path, render_svg_string(scenario, report))
}
