//! CSV and SVG renderings of boundaries, regions and sweeps.

use std::fmt::Write;

use crate::atlas::SweepRow;
use crate::boundary::{BoundarySample, PureContact};
use crate::dualrange::PlanarRegion;
use crate::tol::{R_IN, R_OUT};

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// `theta,t,x,y` rows.
pub fn boundary_csv(samples: &[BoundarySample]) -> String {
    let mut out = String::from("theta,t,x,y\n");
    for s in samples {
        let _ = writeln!(out, "{},{},{},{}", fmt17(s.theta), fmt17(s.t), fmt17(s.x), fmt17(s.y));
    }
    out
}

/// `x,y` rows of a region boundary.
pub fn region_csv(region: &PlanarRegion) -> String {
    let mut out = String::from("x,y\n");
    for &(x, y) in &region.boundary {
        let _ = writeln!(out, "{},{}", fmt17(x), fmt17(y));
    }
    out
}

/// `k,a,b,c,phi,shape_tag,pure_contacts` rows.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("k,a,b,c,phi,shape_tag,pure_contacts\n");
    for r in rows {
        let [k, a, b, c, phi] = r.params.as_tuple();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt17(k),
            fmt17(a),
            fmt17(b),
            fmt17(c),
            fmt17(phi),
            r.shape.tag,
            r.shape.pure_contacts
        );
    }
    out
}

const SECTION_VIEW: f64 = 0.65;
const SVG_SIZE: f64 = 520.0;

fn points_attr(points: impl Iterator<Item = (f64, f64)>) -> String {
    points.map(|(x, y)| format!("{x:.6},{y:.6}")).collect::<Vec<_>>().join(" ")
}

/// Section boundary on the fixed window `[-0.65, 0.65]²`, with the outsphere
/// and insphere circles and pure-state contacts marked.
pub fn section_svg(samples: &[BoundarySample], contacts: &[PureContact]) -> String {
    let mut out = String::new();
    let v = SECTION_VIEW;
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" viewBox="{} {} {} {}">"#,
        -v,
        -v,
        2.0 * v,
        2.0 * v
    );
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    let _ = writeln!(
        out,
        r##"<circle cx="0" cy="0" r="{R_OUT:.6}" fill="none" stroke="#999" stroke-width="0.002" stroke-dasharray="0.01 0.01"/>"##
    );
    let _ = writeln!(
        out,
        r##"<circle cx="0" cy="0" r="{R_IN:.6}" fill="none" stroke="#999" stroke-width="0.002" stroke-dasharray="0.01 0.01"/>"##
    );
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#4a90d9" fill-opacity="0.25" stroke="#1f4e8c" stroke-width="0.004"/>"##,
        points_attr(samples.iter().map(|s| (s.x, s.y)))
    );
    for c in contacts {
        let _ = writeln!(out, r##"<circle cx="{:.6}" cy="{:.6}" r="0.012" fill="#c0392b"/>"##, c.x, c.y);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Region boundary in a window fitted around it.
pub fn region_svg(region: &PlanarRegion) -> String {
    let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
    for &(x, y) in &region.boundary {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    if region.boundary.is_empty() {
        (lo, hi) = ((-1.0, -1.0), (1.0, 1.0));
    }
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-6);
    let pad = 0.1 * span;
    let (cx, cy) = (0.5 * (lo.0 + hi.0), 0.5 * (lo.1 + hi.1));
    let half = 0.5 * span + pad;
    let stroke = span / 250.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        cx - half,
        -cy - half,
        2.0 * half,
        2.0 * half
    );
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#27ae60" fill-opacity="0.25" stroke="#1e8449" stroke-width="{stroke:.6}"/>"##,
        points_attr(region.boundary.iter().copied())
    );
    out.push_str("</g>\n</svg>\n");
    out
}
