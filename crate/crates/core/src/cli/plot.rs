//! SVG rendering of a game's feasible set and its cooperative solutions.

use std::fmt::Write as _;

use crate::coop::{lambda_transfer, ntu_nash, tu_solution, LambdaOptions};
use crate::error::{Error, Result};
use crate::geom::PayoffPoint;

use super::num::fmt_num;
use super::spec::GameSpec;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 70.0;
const LEVEL_SAMPLES: usize = 240;

/// Maps payoff coordinates into the plotting square.
struct Frame {
    u_min: f64,
    u_max: f64,
    v_min: f64,
    v_max: f64,
}

impl Frame {
    fn around(points: &[PayoffPoint]) -> Self {
        let fold = |f: fn(&PayoffPoint) -> f64| {
            points
                .iter()
                .map(f)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                    (lo.min(x), hi.max(x))
                })
        };
        let pad = |(lo, hi): (f64, f64)| {
            let span = hi - lo;
            let p = if span > 0.0 { 0.1 * span } else { 1.0 };
            (lo - p, hi + p)
        };
        let (u_min, u_max) = pad(fold(|p| p.u));
        let (v_min, v_max) = pad(fold(|p| p.v));
        Self {
            u_min,
            u_max,
            v_min,
            v_max,
        }
    }

    fn x(&self, u: f64) -> f64 {
        MARGIN + (u - self.u_min) / (self.u_max - self.u_min) * (SIZE - 2.0 * MARGIN)
    }

    fn y(&self, v: f64) -> f64 {
        MARGIN + (self.v_max - v) / (self.v_max - self.v_min) * (SIZE - 2.0 * MARGIN)
    }

    fn px(&self, p: &PayoffPoint) -> String {
        format!("{:.2},{:.2}", self.x(p.u), self.y(p.v))
    }

    fn holds(&self, p: &PayoffPoint) -> bool {
        (self.u_min..=self.u_max).contains(&p.u) && (self.v_min..=self.v_max).contains(&p.v)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn data_points(points: &[PayoffPoint]) -> String {
    points
        .iter()
        .map(|p| format!("{},{}", fmt_num(p.u), fmt_num(p.v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn marker(
    out: &mut String,
    frame: &Frame,
    class: &str,
    colour: &str,
    label: &str,
    p: &PayoffPoint,
) {
    let _ = writeln!(
        out,
        r#"  <circle class="{class}" cx="{:.2}" cy="{:.2}" r="5" fill="{colour}" data-point="{},{}"><title>{} ({}, {})</title></circle>"#,
        frame.x(p.u),
        frame.y(p.v),
        fmt_num(p.u),
        fmt_num(p.v),
        escape(label),
        fmt_num(p.u),
        fmt_num(p.v),
    );
}

/// Renders the feasible set (shaded), its Pareto frontier, the threat point,
/// the three cooperative solutions and the Nash-product level curve through
/// the bargaining solution.
pub fn render_svg(spec: &GameSpec, threat: Option<PayoffPoint>) -> Result<String> {
    let g = spec.bimatrix()?;
    let set = g.feasible_set();
    let tu = tu_solution(&g)?;
    let ntu = ntu_nash(&g, threat.or_else(|| spec.threat_point()))?;
    let opts = LambdaOptions::default();
    let lambda = match lambda_transfer(&g, opts.bracket, opts.tol) {
        Ok(s) => Some(s),
        Err(Error::NoConvergence { .. }) => None,
        Err(e) => return Err(e),
    };

    let mut extent = set.hull.clone();
    extent.extend([ntu.threat, tu.phi, ntu.point]);
    extent.extend(lambda.iter().map(|s| s.point));
    let frame = Frame::around(&extent);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&spec.name));
    let _ = writeln!(
        out,
        r#"  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );

    // Axes along the bottom and left edges of the plotting area.
    let (left, right) = (MARGIN, SIZE - MARGIN);
    let (top, bottom) = (MARGIN, SIZE - MARGIN);
    let _ = writeln!(
        out,
        r#"  <path class="axes" d="M {left} {top} L {left} {bottom} L {right} {bottom}" fill="none" stroke="black"/>"#
    );
    for k in 0..=4 {
        let t = k as f64 / 4.0;
        let u = frame.u_min + t * (frame.u_max - frame.u_min);
        let v = frame.v_min + t * (frame.v_max - frame.v_min);
        let (x, y) = (frame.x(u), frame.y(v));
        let _ = writeln!(
            out,
            r#"  <line x1="{x:.2}" y1="{bottom}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            bottom + 5.0,
            bottom + 20.0,
            fmt_num((u * 100.0).round() / 100.0)
        );
        let _ = writeln!(
            out,
            r#"  <line x1="{:.2}" y1="{y:.2}" x2="{left}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            left - 5.0,
            left - 8.0,
            y + 4.0,
            fmt_num((v * 100.0).round() / 100.0)
        );
    }
    let _ = writeln!(
        out,
        r#"  <text class="x-label" x="{:.2}" y="{:.2}" text-anchor="middle">Player 1's payoff</text>"#,
        SIZE / 2.0,
        SIZE - 20.0
    );
    let _ = writeln!(
        out,
        r#"  <text class="y-label" x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">Player 2's payoff</text>"#,
        SIZE / 2.0,
        SIZE / 2.0
    );

    let hull_px: Vec<String> = set.hull.iter().map(|p| frame.px(p)).collect();
    match set.hull.len() {
        1 => marker(
            &mut out,
            &frame,
            "feasible-set",
            "#999999",
            "feasible set",
            &set.hull[0],
        ),
        _ => {
            let _ = writeln!(
                out,
                r##"  <polygon class="feasible-set" points="{}" data-points="{}" fill="#d0d0d0" stroke="#808080"/>"##,
                hull_px.join(" "),
                data_points(&set.hull)
            );
        }
    }

    let chain = set.frontier_vertices();
    let chain_px: Vec<String> = chain.iter().map(|p| frame.px(p)).collect();
    let _ = writeln!(
        out,
        r##"  <polyline class="frontier" points="{}" data-points="{}" fill="none" stroke="#1f4fd0" stroke-width="3"/>"##,
        chain_px.join(" "),
        data_points(&chain)
    );

    if !ntu.degenerate && ntu.nash_product > 0.0 {
        let c = ntu.nash_product;
        let (ut, vt) = (ntu.threat.u, ntu.threat.v);
        // (u - u*)(v - v*) = c, restricted to the visible frame.
        let u_lo = (ut + c / (frame.v_max - vt)).max(frame.u_min);
        let u_hi = frame.u_max;
        if u_lo < u_hi {
            let curve: Vec<String> = (0..=LEVEL_SAMPLES)
                .map(|k| u_lo + (u_hi - u_lo) * k as f64 / LEVEL_SAMPLES as f64)
                .map(|u| PayoffPoint::new(u, vt + c / (u - ut)))
                .filter(|p| p.is_finite() && frame.holds(p))
                .map(|p| frame.px(&p))
                .collect();
            if curve.len() >= 2 {
                let _ = writeln!(
                    out,
                    r##"  <polyline class="level-curve" data-c="{}" points="{}" fill="none" stroke="#d02020" stroke-dasharray="6 4"/>"##,
                    fmt_num(c),
                    curve.join(" ")
                );
            }
        }
    }

    marker(
        &mut out,
        &frame,
        "threat",
        "black",
        "threat point",
        &ntu.threat,
    );
    marker(&mut out, &frame, "tu", "#2a9d2a", "TU solution", &tu.phi);
    marker(
        &mut out,
        &frame,
        "ntu-nash",
        "#d02020",
        "Nash bargaining solution",
        &ntu.point,
    );
    if let Some(s) = &lambda {
        marker(
            &mut out,
            &frame,
            "ntu-lambda",
            "#e08a00",
            "lambda-transfer solution",
            &s.point,
        );
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
