use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::polytope_json::rat_strings;
use crate::ehrhart::{drop_points, StepFunction};
use crate::exact_math::{format_rational, Rational};

/// One row per maximal piece, header `lo,lo_closed,hi,hi_closed,value`.
pub fn step_function_csv(f: &StepFunction) -> String {
    let mut out = String::from("lo,lo_closed,hi,hi_closed,value\n");
    for p in f.pieces() {
        writeln!(
            out,
            "{},{},{},{},{}",
            format_rational(&p.lo),
            p.lo_closed,
            format_rational(&p.hi),
            p.hi_closed,
            p.value
        )
        .expect("writing to a String");
    }
    out
}

#[derive(Serialize)]
struct PieceDoc {
    lo: String,
    lo_closed: bool,
    hi: String,
    hi_closed: bool,
    value: u64,
}

#[derive(Serialize)]
struct StepDoc {
    s_max: String,
    interior: bool,
    pieces: Vec<PieceDoc>,
    breakpoints: Vec<String>,
    drop_points: Vec<String>,
    nondecreasing: bool,
}

/// Pieces plus breakpoint and drop-point metadata.
pub fn step_function_json(f: &StepFunction) -> String {
    let doc = StepDoc {
        s_max: format_rational(f.s_max()),
        interior: f.is_interior(),
        pieces: f
            .pieces()
            .iter()
            .map(|p| PieceDoc {
                lo: format_rational(&p.lo),
                lo_closed: p.lo_closed,
                hi: format_rational(&p.hi),
                hi_closed: p.hi_closed,
                value: p.value,
            })
            .collect(),
        breakpoints: rat_strings(&f.breakpoints()),
        drop_points: rat_strings(&drop_points(f)),
        nondecreasing: f.is_nondecreasing(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 70.0;

/// Staircase plot: one segment per piece, filled dots for closed ends,
/// hollow dots for open ends, every breakpoint labeled on the axis.
pub fn step_function_svg(f: &StepFunction) -> String {
    let s_max = f.s_max().to_f64().unwrap_or(1.0).max(f64::MIN_POSITIVE);
    let v_max = f.pieces().iter().map(|p| p.value).max().unwrap_or(0).max(1) as f64;
    let x = |s: &Rational| LEFT + s.to_f64().unwrap_or(0.0) / s_max * (WIDTH - LEFT - RIGHT);
    let y = |v: u64| HEIGHT - BOTTOM - v as f64 / v_max * (HEIGHT - TOP - BOTTOM);
    let base = HEIGHT - BOTTOM;
    let label = if f.is_interior() {
        "interior count"
    } else {
        "lattice count"
    };

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(
        w,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<line x1="{LEFT:.2}" y1="{base:.2}" x2="{:.2}" y2="{base:.2}" stroke="black"/>"#,
        WIDTH - RIGHT
    );
    let _ = writeln!(
        w,
        r#"<line x1="{LEFT:.2}" y1="{base:.2}" x2="{LEFT:.2}" y2="{TOP:.2}" stroke="black"/>"#
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="end">0</text>"#,
        LEFT - 6.0,
        base + 4.0
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
        LEFT - 6.0,
        y(v_max as u64) + 4.0,
        v_max as u64
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="end">s</text>"#,
        WIDTH - RIGHT,
        HEIGHT - 8.0
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}">{label}</text>"#,
        LEFT + 4.0,
        TOP - 6.0
    );

    for b in f.breakpoints() {
        let bx = x(&b);
        let _ = writeln!(
            w,
            r#"<line x1="{bx:.2}" y1="{base:.2}" x2="{bx:.2}" y2="{:.2}" stroke="black"/>"#,
            base + 4.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{bx:.2}" y="{:.2}" text-anchor="end" transform="rotate(-45 {bx:.2} {:.2})">{}</text>"#,
            base + 16.0,
            base + 16.0,
            format_rational(&b)
        );
    }

    for p in f.pieces() {
        let py = y(p.value);
        let (x0, x1) = (x(&p.lo), x(&p.hi));
        if !p.is_point() {
            let _ = writeln!(
                w,
                r#"<line x1="{x0:.2}" y1="{py:.2}" x2="{x1:.2}" y2="{py:.2}" stroke="navy" stroke-width="2"/>"#
            );
        }
        for (px, closed) in [(x0, p.lo_closed), (x1, p.hi_closed)] {
            let fill = if closed { "navy" } else { "white" };
            let _ = writeln!(
                w,
                r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="{fill}" stroke="navy"/>"#
            );
            if p.is_point() {
                break;
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
