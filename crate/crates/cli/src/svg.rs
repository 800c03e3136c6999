//! Standalone SVG 1.1 charts: a function curve and a box plot.

use std::fmt::Write;

use deskcalc_core::stats::FiveNumberSummary;

use crate::format::sig;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 56.0;
const TICKS: usize = 5;

pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Linear map from a data interval onto a pixel interval.
#[derive(Clone, Copy)]
struct Scale {
    lo: f64,
    hi: f64,
    from: f64,
    to: f64,
}

impl Scale {
    /// Widens a degenerate range and pads the ends by 5%.
    fn padded(lo: f64, hi: f64, from: f64, to: f64) -> Scale {
        let (lo, hi) = if hi > lo {
            (lo, hi)
        } else {
            let half = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
            (lo - half, hi + half)
        };
        let pad = (hi - lo) * 0.05;
        Scale {
            lo: lo - pad,
            hi: hi + pad,
            from,
            to,
        }
    }

    fn exact(lo: f64, hi: f64, from: f64, to: f64) -> Scale {
        if hi > lo {
            Scale { lo, hi, from, to }
        } else {
            Scale::padded(lo, hi, from, to)
        }
    }

    fn map(&self, v: f64) -> f64 {
        self.from + (v - self.lo) / (self.hi - self.lo) * (self.to - self.from)
    }

    fn ticks(&self) -> impl Iterator<Item = f64> + '_ {
        (0..TICKS).map(|i| self.lo + (self.hi - self.lo) * i as f64 / (TICKS - 1) as f64)
    }
}

fn px(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn open(out: &mut String, title: &str) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#,
        w = WIDTH,
        h = HEIGHT
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text class="title" x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        px(WIDTH / 2.0),
        escape(title)
    );
}

fn y_axis(out: &mut String, y: Scale, label: &str) {
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{l}" y1="{t}" x2="{l}" y2="{b}" stroke="black"/>"#,
        l = px(LEFT),
        t = px(TOP),
        b = px(HEIGHT - BOTTOM)
    );
    for v in y.ticks() {
        let py = px(y.map(v));
        let _ = writeln!(
            out,
            r#"<line class="tick" x1="{}" y1="{py}" x2="{}" y2="{py}" stroke="black"/>"#,
            px(LEFT - 5.0),
            px(LEFT)
        );
        let _ = writeln!(
            out,
            r#"<text class="tick-label" x="{}" y="{py}" text-anchor="end" dominant-baseline="middle">{}</text>"#,
            px(LEFT - 8.0),
            escape(&sig(v, 4))
        );
    }
    let _ = writeln!(
        out,
        r#"<text class="axis-label" x="16" y="{cy}" text-anchor="middle" transform="rotate(-90 16 {cy})">{}</text>"#,
        escape(label),
        cy = px((TOP + HEIGHT - BOTTOM) / 2.0)
    );
}

fn x_axis_line(out: &mut String, label: &str) {
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{l}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/>"#,
        l = px(LEFT),
        r = px(WIDTH - RIGHT),
        b = px(HEIGHT - BOTTOM)
    );
    let _ = writeln!(
        out,
        r#"<text class="axis-label" x="{}" y="{}" text-anchor="middle">{}</text>"#,
        px((LEFT + WIDTH - RIGHT) / 2.0),
        px(HEIGHT - 12.0),
        escape(label)
    );
}

/// Line chart of `(x, y)` samples; `None` marks a point where the function is
/// undefined and breaks the line there. Returns `None` when no point is
/// defined.
pub fn line_chart(
    points: &[(f64, Option<f64>)],
    title: &str,
    x_label: &str,
    y_label: &str,
) -> Option<String> {
    let defined = || points.iter().filter_map(|&(_, y)| y);
    let y_lo = defined().reduce(f64::min)?;
    let y_hi = defined().reduce(f64::max)?;
    let x_lo = points.first()?.0;
    let x_hi = points.last()?.0;
    let xs = Scale::exact(x_lo, x_hi, LEFT, WIDTH - RIGHT);
    let ys = Scale::padded(y_lo, y_hi, HEIGHT - BOTTOM, TOP);

    let mut out = String::new();
    open(&mut out, title);
    y_axis(&mut out, ys, y_label);
    x_axis_line(&mut out, x_label);
    for v in xs.ticks() {
        let x = px(xs.map(v));
        let _ = writeln!(
            out,
            r#"<line class="tick" x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="black"/>"#,
            px(HEIGHT - BOTTOM),
            px(HEIGHT - BOTTOM + 5.0)
        );
        let _ = writeln!(
            out,
            r#"<text class="tick-label" x="{x}" y="{}" text-anchor="middle">{}</text>"#,
            px(HEIGHT - BOTTOM + 18.0),
            escape(&sig(v, 4))
        );
    }

    for run in points.split(|(_, y)| y.is_none()).filter(|r| !r.is_empty()) {
        let coords: Vec<String> = run
            .iter()
            .filter_map(|&(x, y)| y.map(|y| format!("{},{}", px(xs.map(x)), px(ys.map(y)))))
            .collect();
        if let [single] = coords.as_slice() {
            let (cx, cy) = single.split_once(',').expect("pair");
            let _ = writeln!(
                out,
                r#"<circle class="point" cx="{cx}" cy="{cy}" r="2" fill="steelblue"/>"#
            );
        } else {
            let _ = writeln!(
                out,
                r#"<polyline class="curve" points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
                coords.join(" ")
            );
        }
    }
    out.push_str("</svg>\n");
    Some(out)
}

/// One box-and-whisker glyph per group, whiskers at min and max.
pub fn box_plot(groups: &[(String, FiveNumberSummary)], title: &str, y_label: &str) -> String {
    let lo = groups
        .iter()
        .map(|(_, s)| s.min)
        .fold(f64::INFINITY, f64::min);
    let hi = groups
        .iter()
        .map(|(_, s)| s.max)
        .fold(f64::NEG_INFINITY, f64::max);
    let ys = Scale::padded(lo, hi, HEIGHT - BOTTOM, TOP);
    let slot = (WIDTH - LEFT - RIGHT) / groups.len().max(1) as f64;
    let half = (slot * 0.25).min(40.0);

    let mut out = String::new();
    open(&mut out, title);
    y_axis(&mut out, ys, y_label);
    x_axis_line(&mut out, "group");
    for (i, (label, s)) in groups.iter().enumerate() {
        let cx = LEFT + (i as f64 + 0.5) * slot;
        let (l, r, c) = (px(cx - half), px(cx + half), px(cx));
        let (ymin, yq1, ymed, yq3, ymax) = (
            ys.map(s.min),
            ys.map(s.q1),
            ys.map(s.median),
            ys.map(s.q3),
            ys.map(s.max),
        );
        let _ = writeln!(out, r#"<g class="box" data-group="{}">"#, escape(label));
        for (a, b) in [(ymax, yq3), (yq1, ymin)] {
            let _ = writeln!(
                out,
                r#"<line class="whisker" x1="{c}" y1="{}" x2="{c}" y2="{}" stroke="black"/>"#,
                px(a),
                px(b)
            );
        }
        for y in [ymax, ymin] {
            let _ = writeln!(
                out,
                r#"<line class="cap" x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black"/>"#,
                px(cx - half / 2.0),
                px(cx + half / 2.0),
                y = px(y)
            );
        }
        let _ = writeln!(
            out,
            r#"<rect class="iqr" x="{l}" y="{}" width="{}" height="{}" fill="lightsteelblue" stroke="black"/>"#,
            px(yq3),
            px(2.0 * half),
            px(yq1 - yq3)
        );
        let _ = writeln!(
            out,
            r#"<line class="median" x1="{l}" y1="{y}" x2="{r}" y2="{y}" stroke="black" stroke-width="2"/>"#,
            y = px(ymed)
        );
        let _ = writeln!(
            out,
            r#"<text class="label" x="{c}" y="{}" text-anchor="middle">{}</text>"#,
            px(HEIGHT - BOTTOM + 18.0),
            escape(label)
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
