//! Fixed-layout SVG line plot of one trajectory.
//!
//! Output depends only on the input numbers, so identical requests give
//! identical bytes.

use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 16.0;
const TOP: f64 = 16.0;
const BOTTOM: f64 = 40.0;

/// Renders `(t, u)` as a single polyline with axes, the value range labelled
/// on the y axis and the time range on the x axis. A dashed line marks
/// `u = 0` when it falls inside the value range.
pub fn line_plot(t: &[f64], u: &[f64], title: &str) -> String {
    let t0 = t.first().copied().unwrap_or(0.0);
    let t1 = t.last().copied().unwrap_or(1.0);
    let (mut lo, mut hi) = u
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if !lo.is_finite() || !hi.is_finite() {
        (lo, hi) = (0.0, 0.0);
    }
    if hi - lo < 1e-12 * (1.0 + hi.abs()) {
        lo -= 1.0;
        hi += 1.0;
    }
    let span_t = if t1 > t0 { t1 - t0 } else { 1.0 };
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x = |tv: f64| LEFT + (tv - t0) / span_t * plot_w;
    let y = |uv: f64| TOP + (hi - uv) / (hi - lo) * plot_h;
    let (x_axis, y_axis) = (HEIGHT - BOTTOM, LEFT);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(
        out,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"{y_axis}\" y1=\"{x_axis}\" x2=\"{}\" y2=\"{x_axis}\" stroke=\"black\"/>",
        WIDTH - RIGHT
    );
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"{y_axis}\" y1=\"{TOP}\" x2=\"{y_axis}\" y2=\"{x_axis}\" stroke=\"black\"/>"
    );
    if lo < 0.0 && hi > 0.0 {
        let _ = writeln!(
            out,
            "<line class=\"zero\" x1=\"{y_axis}\" y1=\"{z:.2}\" x2=\"{}\" y2=\"{z:.2}\" \
             stroke=\"gray\" stroke-dasharray=\"4 4\"/>",
            WIDTH - RIGHT,
            z = y(0.0)
        );
    }
    let label = |out: &mut String, lx: f64, ly: f64, anchor: &str, v: f64| {
        let _ = writeln!(
            out,
            "<text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"12\" text-anchor=\"{anchor}\">{}</text>",
            number(v)
        );
    };
    label(&mut out, y_axis - 6.0, TOP + 4.0, "end", hi);
    label(&mut out, y_axis - 6.0, x_axis, "end", lo);
    label(&mut out, y_axis, x_axis + 18.0, "middle", t0);
    label(&mut out, WIDTH - RIGHT, x_axis + 18.0, "end", t1);
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">t</text>",
        LEFT + plot_w / 2.0,
        HEIGHT - 8.0
    );

    out.push_str("<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"");
    for (i, (&tv, &uv)) in t.iter().zip(u).enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{:.2},{:.2}", x(tv), y(uv));
    }
    out.push_str("\"/>\n</svg>\n");
    out
}

fn number(v: f64) -> String {
    if v != 0.0 && (v.abs() >= 1e4 || v.abs() < 1e-3) {
        format!("{v:.3e}")
    } else {
        format!("{v:.4}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
