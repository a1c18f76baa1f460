//! Static SVG plot of an eigenvalue sweep.

use std::fmt::Write as _;

use paraspec::spectra::SweepTable;
use paraspec::{Error, Result};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Tick positions covering `[lo, hi]` with a 1, 2 or 5 step.
fn ticks(lo: f64, hi: f64) -> (Vec<f64>, usize) {
    let raw = (hi - lo) / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    ((first..=last).map(|k| k as f64 * step).collect(), decimals)
}

fn label(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_owned()
    } else {
        s
    }
}

/// One polyline per eigenvalue index, with labelled axes.
pub fn emit_svg(table: &SweepTable, parameter: &str) -> Result<String> {
    let n = table.dimension();
    if table.lambdas.is_empty() || n == 0 {
        return Err(Error::Domain("cannot plot an empty sweep".into()));
    }
    let (x0, x1) = (table.lambdas[0], *table.lambdas.last().unwrap());
    let (x0, x1) = if x0 < x1 {
        (x0, x1)
    } else {
        (x0 - 1.0, x0 + 1.0)
    };
    let all = table.eigenvalues.iter().flatten().copied();
    let (mut y0, mut y1) = all.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
        (a.min(v), b.max(v))
    });
    if y1 - y0 < 1e-12 {
        y0 -= 1.0;
        y1 += 1.0;
    }
    let pad = 0.05 * (y1 - y0);
    let (y0, y1) = (y0 - pad, y1 + pad);

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
    let py = |y: f64| TOP + (y1 - y) / (y1 - y0) * plot_h;
    let (bottom, right) = (TOP + plot_h, LEFT + plot_w);

    let mut s = String::new();
    let w = &mut s;
    // writes to a String cannot fail
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(w, "<title>Eigenvalues versus {parameter}</title>");
    let _ = writeln!(
        w,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<g id="axes" stroke="black" stroke-width="1" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        w,
        r#"<line x1="{LEFT}" y1="{bottom}" x2="{right}" y2="{bottom}"/>"#
    );
    let _ = writeln!(
        w,
        r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{bottom}"/>"#
    );
    let (xt, xd) = ticks(x0, x1);
    for t in xt {
        let x = px(t);
        let _ = writeln!(
            w,
            r#"<line x1="{x:.3}" y1="{bottom}" x2="{x:.3}" y2="{:.3}"/>"#,
            bottom + 5.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{x:.3}" y="{:.3}" text-anchor="middle" stroke="none">{}</text>"#,
            bottom + 20.0,
            label(t, xd)
        );
    }
    let (yt, yd) = ticks(y0, y1);
    for t in yt {
        let y = py(t);
        let _ = writeln!(
            w,
            r#"<line x1="{:.3}" y1="{y:.3}" x2="{LEFT}" y2="{y:.3}"/>"#,
            LEFT - 5.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="end" stroke="none">{}</text>"#,
            LEFT - 8.0,
            y + 4.0,
            label(t, yd)
        );
    }
    let _ = writeln!(
        w,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle" stroke="none">{parameter}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        w,
        r#"<text x="20" y="{:.3}" text-anchor="middle" stroke="none">E</text>"#,
        TOP + plot_h / 2.0
    );
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, r#"<g id="eigenvalues" fill="none" stroke-width="1.5">"#);
    for k in 0..n {
        let points: Vec<String> = table
            .rows()
            .map(|(l, e)| format!("{:.3},{:.3}", px(l), py(e[k])))
            .collect();
        let _ = writeln!(
            w,
            r#"<polyline data-index="{}" stroke="{}" points="{}"/>"#,
            k + 1,
            PALETTE[k % PALETTE.len()],
            points.join(" ")
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    Ok(s)
}
