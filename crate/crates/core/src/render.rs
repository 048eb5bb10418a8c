//! Deterministic SVG rendering of instances.
//!
//! Rendering is the one place floating point is used: coordinates are
//! converted from exact rationals only to place shapes on the canvas,
//! and they are always formatted with two decimals, so the output for a
//! given instance is byte-for-byte reproducible.

use crate::geom::{to_f64, ConvexRegion, Point};
use crate::model::Instance;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    /// Label each point with its index.
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { width: 800, height: 800, labels: true }
    }
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

const MARGIN: f64 = 40.0;

struct Canvas {
    scale: f64,
    min_x: f64,
    min_y: f64,
    height: f64,
}

impl Canvas {
    fn fit(points: &[Point], width: f64, height: f64) -> Canvas {
        let xs: Vec<f64> = points.iter().map(|p| to_f64(&p.x)).collect();
        let ys: Vec<f64> = points.iter().map(|p| to_f64(&p.y)).collect();
        let min_x = xs.iter().copied().fold(f64::INFINITY, f64::min);
        let max_x = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min_y = ys.iter().copied().fold(f64::INFINITY, f64::min);
        let max_y = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (min_x, max_x, min_y, max_y) = if points.is_empty() {
            (0.0, 1.0, 0.0, 1.0)
        } else {
            (min_x, max_x, min_y, max_y)
        };
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let scale =
            ((width - 2.0 * MARGIN) / span_x).min((height - 2.0 * MARGIN) / span_y);
        Canvas { scale, min_x, min_y, height }
    }

    fn x(&self, p: &Point) -> f64 {
        MARGIN + (to_f64(&p.x) - self.min_x) * self.scale
    }

    /// Flips the y axis: mathematical "up" renders upward.
    fn y(&self, p: &Point) -> f64 {
        self.height - (MARGIN + (to_f64(&p.y) - self.min_y) * self.scale)
    }
}

fn push_region(out: &mut String, region: &ConvexRegion, color: &str, canvas: &Canvas) {
    match region.dimension() {
        2 => {
            let pts: Vec<String> = region
                .vertices()
                .iter()
                .map(|p| format!("{:.2},{:.2}", canvas.x(p), canvas.y(p)))
                .collect();
            let _ = writeln!(
                out,
                "  <polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.18\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
                pts.join(" ")
            );
        }
        1 => {
            let [a, b] = region.vertices() else { return };
            let _ = writeln!(
                out,
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"2\" stroke-opacity=\"0.75\"/>",
                canvas.x(a),
                canvas.y(a),
                canvas.x(b),
                canvas.y(b)
            );
        }
        0 => {
            let p = &region.vertices()[0];
            let _ = writeln!(
                out,
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"6\" fill=\"{color}\" fill-opacity=\"0.4\"/>",
                canvas.x(p),
                canvas.y(p)
            );
        }
        _ => {}
    }
}

/// Renders the instance as a standalone SVG document: hulls first
/// (polygons translucent, segments as thick lines), then the points
/// with optional index labels.
pub fn render_svg(inst: &Instance, opts: &RenderOptions) -> String {
    let width = f64::from(opts.width);
    let height = f64::from(opts.height);
    let canvas = Canvas::fit(inst.point_set().points(), width, height);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        opts.width, opts.height, opts.width, opts.height
    );
    let _ = writeln!(out, "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    for i in 0..inst.m() {
        let color = PALETTE[i % PALETTE.len()];
        push_region(&mut out, inst.region(i), color, &canvas);
    }
    for (i, p) in inst.point_set().points().iter().enumerate() {
        let _ = writeln!(
            out,
            "  <circle class=\"pt\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"#111\"/>",
            canvas.x(p),
            canvas.y(p)
        );
        if opts.labels {
            let _ = writeln!(
                out,
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333\">{i}</text>",
                canvas.x(p) + 6.0,
                canvas.y(p) - 6.0
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
