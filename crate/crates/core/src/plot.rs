//! SVG picture of the real slice `G ∩ R²`, the triangle `|s| < 1 + p`.
//!
//! Layers, each an SVG group with a fixed id:
//! - `region`: the triangle boundary.
//! - `royal`: the parabola `p = s²/4`, the real trace of `R`.
//! - `flats`: `s = β(1 + p)` for real `β`.
//! - `ortho-leaves`: geodesics orthogonal to `F⁰`, namely `B_{b_r}` (below
//!   the parabola) and `B_{b_{ib}}` (above it) for real `r`, `b`.
//! - `distinguished`: the curves `Ξ` of the leaves `B_{b_r}`.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::disc::Moebius;
use crate::distinguished::xi_curve;
use crate::geodesic::{h_eval, Geodesic};
use crate::Tolerances;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 420.0;
const PAD: f64 = 10.0;
const SAMPLES: usize = 200;

/// Plot options.
#[derive(Debug, Clone, Copy)]
pub struct SliceOptions {
    /// Orthogonal leaves to draw, split between the two sides of the parabola.
    pub leaves: usize,
    /// Flat geodesics to draw.
    pub beta_lines: usize,
}

impl Default for SliceOptions {
    fn default() -> Self {
        SliceOptions { leaves: 12, beta_lines: 9 }
    }
}

fn to_canvas(s: f64, p: f64) -> (f64, f64) {
    let x = PAD + (s + 2.0) / 4.0 * (WIDTH - 2.0 * PAD);
    let y = PAD + (1.0 - p) / 2.0 * (HEIGHT - 2.0 * PAD);
    (x, y)
}

fn polyline(points: impl IntoIterator<Item = (f64, f64)>) -> String {
    let mut attr = String::new();
    for (s, p) in points {
        let (x, y) = to_canvas(s, p);
        if !attr.is_empty() {
            attr.push(' ');
        }
        let _ = write!(attr, "{x:.2},{y:.2}");
    }
    format!("    <polyline points=\"{attr}\"/>\n")
}

/// Uniform samples of the open interval `(a, b)`.
fn open_grid(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..n).map(move |k| a + (b - a) * k as f64 / n as f64)
}

/// Real trace of `B_{b_{ib}}`: the points `z = x + iy` with
/// `b_{ib}(z) = z̄`, i.e. `by² - 2y + b(1 + x²) = 0`, mapped to
/// `(2x, x² + y²)`.
fn upper_leaf(b: f64) -> Vec<(f64, f64)> {
    let reach = (1.0 / (b * b) - 1.0).sqrt().min(1.0);
    open_grid(-reach, reach, SAMPLES)
        .filter_map(|x| {
            let disc = 1.0 - b * b * (1.0 + x * x);
            (disc >= 0.0).then(|| {
                let y = (1.0 - disc.sqrt()) / b;
                (2.0 * x, x * x + y * y)
            })
        })
        .filter(|&(_, p)| p < 1.0)
        .collect()
}

/// Feet `(0, ∓a²)` of the leaves, spaced evenly in `a ∈ (0, 1)`.
fn foot_params(n: usize) -> Vec<f64> {
    (1..=n).map(|k| k as f64 / (n + 1) as f64).collect()
}

/// Renders the real slice as an SVG 1.1 document.
pub fn real_slice_svg(opts: &SliceOptions) -> String {
    let tol = Tolerances::default();
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, "  <title>Real slice of the symmetrized bidisc</title>");

    let corners = [(-2.0, 1.0), (2.0, 1.0), (0.0, -1.0), (-2.0, 1.0)];
    svg.push_str(r##"  <g id="region" fill="none" stroke="#000" stroke-width="1.5">"##);
    svg.push('\n');
    svg.push_str(&polyline(corners));
    svg.push_str("  </g>\n");

    svg.push_str(r##"  <g id="royal" fill="none" stroke="#b8860b" stroke-width="2">"##);
    svg.push('\n');
    svg.push_str(&polyline((0..=SAMPLES).map(|k| {
        let s = -2.0 + 4.0 * k as f64 / SAMPLES as f64;
        (s, s * s / 4.0)
    })));
    svg.push_str("  </g>\n");

    svg.push_str(r##"  <g id="flats" fill="none" stroke="#4682b4" stroke-width="0.8">"##);
    svg.push('\n');
    for beta in open_grid(-1.0, 1.0, opts.beta_lines + 1) {
        svg.push_str(&polyline([(0.0, -1.0), (2.0 * beta, 1.0)]));
    }
    svg.push_str("  </g>\n");

    let lower = opts.leaves.div_ceil(2);
    let upper = opts.leaves - lower;
    let lower_r: Vec<f64> = foot_params(lower).into_iter().map(|a| 2.0 * a / (1.0 + a * a)).collect();

    svg.push_str(r##"  <g id="ortho-leaves" fill="none" stroke="#2e8b57" stroke-width="1">"##);
    svg.push('\n');
    for &r in &lower_r {
        let m = Moebius::blaschke(Complex64::new(r, 0.0));
        svg.push_str(&polyline(open_grid(-1.0, 1.0, SAMPLES).map(|x| {
            let l = h_eval(&m, Complex64::new(x, 0.0));
            (l.s().re, l.p().re)
        })));
    }
    for a in foot_params(upper) {
        svg.push_str(&polyline(upper_leaf(2.0 * a / (1.0 + a * a))));
    }
    svg.push_str("  </g>\n");

    svg.push_str(
        r##"  <g id="distinguished" fill="none" stroke="#8b0000" stroke-width="1" stroke-dasharray="4 3">"##,
    );
    svg.push('\n');
    for &r in &lower_r {
        let base = Geodesic::Bm(Moebius::blaschke(Complex64::new(r, 0.0)));
        if let Ok(xi) = xi_curve(&base, &tol) {
            svg.push_str(&polyline(open_grid(-1.0, 1.0, SAMPLES).map(|x| {
                let l = xi.point(x);
                (l.s().re, l.p().re)
            })));
        }
    }
    svg.push_str("  </g>\n");
    svg.push_str("</svg>\n");
    svg
}
