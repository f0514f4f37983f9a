//! The Carathéodory extremal problem on `G`, solved over the universal
//! family `Φ_ω(s, p) = (2ωp - s)/(2 - ωs)`, `ω ∈ T`.
//!
//! Since `G` is a Lempert domain the Carathéodory value is also the
//! Kobayashi distance, so [`caratheodory`] is the distance routine for
//! arbitrary data.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::disc::{one_minus_norm_sqr, poincare_distance};
use crate::domain::{Datum, GPoint, Vector};
use crate::geodesic::Geodesic;
use crate::Tolerances;

/// `Φ_ω(λ)`. Lands in `D` whenever `λ ∈ G` and `|ω| = 1`.
pub fn phi(omega: Complex64, lambda: &GPoint) -> Complex64 {
    let (s, p) = (lambda.s(), lambda.p());
    (2.0 * omega * p - s) / (2.0 - omega * s)
}

/// `(∂Φ_ω/∂s, ∂Φ_ω/∂p)` at `λ`.
pub fn phi_gradient(omega: Complex64, lambda: &GPoint) -> Vector {
    let (s, p) = (lambda.s(), lambda.p());
    let den = 2.0 - omega * s;
    [(-2.0 + 2.0 * omega * omega * p) / (den * den), 2.0 * omega / den]
}

/// Outcome of the extremal search.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalResult {
    /// `d_G` for a pair, or the infinitesimal metric for a tangent vector.
    pub value: f64,
    /// Extremal `ω`, pairwise more than `cluster_angle` apart. Empty when the
    /// objective is constant.
    pub maximizers: Vec<Complex64>,
    /// The objective varies by less than `value_tol` over `T`.
    pub constant_objective: bool,
    /// The datum was a repeated point or a zero vector.
    pub degenerate: bool,
}

/// `|Φ_ω(δ)|` in the Poincaré metric of `D`.
pub fn objective(omega: Complex64, datum: &Datum) -> f64 {
    match datum {
        Datum::Discrete(l, m) => poincare_distance(phi(omega, l), phi(omega, m)),
        Datum::Infinitesimal(l, v) => {
            let g = phi_gradient(omega, l);
            (g[0] * v[0] + g[1] * v[1]).norm() / one_minus_norm_sqr(phi(omega, l))
        }
    }
}

/// Maximizes [`objective`] over the circle: a uniform grid brackets every
/// local maximum, golden-section search refines each one, and maxima within
/// `value_tol` of the best are kept after clustering.
pub fn caratheodory(datum: &Datum, tol: &Tolerances) -> ExtremalResult {
    if datum.is_degenerate() {
        return ExtremalResult {
            value: 0.0,
            maximizers: Vec::new(),
            constant_objective: true,
            degenerate: true,
        };
    }
    let f = |theta: f64| objective(Complex64::from_polar(1.0, theta), datum);
    let n = tol.grid.max(3);
    let step = TAU / n as f64;
    let samples: Vec<f64> = (0..n).map(|k| f(k as f64 * step)).collect();
    let hi = samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = samples.iter().copied().fold(f64::INFINITY, f64::min);
    if hi - lo < tol.value_tol {
        return ExtremalResult {
            value: samples.iter().sum::<f64>() / n as f64,
            maximizers: Vec::new(),
            constant_objective: true,
            degenerate: false,
        };
    }

    let mut peaks: Vec<(f64, f64)> = (0..n)
        .filter(|&k| {
            let here = samples[k];
            here >= samples[(k + n - 1) % n] && here >= samples[(k + 1) % n]
        })
        .map(|k| {
            let centre = k as f64 * step;
            golden_max(&f, centre - step, centre + step, tol.golden_width)
        })
        .collect();
    peaks.sort_by(|a, b| b.1.total_cmp(&a.1));
    let best = peaks[0].1;

    let mut kept: Vec<(f64, f64)> = Vec::new();
    for (theta, value) in peaks {
        if best - value > tol.value_tol {
            break;
        }
        if kept.iter().all(|&(t, _)| angle_gap(t, theta) > tol.cluster_angle) {
            kept.push((theta, value));
        }
    }
    kept.sort_by(|a, b| a.0.rem_euclid(TAU).total_cmp(&b.0.rem_euclid(TAU)));
    ExtremalResult {
        value: best,
        maximizers: kept.iter().map(|&(t, _)| Complex64::from_polar(1.0, t)).collect(),
        constant_objective: false,
        degenerate: false,
    }
}

/// Kobayashi distance between `h(z)` and `h(w)` along a parametrized
/// geodesic, which is the Poincaré distance of the parameters.
pub fn geodesic_distance(_geo: &Geodesic, z: Complex64, w: Complex64) -> f64 {
    poincare_distance(z, w)
}

/// Golden-section search for a maximum of `f` on `[a, b]`. Returns the
/// argument and value of the best point seen.
fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, width: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > width {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d).min(PI)
}
