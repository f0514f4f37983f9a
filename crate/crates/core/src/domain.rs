//! Points of the symmetrized bidisc, the action of `Aut D` on it, and the
//! flat and sharp direction fields.

use std::fmt;

use num_complex::Complex64;

use crate::disc::{hyperbolic_midpoint, one_minus_norm_sqr, Moebius};
use crate::quadratic;
use crate::{GeomError, Result, Tolerances};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A tangent vector `(ds, dp)`.
pub type Vector = [Complex64; 2];

/// Complex 2×2 derivative in `(s, p)` coordinates, row-major.
pub type Jacobian = [[Complex64; 2]; 2];

pub fn apply_jacobian(j: &Jacobian, v: Vector) -> Vector {
    [j[0][0] * v[0] + j[0][1] * v[1], j[1][0] * v[0] + j[1][1] * v[1]]
}

/// Membership in `G`: `|s - s̄p| < 1 - |p|²`, with `margin` of slack.
pub fn contains(s: Complex64, p: Complex64, margin: f64) -> bool {
    let lhs = (s - s.conj() * p).norm();
    lhs.is_finite() && lhs + margin < one_minus_norm_sqr(p)
}

/// A point `(s, p)` of the symmetrized bidisc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GPoint {
    s: Complex64,
    p: Complex64,
}

impl GPoint {
    pub fn new(s: Complex64, p: Complex64) -> Result<Self> {
        Self::with_margin(s, p, Tolerances::DEFAULT.boundary_margin)
    }

    pub fn with_margin(s: Complex64, p: Complex64, margin: f64) -> Result<Self> {
        if contains(s, p, margin) {
            Ok(GPoint { s, p })
        } else {
            Err(GeomError::not_in_domain(s, p))
        }
    }

    /// Skips the membership test; for points produced by maps known to land
    /// in `G`.
    pub(crate) fn new_unchecked(s: Complex64, p: Complex64) -> Self {
        GPoint { s, p }
    }

    /// `π(z1, z2) = (z1 + z2, z1 z2)`.
    pub fn symmetrize(z1: Complex64, z2: Complex64) -> Result<Self> {
        for z in [z1, z2] {
            if !(z.norm() < 1.0) {
                return Err(GeomError::OutsideDisc(z.to_string()));
            }
        }
        Ok(GPoint {
            s: z1 + z2,
            p: z1 * z2,
        })
    }

    /// The royal point `(2z, z²)`.
    ///
    /// # Panics
    ///
    /// If `|z| >= 1`.
    pub fn royal(z: Complex64) -> Self {
        assert!(z.norm() < 1.0, "royal point needs |z| < 1, got {z}");
        GPoint { s: 2.0 * z, p: z * z }
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }

    pub fn p(&self) -> Complex64 {
        self.p
    }

    /// The two roots of `x² - sx + p`, lexicographically larger `(Re, Im)`
    /// first. Consumers treat the pair as unordered.
    pub fn lift(&self) -> (Complex64, Complex64) {
        let [a, b] = quadratic::roots(ONE, -self.s, self.p);
        let larger = |x: Complex64, y: Complex64| {
            x.re > y.re || (x.re == y.re && x.im >= y.im)
        };
        if larger(a, b) {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// `|s² - 4p| = |z1 - z2|²`.
    pub fn royal_defect(&self) -> f64 {
        (self.s * self.s - 4.0 * self.p).norm()
    }

    /// On the royal variety, within `royal_eps` in `|z1 - z2|`.
    pub fn is_royal(&self, tol: &Tolerances) -> bool {
        let (z1, z2) = self.lift();
        (z1 - z2).norm() < tol.royal_eps
    }

    /// The unique `β` with this point on `F^β = {(β + β̄z, z)}`:
    /// `β = (s - s̄p)/(1 - |p|²)`.
    pub fn flat_coordinate(&self) -> Complex64 {
        (self.s - self.s.conj() * self.p) / one_minus_norm_sqr(self.p)
    }

    /// Tangent direction `(β̄, 1)` of the flat geodesic through this point.
    pub fn flat_direction(&self) -> Direction {
        Direction::from_unit_second(self.flat_coordinate().conj())
    }

    /// The sharp direction `(1, (β - s/2)/(1 - β̄s/2))` with `β` the flat
    /// coordinate.
    pub fn sharp_direction(&self) -> Direction {
        let beta = self.flat_coordinate();
        let half = 0.5 * self.s;
        Direction::from_unit_first((beta - half) / (ONE - beta.conj() * half))
    }

    /// Euclidean distance in `C²`.
    pub fn euclid(&self, other: &GPoint) -> f64 {
        ((self.s - other.s).norm_sqr() + (self.p - other.p).norm_sqr()).sqrt()
    }

    pub fn as_vector(&self) -> Vector {
        [self.s, self.p]
    }
}

impl fmt::Display for GPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.p)
    }
}

/// A point of `CP¹`, stored with its larger-modulus component equal to 1
/// (ties go to the first component).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    v: Vector,
}

impl Direction {
    pub fn new(v1: Complex64, v2: Complex64) -> Result<Self> {
        let (n1, n2) = (v1.norm(), v2.norm());
        if !(n1 > 0.0 || n2 > 0.0) || !n1.is_finite() || !n2.is_finite() {
            return Err(GeomError::ZeroVector);
        }
        Ok(if n1 >= n2 {
            Direction { v: [ONE, v2 / v1] }
        } else {
            Direction { v: [v1 / v2, ONE] }
        })
    }

    pub fn from_vector(v: Vector) -> Result<Self> {
        Self::new(v[0], v[1])
    }

    /// `(1, w)·C`.
    pub fn from_unit_first(w: Complex64) -> Self {
        Self::new(ONE, w).expect("nonzero first component")
    }

    /// `(w, 1)·C`.
    pub fn from_unit_second(w: Complex64) -> Self {
        Self::new(w, ONE).expect("nonzero second component")
    }

    pub fn vector(&self) -> Vector {
        self.v
    }

    /// `|v1 w2 - v2 w1| / (‖v‖ ‖w‖)`, the sine of the angle between the lines.
    pub fn sin_angle(&self, other: &Direction) -> f64 {
        sin_angle(self.v, other.v)
    }

    pub fn is_parallel(&self, other: &Direction, eps: f64) -> bool {
        self.sin_angle(other) <= eps
    }

    /// Image under a linear map, normally an automorphism derivative.
    pub fn push(&self, j: &Jacobian) -> Direction {
        Direction::from_vector(apply_jacobian(j, self.v)).expect("invertible jacobian")
    }
}

/// Sine of the angle between the complex lines spanned by `v` and `w`.
pub fn sin_angle(v: Vector, w: Vector) -> f64 {
    let nv = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    let nw = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
    (v[0] * w[1] - v[1] * w[0]).norm() / (nv * nw)
}

/// A datum: an ordered pair of points or a point with a tangent vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Datum {
    Discrete(GPoint, GPoint),
    Infinitesimal(GPoint, Vector),
}

impl Datum {
    pub fn is_degenerate(&self) -> bool {
        match self {
            Datum::Discrete(a, b) => a == b,
            Datum::Infinitesimal(_, v) => v[0] == ZERO && v[1] == ZERO,
        }
    }

    /// Image of the datum under `γ_b`.
    pub fn push(&self, b: &Moebius) -> Datum {
        match self {
            Datum::Discrete(l, m) => Datum::Discrete(apply_aut(b, l), apply_aut(b, m)),
            Datum::Infinitesimal(l, v) => {
                Datum::Infinitesimal(apply_aut(b, l), apply_jacobian(&aut_jacobian(b, l), *v))
            }
        }
    }

    pub fn swap(&self) -> Datum {
        match *self {
            Datum::Discrete(l, m) => Datum::Discrete(m, l),
            other => other,
        }
    }
}

/// Numerator pieces of `γ_b` for `b = r_τ ∘ b_α` in `(s, p)` coordinates:
/// `S = τ((1 + |α|²)s - 2ᾱp - 2α)/D`, `P = τ²(p - αs + α²)/D` with
/// `D = 1 - ᾱs + ᾱ²p`.
struct ActionTerms {
    ns: Complex64,
    np: Complex64,
    den: Complex64,
}

fn action_terms(b: &Moebius, s: Complex64, p: Complex64) -> ActionTerms {
    let a = b.alpha();
    let ac = a.conj();
    ActionTerms {
        ns: (1.0 + a.norm_sqr()) * s - 2.0 * ac * p - 2.0 * a,
        np: p - a * s + a * a,
        den: ONE - ac * s + ac * ac * p,
    }
}

/// `γ_b(π(z1, z2)) = π(b(z1), b(z2))`, evaluated in closed form so that no
/// lift is needed.
pub fn apply_aut(b: &Moebius, lambda: &GPoint) -> GPoint {
    let t = action_terms(b, lambda.s, lambda.p);
    let tau = b.tau();
    GPoint::new_unchecked(tau * t.ns / t.den, tau * tau * t.np / t.den)
}

/// Derivative of `γ_b` at `λ` in `(s, p)` coordinates.
pub fn aut_jacobian(b: &Moebius, lambda: &GPoint) -> Jacobian {
    let a = b.alpha();
    let ac = a.conj();
    let tau = b.tau();
    let t = action_terms(b, lambda.s, lambda.p);
    let d2 = t.den * t.den;
    // ∂D/∂s = -ᾱ, ∂D/∂p = ᾱ²
    let ds_ds = tau * ((1.0 + a.norm_sqr()) * t.den + t.ns * ac) / d2;
    let ds_dp = tau * (-2.0 * ac * t.den - t.ns * ac * ac) / d2;
    let dp_ds = tau * tau * (-a * t.den + t.np * ac) / d2;
    let dp_dp = tau * tau * (t.den - t.np * ac * ac) / d2;
    [[ds_ds, ds_dp], [dp_ds, dp_dp]]
}

/// The irrotational `b_α`, `α` the hyperbolic midpoint of 0 and `β`, whose
/// action carries `F^β` onto `F⁰`.
pub fn to_f0(beta: Complex64) -> Moebius {
    Moebius::blaschke(hyperbolic_midpoint(beta))
}
