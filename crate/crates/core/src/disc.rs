//! Poincaré disc arithmetic and the automorphism group of the unit disc.
//!
//! Every automorphism is stored in the canonical form `m = r_τ ∘ b_α`, where
//! `b_α(z) = (z - α) / (1 - ᾱz)` and `r_τ(z) = τz`. The pair `(α, τ)` is
//! unique, so comparing automorphisms is comparing parameters.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::quadratic;
use crate::{GeomError, Result, Tolerances};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `1 - |z|²` without cancellation for `|z|` close to one.
pub(crate) fn one_minus_norm_sqr(z: Complex64) -> f64 {
    let r = z.norm();
    (1.0 - r) * (1.0 + r)
}

/// Argument of `z` in `[0, 2π)`. Arguments within `1e-12` below zero are
/// rounded up to zero, so points on the positive real axis sort first even
/// when they carry a rounding error in the imaginary part.
pub fn arg_2pi(z: Complex64) -> f64 {
    let a = z.arg();
    if a < 0.0 && a > -1e-12 {
        0.0
    } else if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// Sorts circle points by ascending argument in `[0, 2π)`.
pub(crate) fn sort_by_arg(points: &mut [Complex64]) {
    points.sort_by(|a, b| arg_2pi(*a).partial_cmp(&arg_2pi(*b)).unwrap_or(Ordering::Equal));
}

/// Classification of a disc automorphism by its fixed points in the closed disc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutClass {
    Identity,
    /// One fixed point, inside the disc.
    Elliptic,
    /// One fixed point, on the unit circle.
    Parabolic,
    /// Two fixed points, both on the unit circle.
    Hyperbolic,
}

/// An automorphism `r_τ ∘ b_α` of the unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moebius {
    alpha: Complex64,
    tau: Complex64,
}

impl Moebius {
    /// Builds `r_τ ∘ b_α`, rescaling `τ` onto the unit circle.
    pub fn new(alpha: Complex64, tau: Complex64) -> Result<Self> {
        if !(alpha.norm() < 1.0) {
            return Err(GeomError::OutsideDisc(alpha.to_string()));
        }
        let n = tau.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(GeomError::InvalidParameter(format!("rotation {tau}")));
        }
        Ok(Moebius { alpha, tau: tau / n })
    }

    pub fn identity() -> Self {
        Moebius { alpha: ZERO, tau: ONE }
    }

    /// The Blaschke factor `b_α`.
    ///
    /// # Panics
    ///
    /// If `|α| >= 1`.
    pub fn blaschke(alpha: Complex64) -> Self {
        assert!(alpha.norm() < 1.0, "b_α needs |α| < 1, got {alpha}");
        Moebius { alpha, tau: ONE }
    }

    /// The rotation `r_τ`; `τ` is rescaled to unit modulus.
    ///
    /// # Panics
    ///
    /// If `τ` is zero or not finite.
    pub fn rotation(tau: Complex64) -> Self {
        Self::new(ZERO, tau).expect("rotation needs a nonzero finite τ")
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    /// `τ(z - α)/(1 - ᾱz)` with no domain checks.
    #[inline]
    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.tau * (z - self.alpha) / (ONE - self.alpha.conj() * z)
    }

    /// Evaluates on the closed disc, rejecting points outside it and poles.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 + 1e-12 {
            return Err(GeomError::OutsideDisc(z.to_string()));
        }
        let den = ONE - self.alpha.conj() * z;
        if den.norm() < 1e-300 {
            return Err(GeomError::Pole(z.to_string()));
        }
        Ok(self.tau * (z - self.alpha) / den)
    }

    /// `m'(z) = τ(1 - |α|²)/(1 - ᾱz)²`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = ONE - self.alpha.conj() * z;
        self.tau * one_minus_norm_sqr(self.alpha) / (den * den)
    }

    /// Coefficients of `z ↦ (az + b)/(cz + d)`.
    fn matrix(&self) -> [Complex64; 4] {
        [self.tau, -self.tau * self.alpha, -self.alpha.conj(), ONE]
    }

    fn from_matrix([a, b, _c, d]: [Complex64; 4]) -> Self {
        let tau = a / d;
        let alpha = -b / a;
        Moebius {
            alpha,
            tau: tau / tau.norm(),
        }
    }

    /// `self ∘ other`, renormalized to canonical parameters.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        let [a1, b1, c1, d1] = self.matrix();
        let [a2, b2, c2, d2] = other.matrix();
        Self::from_matrix([
            a1 * a2 + b1 * c2,
            a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2,
            c1 * b2 + d1 * d2,
        ])
    }

    /// `(r_τ ∘ b_α)⁻¹ = r_τ̄ ∘ b_{-τα}`.
    pub fn inverse(&self) -> Moebius {
        Moebius {
            alpha: -self.tau * self.alpha,
            tau: self.tau.conj(),
        }
    }

    /// `c ∘ self ∘ c⁻¹`.
    pub fn conjugate_by(&self, c: &Moebius) -> Moebius {
        c.compose(self).compose(&c.inverse())
    }

    pub fn approx_eq(&self, other: &Moebius, eps: f64) -> bool {
        (self.alpha - other.alpha).norm() <= eps && (self.tau - other.tau).norm() <= eps
    }

    pub fn is_identity(&self, eps: f64) -> bool {
        self.approx_eq(&Moebius::identity(), eps)
    }

    /// Elliptic iff `|τ - 1| > 2|α|`, parabolic on equality (within
    /// `class_eps`), hyperbolic otherwise.
    pub fn classify(&self, tol: &Tolerances) -> AutClass {
        if self.is_identity(tol.class_eps) {
            return AutClass::Identity;
        }
        let gap = (self.tau - ONE).norm() - 2.0 * self.alpha.norm();
        if gap.abs() <= tol.class_eps {
            AutClass::Parabolic
        } else if gap > 0.0 {
            AutClass::Elliptic
        } else {
            AutClass::Hyperbolic
        }
    }

    /// Fixed points in the closed disc, sorted by argument.
    ///
    /// `m(x) = x` clears to `ᾱx² + (τ - 1)x - τα = 0`. Hyperbolic maps give two
    /// circle points, parabolic maps one circle point and elliptic maps the
    /// root inside the disc.
    pub fn fixed_points(&self, tol: &Tolerances) -> Result<Vec<Complex64>> {
        let a = self.alpha.conj();
        let b = self.tau - ONE;
        let c = -self.tau * self.alpha;
        match self.classify(tol) {
            AutClass::Identity => Err(GeomError::AllPointsFixed),
            AutClass::Elliptic => {
                let [r1, r2] = quadratic::roots(a, b, c);
                Ok(vec![if r1.norm() < r2.norm() { r1 } else { r2 }])
            }
            AutClass::Parabolic => {
                let x = -b / (2.0 * a);
                Ok(vec![x / x.norm()])
            }
            AutClass::Hyperbolic => {
                let [r1, r2] = quadratic::roots(a, b, c);
                let mut pts = vec![r1 / r1.norm(), r2 / r2.norm()];
                sort_by_arg(&mut pts);
                Ok(pts)
            }
        }
    }

    /// `τ = 1`, equivalently `m'(0) > 0`.
    pub fn is_irrotational(&self, tol: &Tolerances) -> bool {
        (self.tau - ONE).norm() <= tol.class_eps
    }

    /// For irrotational `m = b_β`, the unique `α` with `b_α ∘ b_α = m`,
    /// namely `α = β / (1 + √(1 - |β|²))`.
    pub fn irrotational_sqrt(&self, tol: &Tolerances) -> Result<Complex64> {
        if !self.is_irrotational(tol) {
            return Err(GeomError::NotIrrotational);
        }
        Ok(hyperbolic_midpoint(self.alpha))
    }
}

/// Hyperbolic midpoint of `0` and `β`: `β / (1 + √(1 - |β|²))`.
pub fn hyperbolic_midpoint(beta: Complex64) -> Complex64 {
    beta / (1.0 + one_minus_norm_sqr(beta).sqrt())
}

/// Hyperbolic reflection `b_c⁻¹(-b_c(w))` about `c`.
pub fn reflect(c: Complex64, w: Complex64) -> Complex64 {
    let b = Moebius::blaschke(c);
    b.inverse().apply(-b.apply(w))
}

/// Poincaré distance `tanh⁻¹ |(z - w)/(1 - w̄z)|`.
///
/// For `x` past one half it is evaluated as `ln(1 + x) - ½ ln(1 - x²)` with
/// `1 - x²` formed from `(1 - |z|²)(1 - |w|²)/|1 - w̄z|²`, which stays
/// accurate near the circle.
pub fn poincare_distance(z: Complex64, w: Complex64) -> f64 {
    let den = ONE - w.conj() * z;
    let x = ((z - w) / den).norm();
    if x < 0.5 {
        return x.atanh();
    }
    let one_minus_x2 = one_minus_norm_sqr(z) * one_minus_norm_sqr(w) / den.norm_sqr();
    (1.0 + x).ln() - 0.5 * one_minus_x2.ln()
}

/// Infinitesimal Poincaré length `|v| / (1 - |z|²)`.
pub fn poincare_length(z: Complex64, v: Complex64) -> f64 {
    v.norm() / one_minus_norm_sqr(z)
}

/// A datum in the disc: two points, or a point with a tangent vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiscDatum {
    Discrete(Complex64, Complex64),
    Infinitesimal(Complex64, Complex64),
}

/// Poincaré distance or infinitesimal length of a disc datum.
pub fn poincare(datum: &DiscDatum) -> Result<f64> {
    match *datum {
        DiscDatum::Discrete(z, w) => {
            if z.norm() >= 1.0 || w.norm() >= 1.0 {
                return Err(GeomError::BoundaryPoint);
            }
            Ok(poincare_distance(z, w))
        }
        DiscDatum::Infinitesimal(z, v) => {
            if z.norm() >= 1.0 {
                return Err(GeomError::BoundaryPoint);
            }
            Ok(poincare_length(z, v))
        }
    }
}

/// `b_z` followed by the rotation that puts `w` on the positive real axis.
fn normalize_pair(z: Complex64, w: Complex64) -> Moebius {
    let b = Moebius::blaschke(z);
    let d = b.apply(w);
    let n = d.norm();
    if n < 1e-300 {
        b
    } else {
        Moebius::rotation(d.conj() / n).compose(&b)
    }
}

/// The unique automorphism with `m(z1) = z2` and `m(w1) = w2`, provided the
/// two pairs are at equal Poincaré distance (relative `match_tol`).
pub fn connecting_aut(
    z1: Complex64,
    z2: Complex64,
    w1: Complex64,
    w2: Complex64,
    tol: &Tolerances,
) -> Option<Moebius> {
    let rho1 = poincare_distance(z1, w1);
    let rho2 = poincare_distance(z2, w2);
    if (rho1 - rho2).abs() > tol.match_tol * (1.0 + rho1) {
        return None;
    }
    let g = normalize_pair(z1, w1);
    let h = normalize_pair(z2, w2);
    Some(h.inverse().compose(&g))
}

/// The real hyperbolic geodesic `C_η` of the disc joining two circle points,
/// parametrized by `(-1, 1)` through a disc automorphism.
///
/// `point(1) = η1`, `point(-1) = η2`, and `point(0)` is the point of the arc
/// closest to the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscGeodesic {
    map: Moebius,
    ends: (Complex64, Complex64),
}

impl DiscGeodesic {
    /// Builds `C_η` for the ordered endpoints `(η1, η2)`.
    ///
    /// Writing `η1 = ζe^{iθ}`, `η2 = ζe^{-iθ}` with `θ ∈ (0, π)`, the arc
    /// crosses the ray through `ζ` at distance `cos θ / (1 + sin θ)` from 0.
    pub fn new(eta1: Complex64, eta2: Complex64) -> Result<Self> {
        for eta in [eta1, eta2] {
            if (eta.norm() - 1.0).abs() > 1e-9 {
                return Err(GeomError::InvalidParameter(format!(
                    "{eta} is not on the unit circle"
                )));
            }
        }
        let (eta1, eta2) = (eta1 / eta1.norm(), eta2 / eta2.norm());
        if (eta1 - eta2).norm() < 1e-12 {
            return Err(GeomError::EqualPoints);
        }
        let theta = 0.5 * arg_2pi(eta1 / eta2);
        let zeta = eta1 * Complex64::from_polar(1.0, -theta);
        let a = theta.cos() / (1.0 + theta.sin());
        let c = zeta * a;
        let omega = Moebius::blaschke(c).apply(eta1);
        let map = Moebius::blaschke(-c).compose(&Moebius::rotation(omega));
        Ok(DiscGeodesic {
            map,
            ends: (eta1, eta2),
        })
    }

    /// The parametrizing automorphism `φ⁻¹`, so that `C_η(x) = φ⁻¹(x)`.
    pub fn map(&self) -> &Moebius {
        &self.map
    }

    pub fn endpoints(&self) -> (Complex64, Complex64) {
        self.ends
    }

    pub fn point(&self, x: f64) -> Complex64 {
        self.map.apply(Complex64::new(x, 0.0))
    }

    pub fn derivative(&self, x: f64) -> Complex64 {
        self.map.derivative(Complex64::new(x, 0.0))
    }

    /// Point of the arc closest to the origin.
    pub fn closest_to_origin(&self) -> Complex64 {
        self.point(0.0)
    }

    /// Poincaré distance from `z` to the arc: pull back to the real diameter,
    /// where `sinh 2d = 2|Im w| / (1 - |w|²)`.
    pub fn distance_to(&self, z: Complex64) -> f64 {
        let w = self.map.inverse().apply(z);
        0.5 * (2.0 * w.im.abs() / one_minus_norm_sqr(w)).asinh()
    }
}

/// `C_η` for the fixed points of a hyperbolic automorphism, in the order
/// returned by [`Moebius::fixed_points`].
pub fn boundary_geodesic(eta1: Complex64, eta2: Complex64) -> Result<DiscGeodesic> {
    DiscGeodesic::new(eta1, eta2)
}
