//! Distinguished real geodesics `Ξ_B = h_m(C_η)` and the chart of `G ∖ R`
//! by (endpoint pair, leaf, position along the leaf).
//!
//! Every non-royal point lies on exactly one `Ξ_B`, namely the one whose
//! base `B` is the geodesic through the point in its sharp direction. Moving
//! the endpoint pair to `(1, -1)` turns `B` into `B_{b_t}` for a unique
//! `t ∈ (0, 1)`, and `Ξ_B` into `x ↦ h_{b_t}(x)`, `x ∈ (-1, 1)`.

use num_complex::Complex64;

use crate::disc::{arg_2pi, sort_by_arg, AutClass, DiscGeodesic, Moebius};
use crate::domain::{apply_aut, sin_angle, GPoint, Vector};
use crate::geodesic::{h_eval, standard_position, Geodesic};
use crate::{GeomError, Result, Tolerances};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The real curve `x ↦ h_m(C_η(x))` on `(-1, 1)`, with `η` the fixed points
/// of `m`. With `m` the identity it is a real geodesic inside `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiCurve {
    pub base: Geodesic,
    m: Moebius,
    arc: DiscGeodesic,
}

impl XiCurve {
    pub fn point(&self, x: f64) -> GPoint {
        h_eval(&self.m, self.arc.point(x))
    }

    pub fn tangent(&self, x: f64) -> Vector {
        let z = self.arc.point(x);
        let dz = self.arc.derivative(x);
        let (mz, dm) = (self.m.apply(z), self.m.derivative(z));
        [(ONE + dm) * dz, (mz + z * dm) * dz]
    }

    /// Limits at `x = 1` and `x = -1`, both on the edge `{(2η, η²) : |η| = 1}`.
    pub fn endpoints(&self) -> [(Complex64, Complex64); 2] {
        let (a, b) = self.arc.endpoints();
        [(2.0 * a, a * a), (2.0 * b, b * b)]
    }

    pub fn arc(&self) -> &DiscGeodesic {
        &self.arc
    }
}

/// `Ξ_B` for a purely balanced `B`.
pub fn xi_curve(base: &Geodesic, tol: &Tolerances) -> Result<XiCurve> {
    let Geodesic::Bm(m) = *base else {
        return Err(GeomError::NotHyperbolic);
    };
    if m.classify(tol) != AutClass::Hyperbolic {
        return Err(GeomError::NotHyperbolic);
    }
    let eta = m.fixed_points(tol)?;
    Ok(XiCurve {
        base: *base,
        m,
        arc: DiscGeodesic::new(eta[0], eta[1])?,
    })
}

/// The royal distinguished geodesic `x ↦ (2C_η(x), C_η(x)²)`.
pub fn royal_xi_curve(eta1: Complex64, eta2: Complex64) -> Result<XiCurve> {
    Ok(XiCurve {
        base: Geodesic::royal(),
        m: Moebius::identity(),
        arc: DiscGeodesic::new(eta1, eta2)?,
    })
}

/// Whether the tangent of `geo` at `λ` is the sharp direction.
pub fn is_sharp_point(geo: &Geodesic, lambda: &GPoint, tol: &Tolerances) -> Result<bool> {
    let z = geo.parameter_of(lambda, tol).ok_or(GeomError::NotOnGeodesic)?;
    Ok(match geo {
        Geodesic::Flat(_) => false,
        Geodesic::Bm(m) if m.classify(tol) == AutClass::Identity => true,
        Geodesic::Bm(_) => {
            sin_angle(geo.tangent(z), lambda.sharp_direction().vector()) <= tol.dir_eps
        }
    })
}

/// Chart coordinates of a point of `G ∖ R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartCoord {
    /// Endpoints of the leaf, in ascending argument in `[0, 2π)`.
    pub eta: (Complex64, Complex64),
    /// Leaf parameter: the base geodesic is `B_{b_t}` after normalization.
    pub t: f64,
    /// Position along the leaf, `(x + 1)/2`.
    pub u: f64,
}

/// Chart coordinates of `λ ∉ R`.
///
/// In standard position `λ = (0, -σ²)` and its sharp geodesic is
/// `B_{b_ρ}` with `ρ = 2σ/(1 + σ²)`, fixed points `±1` and `λ = h_{b_ρ}(σ)`.
/// Moving back gives the endpoint pair `b⁻¹(±1)`; translation length is
/// invariant, so `t = ρ`, and the position comes from `σ` carried through
/// `φ ∘ b⁻¹`, which preserves the real diameter.
pub fn chart(lambda: &GPoint, tol: &Tolerances) -> Result<ChartCoord> {
    let (s, p) = (lambda.s(), lambda.p());
    if (s * s - 4.0 * p).norm() <= tol.royal_margin * (1.0 + s.norm_sqr()) {
        return Err(GeomError::RoyalPoint("the chart is undefined on the royal variety"));
    }
    let (b, sigma) = standard_position(lambda, tol)?;
    let back = b.inverse();
    let mut eta = [back.apply(ONE), back.apply(-ONE)].map(|e| e / e.norm());
    sort_by_arg(&mut eta);
    let arc = DiscGeodesic::new(eta[0], eta[1])?;
    let to_model = arc.map().inverse().compose(&back);
    let t = 2.0 * sigma / (1.0 + sigma * sigma);
    let leaf = Moebius::blaschke(Complex64::new(t, 0.0));
    let y1 = to_model.apply(Complex64::new(sigma, 0.0));
    let y2 = to_model.apply(Complex64::new(-sigma, 0.0));
    let x = if (leaf.apply(y1) - y2).norm() <= (leaf.apply(y2) - y1).norm() { y1 } else { y2 };
    Ok(ChartCoord {
        eta: (eta[0], eta[1]),
        t,
        u: 0.5 * (x.re + 1.0),
    })
}

pub fn unchart(coord: &ChartCoord) -> Result<GPoint> {
    let ChartCoord { eta: (eta1, eta2), t, u } = *coord;
    for (name, v) in [("t", t), ("u", u)] {
        if !(v > 0.0 && v < 1.0) {
            return Err(GeomError::InvalidParameter(format!("{name} must lie in (0, 1), got {v}")));
        }
    }
    if arg_2pi(eta1) >= arg_2pi(eta2) {
        return Err(GeomError::InvalidParameter(
            "edge pair must be in ascending argument".into(),
        ));
    }
    let arc = DiscGeodesic::new(eta1, eta2)?;
    let model = h_eval(&Moebius::blaschke(Complex64::new(t, 0.0)), Complex64::new(2.0 * u - 1.0, 0.0));
    let lambda = apply_aut(arc.map(), &model);
    GPoint::new(lambda.s(), lambda.p())
}
