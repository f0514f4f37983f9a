//! Complex geodesics of `G`: the flat geodesics `F^β` and the curves
//! `B_m = h_m(D)`, `h_m(z) = (z + m(z), z m(z))`, for non-elliptic `m`.
//!
//! Besides construction through two points or through a point and a
//! direction, this module classifies geodesics and directions into the five
//! types royal, flat, purely balanced, exceptional and purely unbalanced.
//! Only the first four are ever parametrized.

use std::fmt;

use num_complex::Complex64;

use crate::disc::{arg_2pi, connecting_aut, AutClass, Moebius};
use crate::domain::{apply_aut, aut_jacobian, Direction, GPoint, Vector};
use crate::quadratic;
use crate::{GeomError, Result, Tolerances};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The five geodesic types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeodesicType {
    Royal,
    Flat,
    PurelyBalanced,
    Exceptional,
    PurelyUnbalanced,
}

impl GeodesicType {
    pub fn as_str(&self) -> &'static str {
        match self {
            GeodesicType::Royal => "royal",
            GeodesicType::Flat => "flat",
            GeodesicType::PurelyBalanced => "purely-balanced",
            GeodesicType::Exceptional => "exceptional",
            GeodesicType::PurelyUnbalanced => "purely-unbalanced",
        }
    }
}

impl fmt::Display for GeodesicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parametrized geodesic.
///
/// `Bm` holds the canonical one of `m` and `m⁻¹` (both give the same curve):
/// the one with lexicographically larger `(Re α, Im α)`, ties broken by the
/// larger `arg τ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    /// `F^β = {(β + β̄z, z) : z ∈ D}`.
    Flat(Complex64),
    Bm(Moebius),
}

impl Geodesic {
    pub fn flat(beta: Complex64) -> Result<Self> {
        if beta.norm() < 1.0 {
            Ok(Geodesic::Flat(beta))
        } else {
            Err(GeomError::OutsideDisc(beta.to_string()))
        }
    }

    /// `B_m`, rejecting elliptic `m`.
    pub fn bm(m: Moebius, tol: &Tolerances) -> Result<Self> {
        if m.classify(tol) == AutClass::Elliptic {
            return Err(GeomError::Elliptic);
        }
        Ok(Geodesic::Bm(canonical(m)))
    }

    /// The royal geodesic `R = B_id`.
    pub fn royal() -> Self {
        Geodesic::Bm(Moebius::identity())
    }

    pub fn kind(&self, tol: &Tolerances) -> GeodesicType {
        match self {
            Geodesic::Flat(_) => GeodesicType::Flat,
            Geodesic::Bm(m) => match m.classify(tol) {
                AutClass::Identity => GeodesicType::Royal,
                AutClass::Parabolic => GeodesicType::Exceptional,
                AutClass::Hyperbolic => GeodesicType::PurelyBalanced,
                AutClass::Elliptic => GeodesicType::PurelyUnbalanced,
            },
        }
    }

    pub fn point(&self, z: Complex64) -> GPoint {
        match *self {
            Geodesic::Flat(beta) => GPoint::new_unchecked(beta + beta.conj() * z, z),
            Geodesic::Bm(m) => h_eval(&m, z),
        }
    }

    /// Derivative of the parametrization at `z`.
    pub fn tangent(&self, z: Complex64) -> Vector {
        match *self {
            Geodesic::Flat(beta) => [beta.conj(), ONE],
            Geodesic::Bm(m) => {
                let (mz, dm) = (m.apply(z), m.derivative(z));
                [ONE + dm, mz + z * dm]
            }
        }
    }

    /// The parameter of `λ` if it lies on the geodesic within `point_tol`.
    pub fn parameter_of(&self, lambda: &GPoint, tol: &Tolerances) -> Option<Complex64> {
        match *self {
            Geodesic::Flat(beta) => {
                ((lambda.flat_coordinate() - beta).norm() <= tol.point_tol).then(|| lambda.p())
            }
            Geodesic::Bm(m) if m.is_identity(tol.class_eps) => {
                lambda.is_royal(tol).then(|| 0.5 * lambda.s())
            }
            Geodesic::Bm(m) => {
                let (z1, z2) = lambda.lift();
                [z1, z2]
                    .into_iter()
                    .map(|z| (z, h_eval(&m, z).euclid(lambda)))
                    .filter(|&(_, err)| err <= tol.point_tol)
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .map(|(z, _)| z)
            }
        }
    }

    pub fn contains(&self, lambda: &GPoint, tol: &Tolerances) -> bool {
        self.parameter_of(lambda, tol).is_some()
    }

    /// Image under `γ_b`. Flats go to flats; `γ_b(B_m) = B_{b ∘ m ∘ b⁻¹}`.
    pub fn push(&self, b: &Moebius) -> Geodesic {
        match *self {
            Geodesic::Flat(beta) => {
                let img = apply_aut(b, &GPoint::new_unchecked(beta, Complex64::new(0.0, 0.0)));
                Geodesic::Flat(img.flat_coordinate())
            }
            Geodesic::Bm(m) => Geodesic::Bm(canonical(m.conjugate_by(b))),
        }
    }

    /// Same curve, comparing `m` against both `q` and `q⁻¹`.
    pub fn same_as(&self, other: &Geodesic, eps: f64) -> bool {
        match (self, other) {
            (Geodesic::Flat(a), Geodesic::Flat(b)) => (a - b).norm() <= eps,
            (Geodesic::Bm(m), Geodesic::Bm(q)) => {
                m.approx_eq(q, eps) || m.approx_eq(&q.inverse(), eps)
            }
            _ => false,
        }
    }

    /// Points where the closure of the geodesic meets the royal variety.
    pub fn royal_points(&self, tol: &Tolerances) -> RoyalPoints {
        match *self {
            Geodesic::Flat(beta) => {
                // (β + β̄z)² = 4z
                let [r1, r2] = quadratic::roots(
                    beta.conj() * beta.conj(),
                    Complex64::new(2.0 * (beta.norm_sqr() - 2.0), 0.0),
                    beta * beta,
                );
                let z = if r1.norm() < r2.norm() { r1 } else { r2 };
                RoyalPoints::Points(vec![RoyalPoint {
                    z: 0.5 * (beta + beta.conj() * z),
                }])
            }
            Geodesic::Bm(m) => match m.fixed_points(tol) {
                Err(_) => RoyalPoints::All,
                Ok(pts) => RoyalPoints::Points(pts.into_iter().map(|z| RoyalPoint { z }).collect()),
            },
        }
    }
}

/// Canonical representative of `{m, m⁻¹}`.
fn canonical(m: Moebius) -> Moebius {
    let inv = m.inverse();
    let key = |q: &Moebius| (q.alpha().re, q.alpha().im, arg_2pi(q.tau()));
    let (a, b) = (key(&m), key(&inv));
    if a.partial_cmp(&b) == Some(std::cmp::Ordering::Less) {
        inv
    } else {
        m
    }
}

/// A point `(2z, z²)` of the closure of `R`; `z` may lie on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoyalPoint {
    pub z: Complex64,
}

impl RoyalPoint {
    pub fn s(&self) -> Complex64 {
        2.0 * self.z
    }

    pub fn p(&self) -> Complex64 {
        self.z * self.z
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RoyalPoints {
    /// The geodesic is `R` itself.
    All,
    Points(Vec<RoyalPoint>),
}

/// `h_m(z) = (z + m(z), z m(z))`.
pub fn h_eval(m: &Moebius, z: Complex64) -> GPoint {
    let mz = m.apply(z);
    GPoint::new_unchecked(z + mz, z * mz)
}

/// Endpoints `τ_σ^± = e^{±iθ}` of the arc of admissible `τ` at
/// `(0, -σ²)`, where `tan(θ/2) = 2σ/(1 - σ²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauArc {
    pub sigma: f64,
    pub tau_minus: Complex64,
    pub tau_plus: Complex64,
}

impl TauArc {
    /// Half-angle `θ` of the arc about 1.
    pub fn half_angle(&self) -> f64 {
        self.tau_plus.arg()
    }
}

pub fn tau_arc(sigma: f64) -> Result<TauArc> {
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(GeomError::InvalidParameter(format!("sigma must lie in (0, 1), got {sigma}")));
    }
    let theta = 2.0 * (2.0 * sigma / (1.0 - sigma * sigma)).atan();
    Ok(TauArc {
        sigma,
        tau_minus: Complex64::from_polar(1.0, -theta),
        tau_plus: Complex64::from_polar(1.0, theta),
    })
}

/// An automorphism `b` and `σ ∈ (0, 1)` with `γ_b(λ) = (0, -σ²)`; `b` sends
/// the first lift root to `σ` and the second to `-σ`.
pub fn standard_position(lambda: &GPoint, tol: &Tolerances) -> Result<(Moebius, f64)> {
    if lambda.is_royal(tol) {
        return Err(GeomError::RoyalPoint("royal point has no standard position"));
    }
    let (z1, z2) = lambda.lift();
    // d(σ, -σ) = d(z1, z2): σ is the hyperbolic midpoint of 0 and |b_{z1}(z2)|.
    let delta = Moebius::blaschke(z1).apply(z2).norm();
    let sigma = delta / (1.0 + (1.0 - delta * delta).sqrt());
    let s = Complex64::new(sigma, 0.0);
    let loose = Tolerances {
        match_tol: tol.match_tol.max(1e-6),
        ..*tol
    };
    let b = connecting_aut(z1, s, z2, -s, &loose)
        .ok_or_else(|| GeomError::InvalidParameter("standard position failed".into()))?;
    Ok((b, sigma))
}

/// How a direction at a point relates to the geodesic it determines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DirectionType {
    Flat,
    /// Purely balanced and tangent to the sharp direction (`τ = 1`).
    SharpBalanced,
    PurelyBalanced,
    Exceptional,
    PurelyUnbalanced,
    /// At a royal point, the tangent `(1, z)` of `R`.
    RoyalSharp,
}

impl DirectionType {
    pub fn as_str(&self) -> &'static str {
        match self {
            DirectionType::Flat => "flat",
            DirectionType::SharpBalanced => "sharp-balanced",
            DirectionType::PurelyBalanced => "purely-balanced",
            DirectionType::Exceptional => "exceptional",
            DirectionType::PurelyUnbalanced => "purely-unbalanced",
            DirectionType::RoyalSharp => "royal-sharp",
        }
    }

    pub fn geodesic_type(&self) -> GeodesicType {
        match self {
            DirectionType::Flat => GeodesicType::Flat,
            DirectionType::SharpBalanced | DirectionType::PurelyBalanced => {
                GeodesicType::PurelyBalanced
            }
            DirectionType::Exceptional => GeodesicType::Exceptional,
            DirectionType::PurelyUnbalanced => GeodesicType::PurelyUnbalanced,
            DirectionType::RoyalSharp => GeodesicType::Royal,
        }
    }
}

impl fmt::Display for DirectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// [`direction_type`] together with the standard-position data it used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionReport {
    pub kind: DirectionType,
    /// `τ = (σ + w)/(σ - w)`; `None` at royal points, for the flat direction
    /// and at the pole `w = σ`.
    pub tau: Option<Complex64>,
    /// `σ` of the standard position, `None` at royal points.
    pub sigma: Option<f64>,
}

pub fn direction_type(lambda: &GPoint, v: &Direction, tol: &Tolerances) -> Result<DirectionReport> {
    if lambda.is_royal(tol) {
        let kind = if v.is_parallel(&lambda.flat_direction(), tol.dir_eps) {
            DirectionType::Flat
        } else if v.is_parallel(&Direction::from_unit_first(0.5 * lambda.s()), tol.dir_eps) {
            DirectionType::RoyalSharp
        } else {
            DirectionType::PurelyUnbalanced
        };
        return Ok(DirectionReport { kind, tau: None, sigma: None });
    }
    let (b, sigma) = standard_position(lambda, tol)?;
    let std_v = v.push(&aut_jacobian(&b, lambda));
    let flat = Direction::from_unit_second(Complex64::new(0.0, 0.0));
    let report = |kind, tau| Ok(DirectionReport { kind, tau, sigma: Some(sigma) });
    if std_v.is_parallel(&flat, tol.dir_eps) {
        return report(DirectionType::Flat, None);
    }
    let [v1, v2] = std_v.vector();
    let w = v2 / v1;
    let gap = sigma - w;
    if gap.norm() <= f64::EPSILON * sigma {
        return report(DirectionType::PurelyUnbalanced, None);
    }
    let tau = (sigma + w) / gap;
    Ok(DirectionReport {
        kind: classify_tau(tau, sigma, tol),
        tau: Some(tau),
        sigma: Some(sigma),
    })
}

/// Type of the direction `(1 + τ, -σ(1 - τ))` at `(0, -σ²)`.
pub fn classify_tau(tau: Complex64, sigma: f64, tol: &Tolerances) -> DirectionType {
    if (tau.norm() - 1.0).abs() > tol.circle_tol {
        return DirectionType::PurelyUnbalanced;
    }
    let theta = tau_arc(sigma).map(|a| a.half_angle()).unwrap_or(0.0);
    let phi = tau.arg().abs();
    if (phi - theta).abs() <= tol.arc_tol {
        DirectionType::Exceptional
    } else if phi <= tol.arc_tol {
        DirectionType::SharpBalanced
    } else if phi < theta {
        DirectionType::PurelyBalanced
    } else {
        DirectionType::PurelyUnbalanced
    }
}

/// The direction at `λ` whose standard-position image is
/// `(1 + τ, -σ(1 - τ))`, the tangent of `h_{m_{σ,τ}}` at `σ`.
pub fn direction_from_tau(lambda: &GPoint, tau: Complex64, tol: &Tolerances) -> Result<Direction> {
    let (b, sigma) = standard_position(lambda, tol)?;
    let std_point = apply_aut(&b, lambda);
    let back = aut_jacobian(&b.inverse(), &std_point);
    let v = Direction::new(ONE + tau, -sigma * (ONE - tau))?;
    Ok(v.push(&back))
}

/// `m_{σ,τ} = b_σ ∘ r_τ ∘ b_σ`.
pub fn m_sigma_tau(sigma: f64, tau: Complex64) -> Moebius {
    let b = Moebius::blaschke(Complex64::new(sigma, 0.0));
    b.compose(&Moebius::rotation(tau)).compose(&b)
}

/// Outcome of a construction through given data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectResult {
    pub kind: GeodesicType,
    /// Absent exactly for purely unbalanced data.
    pub geodesic: Option<Geodesic>,
    /// An elliptic automorphism matching the two lifts, when one was found
    /// for purely unbalanced pairs.
    pub witness: Option<Moebius>,
}

impl ConnectResult {
    fn found(kind: GeodesicType, geodesic: Geodesic) -> Self {
        ConnectResult { kind, geodesic: Some(geodesic), witness: None }
    }

    fn unbalanced(witness: Option<Moebius>) -> Self {
        ConnectResult { kind: GeodesicType::PurelyUnbalanced, geodesic: None, witness }
    }
}

/// The unique geodesic through `λ` tangent to `v`.
pub fn through_direction(lambda: &GPoint, v: &Direction, tol: &Tolerances) -> Result<ConnectResult> {
    let report = direction_type(lambda, v, tol)?;
    Ok(match report.kind {
        DirectionType::Flat => {
            ConnectResult::found(GeodesicType::Flat, Geodesic::Flat(lambda.flat_coordinate()))
        }
        DirectionType::RoyalSharp => ConnectResult::found(GeodesicType::Royal, Geodesic::royal()),
        DirectionType::PurelyUnbalanced => ConnectResult::unbalanced(None),
        kind => {
            let sigma = report.sigma.expect("non-royal point");
            let arc = tau_arc(sigma)?;
            let tau = match kind {
                DirectionType::SharpBalanced => ONE,
                DirectionType::Exceptional if report.tau.unwrap().im > 0.0 => arc.tau_plus,
                DirectionType::Exceptional => arc.tau_minus,
                _ => {
                    let t = report.tau.unwrap();
                    t / t.norm()
                }
            };
            let (b, _) = standard_position(lambda, tol)?;
            let m = m_sigma_tau(sigma, tau).conjugate_by(&b.inverse());
            let geodesic = Geodesic::Bm(canonical(m));
            ConnectResult::found(kind.geodesic_type(), geodesic)
        }
    })
}

/// The unique geodesic through two distinct points.
pub fn connect(lambda: &GPoint, mu: &GPoint, tol: &Tolerances) -> Result<ConnectResult> {
    if lambda.euclid(mu) <= tol.point_tol {
        return Err(GeomError::EqualPoints);
    }
    if lambda.is_royal(tol) && mu.is_royal(tol) {
        return Ok(ConnectResult::found(GeodesicType::Royal, Geodesic::royal()));
    }
    let beta = lambda.flat_coordinate();
    if (beta - mu.flat_coordinate()).norm() <= tol.point_tol {
        return Ok(ConnectResult::found(GeodesicType::Flat, Geodesic::Flat(beta)));
    }
    let (z1, z2) = lambda.lift();
    let (w1, w2) = mu.lift();
    let mut witness = None;
    for (a, b) in [(w1, w2), (w2, w1)] {
        let Some(m) = connecting_aut(z1, z2, a, b, tol) else {
            continue;
        };
        match m.classify(tol) {
            AutClass::Elliptic => witness = witness.or(Some(m)),
            _ => {
                let geodesic = Geodesic::Bm(canonical(m));
                if geodesic.contains(lambda, tol) && geodesic.contains(mu, tol) {
                    return Ok(ConnectResult::found(geodesic.kind(tol), geodesic));
                }
            }
        }
    }
    Ok(ConnectResult::unbalanced(witness))
}
