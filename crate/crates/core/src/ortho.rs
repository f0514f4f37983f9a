//! Geodesics orthogonal to a flat geodesic `F^β`, the projection of a point
//! onto `F^β`, and the reflection test for critical pairs.
//!
//! Everything is computed after moving `F^β` to `F⁰` with [`to_f0`]. There
//! the leaf through `μ = π(z1, z2)` is `B_{b_γ}` with `z1 - z2 = γ - γ̄ z1 z2`,
//! and it meets `F⁰` at `(0, -α²)`, `α` the hyperbolic midpoint of 0 and `γ`.

use num_complex::Complex64;

use crate::disc::{hyperbolic_midpoint, reflect, AutClass, Moebius};
use crate::domain::{apply_aut, sin_angle, to_f0, GPoint};
use crate::extremal::phi;
use crate::geodesic::Geodesic;
use crate::quadratic;
use crate::{GeomError, Result, Tolerances};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The geodesic through a point that meets `F^β` orthogonally.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoLeaf {
    pub flat: Complex64,
    pub geodesic: Geodesic,
    /// Intersection with `F^β`.
    pub foot: GPoint,
}

pub fn orthogonal_geodesic(beta: Complex64, mu: &GPoint, tol: &Tolerances) -> Result<OrthoLeaf> {
    if !(beta.norm() < 1.0) {
        return Err(GeomError::OutsideDisc(beta.to_string()));
    }
    let g = to_f0(beta);
    let back = g.inverse();
    let moved = apply_aut(&g, mu);
    let (geodesic, foot) = if moved.is_royal(tol) {
        (Geodesic::royal(), GPoint::new_unchecked(ZERO, ZERO))
    } else {
        let (z1, z2) = moved.lift();
        let gamma = solve_leaf_parameter(z1 - z2, z1 * z2);
        let alpha = hyperbolic_midpoint(gamma);
        (
            Geodesic::bm(Moebius::blaschke(gamma), tol)?,
            GPoint::new_unchecked(ZERO, -alpha * alpha),
        )
    };
    Ok(OrthoLeaf {
        flat: beta,
        geodesic: geodesic.push(&back),
        foot: apply_aut(&back, &foot),
    })
}

/// Solves `d = γ - γ̄q` for `γ`. In real coordinates this is
/// `[[1 - q_r, -q_i], [-q_i, 1 + q_r]]·(γ_r, γ_i) = (d_r, d_i)`, whose
/// determinant `1 - |q|²` is positive for `|q| < 1`.
fn solve_leaf_parameter(d: Complex64, q: Complex64) -> Complex64 {
    let det = 1.0 - q.norm_sqr();
    let x = ((1.0 + q.re) * d.re + q.im * d.im) / det;
    let y = (q.im * d.re + (1.0 - q.re) * d.im) / det;
    Complex64::new(x, y)
}

/// Whether `geo` meets `F^β` with tangent equal to the sharp direction there.
///
/// After conjugating to `F⁰` with `m = r_τ ∘ b_α`, the points of `B_m` on
/// `F⁰` are `h_m(z)` with `m(z) = -z`, i.e. the disc roots of
/// `ᾱz² - (1 + τ)z + τα = 0`.
pub fn is_orthogonal(geo: &Geodesic, beta: Complex64, tol: &Tolerances) -> bool {
    let m = match geo {
        Geodesic::Flat(_) => return false,
        Geodesic::Bm(m) => *m,
    };
    if m.classify(tol) == AutClass::Identity {
        return true;
    }
    let m = m.conjugate_by(&to_f0(beta));
    let (a, t) = (m.alpha(), m.tau());
    quadratic::roots(a.conj(), -(ONE + t), t * a)
        .into_iter()
        .filter(|z| z.norm() < 1.0)
        .any(|z| {
            let dm = m.derivative(z);
            let tangent = [ONE + dm, m.apply(z) + z * dm];
            sin_angle(tangent, [ONE, ZERO]) <= tol.dir_eps
        })
}

/// The closest point of `F^β` to `μ`, which is the foot of its orthogonal
/// leaf.
pub fn closest_point(beta: Complex64, mu: &GPoint, tol: &Tolerances) -> Result<GPoint> {
    if (mu.flat_coordinate() - beta).norm() <= tol.point_tol {
        return Ok(*mu);
    }
    Ok(orthogonal_geodesic(beta, mu, tol)?.foot)
}

/// The reflection test: with `η1, η2` the fixed points of `m` and
/// `w_i = η_i Φ_{η̄_i}(μ)`, checks `reflect(p0, w1) = w2`.
///
/// `(0, p0)` and `μ` must lie on `B_m`, and `m` must be hyperbolic. The test
/// succeeds exactly when `m` is irrotational.
pub fn critical_pair_check(p0: Complex64, mu: &GPoint, m: &Moebius, tol: &Tolerances) -> Result<bool> {
    if m.classify(tol) != AutClass::Hyperbolic {
        return Err(GeomError::NotHyperbolic);
    }
    let geo = Geodesic::bm(*m, tol)?;
    let base = GPoint::new(ZERO, p0)?;
    let loose = Tolerances {
        point_tol: tol.point_tol.max(1e-8),
        ..*tol
    };
    if !geo.contains(&base, &loose) || !geo.contains(mu, &loose) {
        return Err(GeomError::NotOnGeodesic);
    }
    let fixed = m.fixed_points(tol)?;
    let w: Vec<Complex64> = fixed.iter().map(|eta| eta * phi(eta.conj(), mu)).collect();
    Ok((reflect(p0, w[0]) - w[1]).norm() <= tol.match_tol)
}
