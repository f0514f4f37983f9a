//! Computable hyperbolic geometry of the symmetrized bidisc
//! `G = {(z1 + z2, z1 z2) : z1, z2 in D}`.
//!
//! The crate is layered bottom-up:
//!
//! - [`disc`]: Poincaré disc arithmetic and the automorphism group `Aut D`.
//! - [`domain`]: points of `G`, the action `γ_b` of `Aut D` on `G`, and the
//!   flat and sharp direction fields.
//! - [`extremal`]: the Carathéodory extremal engine over the family `Φ_ω`,
//!   which yields the hyperbolic distance `d_G`.
//! - [`geodesic`]: complex geodesics (`F^β`, `B_m`), their construction and
//!   five-type classification.
//! - [`ortho`]: geodesics orthogonal to a flat geodesic and closest-point
//!   projection onto it.
//! - [`distinguished`]: sharp points, the distinguished real geodesics `Ξ_B`
//!   and the chart of `G \ R`.
//! - [`cli`] and [`plot`]: the command-line surface and SVG rendering.

// `!(x < y)` is used on purpose so that NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod disc;
pub mod distinguished;
pub mod domain;
mod error;
pub mod extremal;
pub mod geodesic;
pub mod json;
pub mod ortho;
pub mod plot;
mod quadratic;
mod tol;

pub use error::{GeomError, Result};
pub use num_complex::Complex64;
pub use tol::Tolerances;
