#![allow(dead_code)]

use std::f64::consts::TAU;
use std::process::Command;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use symbidisc::disc::Moebius;
use symbidisc::domain::GPoint;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symbidisc"));
    cmd.args(args).env_remove("SYMB_EPS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("failed to launch symbidisc");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn disc_point(rng: &mut StdRng, max: f64) -> Complex64 {
    Complex64::from_polar(max * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
}

pub fn unit(rng: &mut StdRng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(0.0..TAU))
}

pub fn gpoint(rng: &mut StdRng, max: f64) -> GPoint {
    GPoint::symmetrize(disc_point(rng, max), disc_point(rng, max)).unwrap()
}

pub fn automorphism(rng: &mut StdRng, max: f64) -> Moebius {
    Moebius::new(disc_point(rng, max), unit(rng)).unwrap()
}

/// Hyperbolic `r_τ ∘ b_α`: `|τ - 1| < 2|α|`, kept away from the parabolic
/// boundary by the factor `margin < 1`.
pub fn hyperbolic(rng: &mut StdRng, margin: f64) -> Moebius {
    let a: f64 = rng.gen_range(0.1..0.9);
    let alpha = Complex64::from_polar(a, rng.gen_range(0.0..TAU));
    let half = a.asin() * margin * rng.gen_range(-1.0..1.0);
    Moebius::new(alpha, Complex64::from_polar(1.0, 2.0 * half)).unwrap()
}

/// Parabolic `r_τ ∘ b_α` with `|τ - 1| = 2|α|`.
pub fn parabolic(rng: &mut StdRng) -> Moebius {
    let a: f64 = rng.gen_range(0.1..0.9);
    let alpha = Complex64::from_polar(a, rng.gen_range(0.0..TAU));
    let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
    Moebius::new(alpha, Complex64::from_polar(1.0, sign * 2.0 * a.asin())).unwrap()
}
