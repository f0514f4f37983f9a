//! JSON encoding of the library types. Complex numbers are `[re, im]`
//! arrays, points are `{"s": [..], "p": [..]}`.
//!
//! Floats are written in shortest round-trip form, so parsing an emitted
//! document recovers every value bit for bit.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::disc::Moebius;
use crate::distinguished::ChartCoord;
use crate::domain::GPoint;
use crate::extremal::ExtremalResult;
use crate::geodesic::{ConnectResult, DirectionReport, Geodesic};
use crate::ortho::OrthoLeaf;
use crate::Tolerances;

/// Malformed input text.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{0}")]
pub struct ParseError(pub String);

fn fail<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

pub fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn point(l: &GPoint) -> Value {
    json!({ "s": complex(l.s()), "p": complex(l.p()) })
}

pub fn automorphism(m: &Moebius) -> Value {
    json!({ "alpha": complex(m.alpha()), "tau": complex(m.tau()) })
}

pub fn geodesic(g: &Geodesic, tol: &Tolerances) -> Value {
    let kind = g.kind(tol).as_str();
    match g {
        Geodesic::Flat(beta) => json!({ "kind": "flat", "beta": complex(*beta), "type": kind }),
        Geodesic::Bm(m) => json!({
            "kind": "bm",
            "alpha": complex(m.alpha()),
            "tau": complex(m.tau()),
            "type": kind,
        }),
    }
}

pub fn extremal(res: &ExtremalResult) -> Value {
    let mut flags = Vec::new();
    if res.constant_objective {
        flags.push("constant_objective");
    }
    if res.degenerate {
        flags.push("degenerate");
    }
    json!({
        "value": res.value,
        "maximizers": res.maximizers.iter().map(|&w| complex(w)).collect::<Vec<_>>(),
        "flags": flags,
    })
}

pub fn connect(res: &ConnectResult, tol: &Tolerances) -> Value {
    json!({
        "type": res.kind.as_str(),
        "geodesic": res.geodesic.map(|g| geodesic(&g, tol)),
        "witness": res.witness.map(|m| automorphism(&m)),
    })
}

pub fn direction(report: &DirectionReport, through: &ConnectResult, tol: &Tolerances) -> Value {
    json!({
        "type": report.kind.as_str(),
        "tau": report.tau.map(complex),
        "sigma": report.sigma,
        "geodesic": through.geodesic.map(|g| geodesic(&g, tol)),
    })
}

pub fn leaf(l: &OrthoLeaf, tol: &Tolerances) -> Value {
    json!({
        "beta": complex(l.flat),
        "foot": point(&l.foot),
        "leaf": geodesic(&l.geodesic, tol),
    })
}

pub fn chart(c: &ChartCoord) -> Value {
    json!({ "eta": [complex(c.eta.0), complex(c.eta.1)], "t": c.t, "u": c.u })
}

fn number(v: &Value, what: &str) -> Result<f64, ParseError> {
    match v.as_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => fail(format!("{what}: expected a finite number, got {v}")),
    }
}

/// `[re, im]` or a bare real number.
pub fn complex_from_value(v: &Value) -> Result<Complex64, ParseError> {
    match v {
        Value::Array(parts) if parts.len() == 2 => {
            Ok(Complex64::new(number(&parts[0], "real part")?, number(&parts[1], "imaginary part")?))
        }
        Value::Number(_) => Ok(Complex64::new(number(v, "real number")?, 0.0)),
        _ => fail(format!("expected [re, im], got {v}")),
    }
}

fn parse_value(text: &str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError(format!("invalid JSON {text:?}: {e}")))
}

pub fn parse_complex(text: &str) -> Result<Complex64, ParseError> {
    complex_from_value(&parse_value(text)?)
}

/// A pair of complex numbers, `[[a_re, a_im], [b_re, b_im]]`.
pub fn parse_pair(text: &str) -> Result<(Complex64, Complex64), ParseError> {
    match parse_value(text)? {
        Value::Array(items) if items.len() == 2 => {
            Ok((complex_from_value(&items[0])?, complex_from_value(&items[1])?))
        }
        other => fail(format!("expected a pair [[re, im], [re, im]], got {other}")),
    }
}

/// Coordinates `(s, p)` as `[[s_re, s_im], [p_re, p_im]]` or
/// `{"s": [..], "p": [..]}`. Membership in `G` is left to the caller.
pub fn parse_point_coords(text: &str) -> Result<(Complex64, Complex64), ParseError> {
    match parse_value(text)? {
        Value::Object(map) => {
            let get = |k: &str| {
                map.get(k)
                    .ok_or_else(|| ParseError(format!("missing field {k:?}")))
                    .and_then(complex_from_value)
            };
            Ok((get("s")?, get("p")?))
        }
        Value::Array(_) => parse_pair(text),
        other => fail(format!("expected a point, got {other}")),
    }
}
