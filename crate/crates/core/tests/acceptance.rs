//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::Instant;

use common::{automorphism, disc_point, gpoint, hyperbolic, parabolic, rng, run_cli, unit};
use num_complex::Complex64;
use rand::Rng;
use symbidisc::disc::{poincare_distance, reflect, AutClass, DiscGeodesic, Moebius};
use symbidisc::distinguished::{chart, unchart, xi_curve};
use symbidisc::domain::{apply_aut, aut_jacobian, sin_angle, Datum, GPoint};
use symbidisc::extremal::{caratheodory, phi};
use symbidisc::geodesic::{
    connect, direction_from_tau, direction_type, h_eval, m_sigma_tau, tau_arc, through_direction,
    DirectionType, Geodesic, GeodesicType, RoyalPoints,
};
use symbidisc::ortho::{closest_point, critical_pair_check, is_orthogonal, orthogonal_geodesic};
use symbidisc::{json, Tolerances};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn r(x: f64) -> Complex64 {
    c(x, 0.0)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tol() -> Tolerances {
    Tolerances::default()
}

fn d_g(a: GPoint, b: GPoint) -> f64 {
    caratheodory(&Datum::Discrete(a, b), &tol()).value
}

fn closest_point_exactness() -> Outcome {
    let start = Instant::now();
    let t = tol();
    let mu = GPoint::symmetrize(r(0.2), r(-5.0 / 7.0)).unwrap();
    let foot = closest_point(r(0.0), &mu, &t).map_err(|e| e.to_string())?;
    let exact = GPoint::new(r(0.0), r(-0.25)).unwrap();
    let closed_err = foot.euclid(&exact);
    ensure(closed_err <= 1e-9, || format!("foot {foot} is {closed_err:.1e} from (0, -0.25)"))?;

    // Independent oracle: grid over p ∈ D, then pattern search on d_G((0, p), μ).
    let objective = |p: Complex64| {
        if p.norm() >= 0.999 {
            f64::INFINITY
        } else {
            d_g(GPoint::new(r(0.0), p).unwrap(), mu)
        }
    };
    let n = 200;
    let mut best = (f64::INFINITY, r(0.0));
    for i in 0..n {
        for j in 0..n {
            let p = c(-1.0 + 2.0 * (i as f64 + 0.5) / n as f64, -1.0 + 2.0 * (j as f64 + 0.5) / n as f64);
            let v = objective(p);
            if v < best.0 {
                best = (v, p);
            }
        }
    }
    let mut step = 2.0 / n as f64;
    while step > 1e-10 {
        let mut moved = false;
        for d in [r(step), r(-step), c(0.0, step), c(0.0, -step)] {
            let v = objective(best.1 + d);
            if v < best.0 {
                best = (v, best.1 + d);
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    let oracle_err = (best.1 - foot.p()).norm().max(foot.s().norm());
    let secs = start.elapsed().as_secs_f64();
    ensure(oracle_err <= 1e-6, || format!("oracle minimizer {} vs foot {foot}: {oracle_err:.1e}", best.1))?;
    ensure(secs < 10.0, || format!("took {secs:.1} s"))?;
    Ok(format!("closed-form error {closed_err:.1e}, oracle error {oracle_err:.1e}, {secs:.2} s"))
}

fn lempert_equality() -> Outcome {
    let mut g = rng(2);
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let m = match k % 4 {
            0 => parabolic(&mut g),
            1 => Moebius::identity(),
            _ => hyperbolic(&mut g, 1.0),
        };
        let (z, w) = (disc_point(&mut g, 0.9), disc_point(&mut g, 0.9));
        let err = (d_g(h_eval(&m, z), h_eval(&m, w)) - poincare_distance(z, w)).abs();
        worst = worst.max(err);
    }
    ensure(worst <= 1e-7, || format!("max deviation {worst:.1e}"))?;
    Ok(format!("max deviation {worst:.1e} over 100 pairs"))
}

fn angle_gap(a: Complex64, b: Complex64) -> f64 {
    (a / b).arg().abs()
}

fn maximizer_law() -> Outcome {
    let mut g = rng(3);
    let t = tol();
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let m = hyperbolic(&mut g, 0.9);
        let (z, w) = (disc_point(&mut g, 0.85), disc_point(&mut g, 0.85));
        let res = caratheodory(&Datum::Discrete(h_eval(&m, z), h_eval(&m, w)), &t);
        let eta = m.fixed_points(&t).map_err(|e| e.to_string())?;
        ensure(res.maximizers.len() == 2, || format!("{} maximizers for {m:?}", res.maximizers.len()))?;
        for e in eta {
            let gap = res
                .maximizers
                .iter()
                .map(|&o| angle_gap(o, e.conj()))
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(gap);
        }
    }
    ensure(worst <= 1e-5, || format!("max angular error {worst:.1e}"))?;
    Ok(format!("20 geodesics, max angular error {worst:.1e}"))
}

fn reflection_criterion() -> Outcome {
    let t = tol();
    let mu = GPoint::new(r(-18.0 / 35.0), r(-1.0 / 7.0)).unwrap();
    let w1 = phi(r(1.0), &mu);
    let w2 = -phi(r(-1.0), &mu);
    let chain = [
        (w1 - r(1.0 / 11.0)).norm(),
        (w2 - r(-7.0 / 13.0)).norm(),
        (reflect(r(-0.25), w1) - r(-7.0 / 13.0)).norm(),
    ];
    let chain_err = chain.iter().copied().fold(0.0, f64::max);
    ensure(chain_err <= 1e-12, || format!("rational chain off by {chain_err:.1e}"))?;

    let mut g = rng(4);
    let mut irrotational = 0;
    for k in 0..50 {
        let sigma = g.gen_range(0.1..0.9);
        let theta = tau_arc(sigma).unwrap().half_angle();
        let tau = if k % 3 == 0 { r(1.0) } else { Complex64::from_polar(1.0, theta * g.gen_range(-0.95..0.95)) };
        // A rotation keeps F⁰ and moves (0, -σ²) to (0, -ρ²σ²).
        let rot = Moebius::rotation(unit(&mut g));
        let m = m_sigma_tau(sigma, tau).conjugate_by(&rot);
        let z = loop {
            let z = disc_point(&mut g, 0.9);
            if (z - rot.apply(r(sigma))).norm() > 1e-3 && (z - rot.apply(r(-sigma))).norm() > 1e-3 {
                break z;
            }
        };
        let p0 = -rot.tau() * rot.tau() * sigma * sigma;
        let got = critical_pair_check(p0, &h_eval(&m, z), &m, &t).map_err(|e| e.to_string())?;
        let expected = m.is_irrotational(&t);
        irrotational += expected as usize;
        ensure(got == expected, || format!("check {got} but irrotational {expected} for {m:?}"))?;
    }
    Ok(format!("chain error {chain_err:.1e}; 50 maps agree ({irrotational} irrotational)"))
}

fn orthogonal_foliation() -> Outcome {
    let mut g = rng(5);
    let t = tol();
    let loose = Tolerances { point_tol: 1e-8, dir_eps: 1e-7, ..t };
    for _ in 0..100 {
        let beta = disc_point(&mut g, 0.9);
        let mu = gpoint(&mut g, 0.95);
        let leaf = orthogonal_geodesic(beta, &mu, &t).map_err(|e| e.to_string())?;
        ensure((leaf.foot.flat_coordinate() - beta).norm() < 1e-10, || "foot off the flat".into())?;
        ensure(mu.is_royal(&t) || leaf.geodesic.contains(&mu, &loose), || format!("{mu} not on its leaf"))?;
        ensure(is_orthogonal(&leaf.geodesic, beta, &loose), || "leaf not orthogonal".into())?;
        if leaf.geodesic.kind(&t) != GeodesicType::Royal {
            // Uniqueness: the sharp geodesic through the foot is the leaf.
            let sharp = through_direction(&leaf.foot, &leaf.foot.sharp_direction(), &t)
                .map_err(|e| e.to_string())?;
            let same = sharp.geodesic.is_some_and(|s| s.same_as(&leaf.geodesic, 1e-7));
            ensure(same, || format!("second leaf through {mu}"))?;
        }
    }
    for _ in 0..50 {
        let (m1, m2) = (
            Moebius::blaschke(disc_point(&mut g, 0.95)),
            Moebius::blaschke(disc_point(&mut g, 0.95)),
        );
        for q in [m2.inverse().compose(&m1), m2.compose(&m1)] {
            ensure(q.classify(&t) != AutClass::Elliptic, || format!("elliptic composite {q:?}"))?;
        }
    }
    Ok("100 points with one leaf each; 50 irrotational pairs compose non-elliptically".into())
}

fn sharp_equals_xi() -> Outcome {
    let mut g = rng(6);
    let t = tol();
    let (mut on_worst, mut off_best): (f64, f64) = (0.0, f64::INFINITY);
    let mut below = 0;
    for _ in 0..20 {
        let m = hyperbolic(&mut g, 0.9);
        let base = Geodesic::Bm(m);
        let xi = xi_curve(&base, &t).map_err(|e| e.to_string())?;
        for k in 0..20 {
            let x = -0.95 + 1.9 * (k as f64 + 0.5) / 20.0;
            let l = xi.point(x);
            on_worst = on_worst.max(sin_angle(xi.tangent(x), l.sharp_direction().vector()));

            let arc: &DiscGeodesic = xi.arc();
            let z = loop {
                let w = disc_point(&mut g, 0.9);
                let z = arc.map().apply(w);
                if arc.distance_to(z) >= 0.1 {
                    break z;
                }
            };
            let l = h_eval(&m, z);
            let angle = sin_angle(base.tangent(z), l.sharp_direction().vector());
            below += (angle <= 1e-3) as usize;
            off_best = off_best.min(angle);
        }
    }
    ensure(on_worst < 1e-8, || format!("on-curve angle {on_worst:.1e}"))?;
    ensure(off_best > 1e-3, || {
        format!("on-curve max {on_worst:.1e}; {below} of 400 off-curve angles <= 1e-3, min {off_best:.1e}")
    })?;
    Ok(format!("max angle on Ξ {on_worst:.1e}, min angle off Ξ {off_best:.1e}"))
}

fn chart_round_trip() -> Outcome {
    let mut g = rng(7);
    let t = tol();
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let l = gpoint(&mut g, 0.95);
        let coord = chart(&l, &t).map_err(|e| format!("chart({l}): {e}"))?;
        let back = unchart(&coord).map_err(|e| e.to_string())?;
        let err = [(back.s() - l.s()).re, (back.s() - l.s()).im, (back.p() - l.p()).re, (back.p() - l.p()).im]
            .iter()
            .fold(0.0f64, |a, x| a.max(x.abs()));
        worst = worst.max(err);
    }
    ensure(worst < 1e-8, || format!("max componentwise error {worst:.1e}"))?;
    Ok(format!("max componentwise error {worst:.1e} over 100 points"))
}

fn covariance() -> Outcome {
    let mut g = rng(8);
    let (mut dist, mut dirs): (f64, f64) = (0.0, 0.0);
    for _ in 0..100 {
        let b = automorphism(&mut g, 0.8);
        let (l, mu) = (gpoint(&mut g, 0.9), gpoint(&mut g, 0.9));
        let before = d_g(l, mu);
        let after = d_g(apply_aut(&b, &l), apply_aut(&b, &mu));
        dist = dist.max((before - after).abs());
        let j = aut_jacobian(&b, &l);
        let img = apply_aut(&b, &l);
        dirs = dirs
            .max(l.sharp_direction().push(&j).sin_angle(&img.sharp_direction()))
            .max(l.flat_direction().push(&j).sin_angle(&img.flat_direction()));
    }
    ensure(dist <= 1e-7, || format!("distance changed by {dist:.1e}"))?;
    ensure(dirs <= 1e-7, || format!("direction off by {dirs:.1e}"))?;
    Ok(format!("distance drift {dist:.1e}, direction drift {dirs:.1e}"))
}

fn classification_consistency() -> Outcome {
    let mut g = rng(9);
    let t = tol();
    let mut seen = std::collections::BTreeMap::new();
    for k in 0..100 {
        let (z, w) = (disc_point(&mut g, 0.85), disc_point(&mut g, 0.85));
        let (a, b) = match k % 5 {
            0 => (gpoint(&mut g, 0.9), gpoint(&mut g, 0.9)),
            1 => {
                let m = hyperbolic(&mut g, 0.9);
                (h_eval(&m, z), h_eval(&m, w))
            }
            2 => {
                let f = Geodesic::Flat(disc_point(&mut g, 0.9));
                (f.point(z), f.point(w))
            }
            3 => {
                let m = parabolic(&mut g);
                (h_eval(&m, z), h_eval(&m, w))
            }
            _ => (GPoint::royal(z), GPoint::royal(w)),
        };
        let res = connect(&a, &b, &t).map_err(|e| e.to_string())?;
        let ext = caratheodory(&Datum::Discrete(a, b), &t);
        *seen.entry(res.kind.as_str()).or_insert(0) += 1;
        let two = ext.maximizers.len() == 2;
        ensure(two == (res.kind == GeodesicType::PurelyBalanced), || {
            format!("{} with {} maximizers", res.kind, ext.maximizers.len())
        })?;
        let flat_like = matches!(res.kind, GeodesicType::Flat | GeodesicType::Royal);
        ensure(flat_like == ext.constant_objective, || {
            format!("{} with constant objective {}", res.kind, ext.constant_objective)
        })?;
        let royal = res.geodesic.map(|geo| geo.royal_points(&t));
        let edge = |pts: &RoyalPoints, n: usize, on_edge: bool| match pts {
            RoyalPoints::Points(v) => {
                v.len() == n && v.iter().all(|q| ((q.p().norm() - 1.0).abs() < 1e-9) == on_edge)
            }
            RoyalPoints::All => false,
        };
        let ok = match (res.kind, &royal) {
            (GeodesicType::PurelyBalanced, Some(p)) => edge(p, 2, true),
            (GeodesicType::Exceptional, Some(p)) => edge(p, 1, true),
            (GeodesicType::Flat, Some(p)) => edge(p, 1, false),
            (GeodesicType::Royal, Some(p)) => *p == RoyalPoints::All,
            (GeodesicType::PurelyUnbalanced, None) => ext.maximizers.len() == 1,
            _ => false,
        };
        ensure(ok, || format!("{} has royal points {royal:?}", res.kind))?;
    }
    Ok(format!("100 pairs consistent: {seen:?}"))
}

fn direction_sweep() -> Outcome {
    let t = tol();
    let l = GPoint::new(r(0.0), r(-0.25)).unwrap();
    let arc = tau_arc(0.5).unwrap();
    let theta = arc.half_angle();
    let marks = [0.0, theta, std::f64::consts::PI, TAU - theta, TAU];
    let mut kinds = Vec::new();
    for seg in 0..4 {
        for j in 0..180 {
            let angle = marks[seg] + (marks[seg + 1] - marks[seg]) * j as f64 / 180.0;
            let v = direction_from_tau(&l, Complex64::from_polar(1.0, angle), &t).map_err(|e| e.to_string())?;
            kinds.push(direction_type(&l, &v, &t).map_err(|e| e.to_string())?);
        }
    }
    let count = |k: DirectionType| kinds.iter().filter(|x| x.kind == k).count();
    let counts = [
        count(DirectionType::Flat),
        count(DirectionType::SharpBalanced),
        count(DirectionType::Exceptional),
        count(DirectionType::PurelyBalanced),
        count(DirectionType::PurelyUnbalanced),
    ];
    ensure(counts[..3] == [1, 1, 2], || format!("flat/sharp/exceptional counts {:?}", &counts[..3]))?;
    ensure(counts[3] + counts[4] == 716, || format!("counts {counts:?}"))?;
    let targets = [c(-7.0, 24.0) / 25.0, c(-7.0, -24.0) / 25.0];
    for rep in kinds.iter().filter(|x| x.kind == DirectionType::Exceptional) {
        let tau = rep.tau.ok_or("exceptional without τ")?;
        let err = targets.iter().map(|x| (tau - x).norm()).fold(f64::INFINITY, f64::min);
        ensure(err <= 1e-8, || format!("exceptional τ {tau} off by {err:.1e}"))?;
    }
    let balanced: Vec<bool> = kinds
        .iter()
        .map(|x| matches!(x.kind, DirectionType::PurelyBalanced | DirectionType::SharpBalanced))
        .collect();
    let switches = (0..balanced.len()).filter(|&i| balanced[i] != balanced[(i + 1) % balanced.len()]).count();
    ensure(switches == 2, || format!("balanced directions split into {} arcs", switches / 2))?;
    // Directions off the τ circle are purely unbalanced.
    for v in [(r(1.0), c(0.1, 0.2)), (r(1.0), r(-0.3)), (r(1.0), c(-0.2, 0.9))] {
        let d = symbidisc::domain::Direction::new(v.0, v.1).unwrap();
        let k = direction_type(&l, &d, &t).map_err(|e| e.to_string())?.kind;
        ensure(k == DirectionType::PurelyUnbalanced, || format!("{v:?} classified {k}"))?;
    }
    Ok(format!(
        "720 directions: flat {}, sharp {}, exceptional {}, balanced {}, unbalanced {}",
        counts[0], counts[1], counts[2], counts[3], counts[4]
    ))
}

fn cli_smoke() -> Outcome {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance-slice.svg");
    let out = run_cli(&["plot-real-slice", "--out", path.to_str().unwrap()], &[]);
    ensure(out.code == 0, || format!("plot-real-slice exited {}: {}", out.code, out.stderr))?;
    let svg = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let doc = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
    let curves = |id: &str| {
        doc.descendants()
            .find(|n| n.has_tag_name("g") && n.attribute("id") == Some(id))
            .map(|g| g.children().filter(|n| n.has_tag_name("polyline") || n.has_tag_name("path")).count())
            .unwrap_or(0)
    };
    let (royal, leaves) = (curves("royal"), curves("ortho-leaves"));
    ensure(royal >= 1, || "no royal parabola".into())?;
    ensure(leaves >= 10, || format!("only {leaves} leaf curves"))?;

    let a = GPoint::new(c(0.3, 0.1), c(-0.2, 0.05)).unwrap();
    let b = GPoint::new(c(-0.4, 0.5), c(0.1, -0.3)).unwrap();
    let lib = json::extremal(&caratheodory(&Datum::Discrete(a, b), &tol()));
    let out = run_cli(&["dist", "--a", &json::point(&a).to_string(), "--b", &json::point(&b).to_string()], &[]);
    let cli: serde_json::Value = serde_json::from_str(out.stdout.trim()).map_err(|e| e.to_string())?;
    ensure(cli == lib, || format!("CLI {cli} vs library {lib}"))?;
    Ok(format!("SVG parsed with {leaves} leaves; dist JSON identical"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("closest-point exactness", closest_point_exactness),
        ("Lempert equality", lempert_equality),
        ("extremal maximizer law", maximizer_law),
        ("reflection criterion", reflection_criterion),
        ("orthogonal foliation", orthogonal_foliation),
        ("sharp points are the distinguished curve", sharp_equals_xi),
        ("chart round trip", chart_round_trip),
        ("covariance and invariance", covariance),
        ("classification consistency", classification_consistency),
        ("direction sweep", direction_sweep),
        ("CLI and SVG smoke", cli_smoke),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
