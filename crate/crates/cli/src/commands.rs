use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use cuoco_core::checks::{check_triangle, random_triangles, summarize};
use cuoco_core::circles::{circumcircle, incircle, measured_tangent_lengths};
use cuoco_core::cosine_law::{euclid_defect, verify_cosine_identity};
use cuoco_core::cuoco::{
    build, derive_cosine_theorem, panel_area_trig, similarity_check, verify_pairs, CuocoDecomposition, Pair,
};
use cuoco_core::figure::{render, FigureData, FigureKind, FigureSpec};
use cuoco_core::geometry::{classify, metrics, RIGHT_ANGLE_EPS};
use cuoco_core::three_sum::{self, InterpretOptions, Interpretation, InterpretationReport, ThreeSum};
use cuoco_core::{Point, Triangle, Vertex};

use crate::report::header;
use crate::{Failure, TriangleArgs};

fn point(p: Point) -> Value {
    json!([p.x, p.y])
}

fn per_vertex<F: Fn(Vertex) -> Value>(f: F) -> Value {
    Vertex::ALL
        .iter()
        .map(|&v| (v.name().to_string(), f(v)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn per_side<F: Fn(Vertex) -> Value>(f: F) -> Value {
    Vertex::ALL
        .iter()
        .map(|&v| (v.side_name().to_string(), f(v)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn triangle_json(t: &Triangle) -> Value {
    let m = metrics(t);
    let class = classify(&m, RIGHT_ANGLE_EPS);
    json!({
        "vertices": per_vertex(|v| point(t.vertex(v))),
        "sides": per_side(|v| m.side(v).into()),
        "angles_rad": per_vertex(|v| m.angle(v).into()),
        "angles_deg": per_vertex(|v| m.angle(v).to_degrees().into()),
        "area": m.area,
        "classification": class.name(),
        "classified_vertex": class.vertex().map(|v| v.name()),
    })
}

fn panels_json(d: &CuocoDecomposition) -> Value {
    d.panels
        .iter()
        .map(|p| {
            json!({
                "label": p.label.name(),
                "host": p.host.side_name(),
                "signed_area": p.signed_area,
                "within_host": d.panel_within_host(p.label, 1e-9),
            })
        })
        .collect()
}

/// Runs every check on one triangle. Passes iff every check passes.
pub fn verify(t: &Triangle, tol: f64) -> (Value, bool) {
    let m = metrics(t);
    let class = classify(&m, RIGHT_ANGLE_EPS);
    let d = build(t);
    let sq_scale = 1f64.max(m.a * m.a).max(m.b * m.b).max(m.c * m.c);

    let cosine = verify_cosine_identity(&m, tol);
    let pairs = verify_pairs(&d, tol);
    let derivation = derive_cosine_theorem(&d);
    let checks = check_triangle(t, tol);
    let all_pass = checks.iter().all(|c| c.pass);

    let mut r = header("verify");
    r.insert("tolerance".into(), tol.into());
    r.insert("triangle".into(), triangle_json(t));
    r.insert("classification".into(), class.name().into());
    r.insert("pair_areas".into(), json!(d.pair_areas.to_array()));
    r.insert(
        "pair_areas_trig".into(),
        json!(Pair::ALL.map(|p| panel_area_trig(p, &m))),
    );
    r.insert("panels".into(), panels_json(&d));
    r.insert(
        "cosine_identity".into(),
        json!({
            "residuals": cosine.residuals,
            "max_relative": cosine.max_relative(),
            "pass": cosine.pass,
        }),
    );
    r.insert(
        "euclid_defect".into(),
        Vertex::ALL
            .iter()
            .map(|&v| {
                let e = euclid_defect(t, v);
                json!({
                    "vertex": v.name(),
                    "projection": e.projection,
                    "defect": e.defect,
                    "residual": e.residual,
                    "pass": e.residual.abs() <= tol * e.opposite_squared,
                })
            })
            .collect(),
    );
    r.insert(
        "pairs".into(),
        json!({
            "differences": pairs.differences,
            "max_relative": pairs.max_relative(),
            "pass": pairs.pass,
        }),
    );
    r.insert(
        "similarity".into(),
        Vertex::ALL
            .iter()
            .map(|&v| {
                let s = similarity_check(t, v, tol);
                json!({"vertex": v.name(), "ch": s.ch, "ck": s.ck, "residual": s.residual, "pass": s.pass})
            })
            .collect(),
    );
    r.insert(
        "derivation".into(),
        json!({
            "side": derivation.side.side_name(),
            "chain": derivation.chain.iter().map(|s| json!({"expression": s.expression, "value": s.value})).collect::<Vec<_>>(),
            "residual": derivation.residual,
            "pass": derivation.residual.abs().max(derivation.max_chain_deviation()) <= tol * sq_scale,
        }),
    );
    r.insert(
        "checks".into(),
        checks
            .iter()
            .map(|c| json!({"name": c.name, "residual": c.residual, "pass": c.pass}))
            .collect(),
    );
    r.insert("pass".into(), all_pass.into());
    (r.into(), all_pass)
}

fn interpretation_json(rep: &InterpretationReport) -> Value {
    json!({
        "kind": rep.kind.name(),
        "convention": rep.kind.convention(),
        "L": rep.system.l,
        "M": rep.system.m,
        "N": rep.system.n,
        "classification": rep.classification.name(),
        "matches": rep.matches.iter().map(|c| json!({
            "component": c.component,
            "value": c.value,
            "counterpart": c.counterpart,
            "realizations": c.realizations,
            "deviation": c.deviation,
        })).collect::<Vec<_>>(),
        "max_deviation": rep.max_deviation,
        "all_positive": rep.all_positive,
        "expected_positive": rep.expected_positive,
        "pass": rep.pass,
    })
}

/// Solves the three-sum system, either from explicit values or read off a triangle.
pub fn solve(
    l: Option<f64>,
    m: Option<f64>,
    n: Option<f64>,
    interpret: Option<Interpretation>,
    triangle: &TriangleArgs,
    tol: f64,
) -> Result<(Value, bool), Failure> {
    let explicit = l.is_some() || m.is_some() || n.is_some();
    let mut r = header("solve");
    let mut cross_check = None;
    let (system, units, pass) = match interpret {
        Some(kind) => {
            if explicit {
                return Err(Failure::usage("--L/--M/--N cannot be combined with --interpret"));
            }
            let t = triangle.build().map_err(Failure::usage)?;
            let rep = three_sum::interpret(
                &t,
                kind,
                InterpretOptions {
                    tol,
                    ..Default::default()
                },
            );
            let units = match kind {
                Interpretation::Squares => "area",
                Interpretation::Sides => "length",
                Interpretation::Angles => "radians",
            };
            r.insert("triangle".into(), triangle_json(&t));
            cross_check = Some(interpretation_json(&rep));
            (rep.system, units, rep.pass)
        }
        None => {
            if triangle.is_given() {
                return Err(Failure::usage("a triangle is only used with --interpret"));
            }
            let (Some(l), Some(m), Some(n)) = (l, m, n) else {
                return Err(Failure::usage("--L, --M and --N are all required"));
            };
            let s = ThreeSum::new(triangle.angle(l), triangle.angle(m), triangle.angle(n));
            if !s.is_finite() {
                return Err(Failure::usage("--L, --M and --N must be finite"));
            }
            (s, if triangle.degrees { "radians" } else { "input" }, true)
        }
    };
    let sol = three_sum::solve(&system);
    r.insert("units".into(), units.into());
    r.insert("L".into(), system.l.into());
    r.insert("M".into(), system.m.into());
    r.insert("N".into(), system.n.into());
    r.insert("x".into(), sol.x.into());
    r.insert("y".into(), sol.y.into());
    r.insert("z".into(), sol.z.into());
    r.insert("all_positive".into(), three_sum::all_positive(&system).into());
    r.insert("residuals".into(), json!(system.residuals(&sol)));
    r.insert("pass".into(), pass.into());
    if let Some(block) = cross_check {
        r.insert("interpretation".into(), block);
    }
    Ok((r.into(), pass))
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

/// Renders one figure to `out` and writes a JSON sidecar next to it.
pub fn figure(t: &Triangle, spec: &FigureSpec, out: &Path) -> Result<(Value, bool), Failure> {
    let d = build(t);
    let inc = incircle(t);
    let circ = circumcircle(t);
    let data = match spec.kind {
        FigureKind::EuclidDefect => FigureData::Triangle(t),
        FigureKind::Incircle => FigureData::Incircle(&inc),
        FigureKind::Circumcircle => FigureData::Circumcircle(&circ),
        FigureKind::Cuoco | FigureKind::CuocoPairs | FigureKind::CuocoObtuse => FigureData::Decomposition(&d),
    };
    let svg = render(data, spec).map_err(|e| Failure::usage(e.to_string()))?;

    let sidecar = {
        let mut s = out.as_os_str().to_owned();
        s.push(".json");
        std::path::PathBuf::from(s)
    };
    let mut r = header("figure");
    r.insert("kind".into(), spec.kind.name().into());
    r.insert("out".into(), out.display().to_string().into());
    r.insert("sidecar".into(), sidecar.display().to_string().into());
    r.insert("precision".into(), spec.precision.into());
    r.insert("triangle".into(), triangle_json(t));
    match spec.kind {
        FigureKind::EuclidDefect => {
            let e = euclid_defect(t, Vertex::B);
            r.insert(
                "euclid_defect".into(),
                json!({"vertex": "B", "projection": e.projection, "defect": e.defect, "residual": e.residual}),
            );
        }
        FigureKind::Incircle => {
            let measured = measured_tangent_lengths(&inc);
            r.insert("center".into(), point(inc.center));
            r.insert("radius".into(), inc.radius.into());
            r.insert(
                "tangent_points".into(),
                per_vertex(|v| point(inc.tangent_points[v.index()])),
            );
            r.insert(
                "tangent_lengths".into(),
                per_vertex(|v| inc.tangent_lengths[v.index()].into()),
            );
            r.insert(
                "measured_tangent_lengths".into(),
                per_vertex(|v| json!(measured[v.index()])),
            );
        }
        FigureKind::Circumcircle => {
            r.insert("center".into(), point(circ.center));
            r.insert("radius".into(), circ.radius.into());
            r.insert(
                "splits".into(),
                per_vertex(|v| {
                    let s = circ.splits[v.index()];
                    json!({"toward_next": s.toward_next, "toward_prev": s.toward_prev})
                }),
            );
        }
        _ => {
            r.insert("pair_areas".into(), json!(d.pair_areas.to_array()));
            r.insert("panels".into(), panels_json(&d));
        }
    }
    let report: Value = r.into();

    std::fs::write(out, svg).map_err(|e| io_failure(out, e))?;
    let text = crate::report::to_string(report.clone());
    std::fs::write(&sidecar, text + "\n").map_err(|e| io_failure(&sidecar, e))?;
    Ok((report, true))
}

/// Integer seeds are used as given; any other string is hashed with 64-bit FNV-1a.
pub fn parse_seed(seed: &str) -> u64 {
    seed.parse().unwrap_or_else(|_| {
        seed.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
        })
    })
}

/// Checks `count` seeded random triangles in parallel and summarizes in index order.
pub fn fuzz(count: usize, seed: &str, tol: f64) -> (Value, bool) {
    let seed_value = parse_seed(seed);
    let triangles = random_triangles(seed_value, count);
    let results: Vec<_> = triangles.par_iter().map(|t| check_triangle(t, tol)).collect();
    let summary = summarize(&triangles, &results);
    let pass = summary.pass();

    let mut r = header("fuzz");
    r.insert("count".into(), summary.count.into());
    r.insert("seed".into(), seed_value.into());
    r.insert("tolerance".into(), tol.into());
    r.insert(
        "checks".into(),
        summary
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "max_residual": c.max_residual, "failures": c.failures}))
            .collect(),
    );
    r.insert(
        "counterexample".into(),
        match &summary.first_failure {
            None => Value::Null,
            Some((index, t, failed)) => json!({
                "index": index,
                "points": per_vertex(|v| point(t.vertex(v))),
                "failed": failed,
            }),
        },
    );
    r.insert("pass".into(), pass.into());
    (r.into(), pass)
}
