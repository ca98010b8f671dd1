//! Every per-triangle invariant as a named, scaled residual, plus the
//! seeded triangle sampler used for fuzzing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circles::{circumcircle, closed_form_splits, incircle, measured_tangent_lengths};
use crate::cosine_law::{euclid_defect, verify_cosine_identity};
use crate::cuoco::{build, derive_for_side, panel_area_trig, similarity_check, verify_pairs, Pair};
use crate::geometry::{classify, metrics, Classification, Point, Triangle, Vertex};
use crate::three_sum::{interpret, InterpretOptions, Interpretation};

/// Cosine band treated as a right angle when sign-based claims are checked.
pub const SIGN_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Scaled residual; boolean checks report 0 (held) or 1 (violated).
    pub residual: f64,
    pub pass: bool,
}

fn numeric(name: &'static str, residual: f64, tol: f64) -> CheckResult {
    CheckResult {
        name,
        residual,
        pass: residual <= tol,
    }
}

fn boolean(name: &'static str, held: bool) -> CheckResult {
    CheckResult {
        name,
        residual: if held { 0.0 } else { 1.0 },
        pass: held,
    }
}

pub const CHECK_NAMES: [&str; 16] = [
    "angle_sum",
    "cosine_identity",
    "euclid_defect",
    "euclid_defect_sign",
    "pair_equivalence",
    "trig_vs_exact",
    "pair_sums",
    "panel_quad_area",
    "panel_sign_pattern",
    "similarity",
    "derivation",
    "squares_interpretation",
    "sides_interpretation",
    "angles_interpretation",
    "tangent_side_sums",
    "vertex_splits",
];

/// Runs every check on one triangle. Residuals are relative to the natural
/// scale of each quantity (squared sides for areas, sides for lengths) and
/// absolute for angles.
pub fn check_triangle(t: &Triangle, tol: f64) -> Vec<CheckResult> {
    let m = metrics(t);
    let sq_scale = 1f64.max(m.a * m.a).max(m.b * m.b).max(m.c * m.c);
    let len_scale = 1f64.max(m.a).max(m.b).max(m.c);
    let d = build(t);
    let class = classify(&m, SIGN_EPS);
    let mut out = Vec::with_capacity(CHECK_NAMES.len());

    out.push(numeric(
        "angle_sum",
        (m.alpha + m.beta + m.gamma - std::f64::consts::PI).abs(),
        tol,
    ));
    out.push(numeric(
        "cosine_identity",
        verify_cosine_identity(&m, tol).max_relative(),
        tol,
    ));

    let defects = Vertex::ALL.map(|v| euclid_defect(t, v));
    out.push(numeric(
        "euclid_defect",
        defects
            .iter()
            .fold(0.0f64, |acc, e| acc.max(e.residual.abs() / e.opposite_squared)),
        tol,
    ));
    out.push(boolean(
        "euclid_defect_sign",
        defects.iter().all(|e| {
            let cos = m.cos(e.vertex);
            cos.abs() <= SIGN_EPS || (e.defect > 0.0) == (cos > 0.0)
        }),
    ));

    out.push(numeric("pair_equivalence", verify_pairs(&d, tol).max_relative(), tol));
    out.push(numeric(
        "trig_vs_exact",
        Pair::ALL
            .iter()
            .map(|&p| (panel_area_trig(p, &m) - d.pair_areas.get(p)).abs() / sq_scale)
            .fold(0.0, f64::max),
        tol,
    ));
    let pa = d.pair_areas;
    out.push(numeric(
        "pair_sums",
        [
            pa.r + pa.t - m.a * m.a,
            pa.r + pa.s - m.b * m.b,
            pa.s + pa.t - m.c * m.c,
        ]
        .iter()
        .map(|r| r.abs() / sq_scale)
        .fold(0.0, f64::max),
        tol,
    ));
    out.push(numeric(
        "panel_quad_area",
        d.panels
            .iter()
            .map(|p| (p.signed_area.abs() - p.quad_area()).abs() / sq_scale)
            .fold(0.0, f64::max),
        tol,
    ));
    out.push(boolean(
        "panel_sign_pattern",
        d.panels.iter().all(|p| {
            let v = p.label.pair().vertex();
            match class {
                Classification::Obtuse(o) if o == v => p.signed_area < 0.0,
                Classification::Right(r) if r == v => p.signed_area.abs() <= SIGN_EPS * sq_scale,
                _ => p.signed_area > 0.0,
            }
        }),
    ));
    out.push(numeric(
        "similarity",
        Vertex::ALL
            .iter()
            .map(|&v| {
                let r = similarity_check(t, v, tol);
                r.residual.abs() / r.scale
            })
            .fold(0.0, f64::max),
        tol,
    ));
    out.push(numeric(
        "derivation",
        Vertex::ALL
            .iter()
            .map(|&v| {
                let tr = derive_for_side(&d, v);
                tr.residual.abs().max(tr.max_chain_deviation()) / sq_scale
            })
            .fold(0.0, f64::max),
        tol,
    ));

    let opts = InterpretOptions {
        tol,
        right_eps: SIGN_EPS,
    };
    for (name, kind) in [
        ("squares_interpretation", Interpretation::Squares),
        ("sides_interpretation", Interpretation::Sides),
        ("angles_interpretation", Interpretation::Angles),
    ] {
        let r = interpret(t, kind, opts);
        let residual = r.max_deviation / r.scale;
        out.push(CheckResult {
            name,
            residual: if r.positivity_consistent() {
                residual
            } else {
                f64::INFINITY
            },
            pass: r.pass,
        });
    }

    let circle = incircle(t);
    let measured = measured_tangent_lengths(&circle);
    out.push(numeric(
        "tangent_side_sums",
        Vertex::ALL
            .iter()
            .map(|&side| {
                // side opposite `side` joins side.next() and side.prev()
                let from_next = measured[side.next().index()][0];
                let from_prev = measured[side.prev().index()][1];
                let closed = circle.tangent_lengths[side.next().index()] + circle.tangent_lengths[side.prev().index()];
                let len = m.side(side);
                ((from_next + from_prev - len).abs().max((closed - len).abs())) / len_scale
            })
            .fold(0.0, f64::max),
        tol,
    ));

    let cc = circumcircle(t);
    let closed = closed_form_splits(&m);
    out.push(numeric(
        "vertex_splits",
        Vertex::ALL
            .iter()
            .map(|&v| {
                let (s, c) = (cc.splits[v.index()], closed[v.index()]);
                (s.toward_next - c.toward_next)
                    .abs()
                    .max((s.toward_prev - c.toward_prev).abs())
                    .max((s.sum() - m.angle(v)).abs())
            })
            .fold(0.0, f64::max),
        tol,
    ));
    out
}

/// `count` triangles with vertices drawn uniformly from `[-10, 10]²`,
/// rejecting degenerate draws. Deterministic in `seed`.
pub fn random_triangles(seed: u64, count: usize) -> Vec<Triangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut p = || Point::new(rng.random_range(-10.0..=10.0), rng.random_range(-10.0..=10.0));
        let (a, b, c) = (p(), p(), p());
        if let Ok(t) = Triangle::new(a, b, c) {
            out.push(t);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub max_residual: f64,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzSummary {
    pub count: usize,
    pub checks: Vec<CheckSummary>,
    /// Index, triangle and failing check names of the first failure.
    pub first_failure: Option<(usize, Triangle, Vec<&'static str>)>,
}

impl FuzzSummary {
    pub fn pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Folds per-triangle results, in index order, into a summary.
pub fn summarize(triangles: &[Triangle], results: &[Vec<CheckResult>]) -> FuzzSummary {
    let mut checks: Vec<CheckSummary> = CHECK_NAMES
        .iter()
        .map(|&name| CheckSummary {
            name,
            max_residual: 0.0,
            failures: 0,
        })
        .collect();
    let mut first_failure = None;
    for (i, (t, res)) in triangles.iter().zip(results).enumerate() {
        for (summary, r) in checks.iter_mut().zip(res) {
            debug_assert_eq!(summary.name, r.name);
            summary.max_residual = summary.max_residual.max(r.residual);
            if !r.pass {
                summary.failures += 1;
            }
        }
        if first_failure.is_none() && res.iter().any(|r| !r.pass) {
            let names = res.iter().filter(|r| !r.pass).map(|r| r.name).collect();
            first_failure = Some((i, *t, names));
        }
    }
    FuzzSummary {
        count: triangles.len(),
        checks,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::triangle_from_sides;

    #[test]
    fn names_match_order() {
        let t = triangle_from_sides(2.0, 3.0, 4.0).unwrap();
        let names: Vec<_> = check_triangle(&t, 1e-9).iter().map(|c| c.name).collect();
        assert_eq!(names, CHECK_NAMES);
    }

    #[test]
    fn spot_triangles_pass() {
        for (a, b, c) in [(1.0, 1.0, 1.0), (2.0, 3.0, 4.0), (3.0, 4.0, 5.0), (4.0, 5.0, 6.0)] {
            let t = triangle_from_sides(a, b, c).unwrap();
            for r in check_triangle(&t, 1e-9) {
                assert!(r.pass, "({a},{b},{c}) {r:?}");
            }
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        assert_eq!(random_triangles(7, 20), random_triangles(7, 20));
        assert_ne!(random_triangles(7, 5), random_triangles(8, 5));
    }
}
