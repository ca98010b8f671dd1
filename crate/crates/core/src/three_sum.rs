//! The system `x + y = L`, `x + z = M`, `y + z = N` and the three ways a
//! triangle realizes it: squares on the sides (panel classes), side lengths
//! (incircle tangent lengths) and angles (circumcircle splits).
//!
//! Component convention: `x` belongs to the equations in `L` and `M`, `y` to
//! `L` and `N`, `z` to `M` and `N`. With `(L, M, N)` read off sides or angles
//! `a, b, c` this puts `x` at vertex `C`, `y` at `B` and `z` at `A`.

use crate::circles::{circumcircle, incircle, measured_tangent_lengths};
use crate::cuoco::build;
use crate::geometry::{classify, metrics, Classification, Triangle, Vertex, RIGHT_ANGLE_EPS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeSum {
    pub l: f64,
    pub m: f64,
    pub n: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ThreeSum {
    pub const fn new(l: f64, m: f64, n: f64) -> Self {
        Self { l, m, n }
    }

    pub fn is_finite(&self) -> bool {
        self.l.is_finite() && self.m.is_finite() && self.n.is_finite()
    }

    /// `max(|L|, |M|, |N|, 1)`.
    pub fn scale(&self) -> f64 {
        1f64.max(self.l.abs()).max(self.m.abs()).max(self.n.abs())
    }

    /// `[x + y − L, x + z − M, y + z − N]`.
    pub fn residuals(&self, s: &Solution) -> [f64; 3] {
        [s.x + s.y - self.l, s.x + s.z - self.m, s.y + s.z - self.n]
    }
}

impl Solution {
    pub fn to_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn min(&self) -> f64 {
        self.x.min(self.y).min(self.z)
    }
}

pub fn solve(s: &ThreeSum) -> Solution {
    Solution {
        x: 0.5 * (s.l + s.m - s.n),
        y: 0.5 * (s.l + s.n - s.m),
        z: 0.5 * (s.m + s.n - s.l),
    }
}

/// Each value strictly less than the sum of the other two.
pub fn all_positive(s: &ThreeSum) -> bool {
    s.l < s.m + s.n && s.m < s.l + s.n && s.n < s.l + s.m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interpretation {
    Squares,
    Sides,
    Angles,
}

impl Interpretation {
    pub fn name(self) -> &'static str {
        match self {
            Interpretation::Squares => "squares",
            Interpretation::Sides => "sides",
            Interpretation::Angles => "angles",
        }
    }

    /// How `x`, `y`, `z` are matched to geometry.
    pub fn convention(self) -> &'static str {
        match self {
            Interpretation::Squares => "x=R (ab cos gamma), y=T (ac cos beta), z=S (bc cos alpha)",
            Interpretation::Sides => "x=tangent length at C, y=at B, z=at A",
            Interpretation::Angles => {
                "x=split next to AB (at A and B), y=split next to CA (at C and A), z=split next to BC (at B and C)"
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpretOptions {
    /// Relative for squares and sides, absolute (radians) for angles.
    pub tol: f64,
    /// Cosine band treated as a right angle.
    pub right_eps: f64,
}

impl Default for InterpretOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            right_eps: RIGHT_ANGLE_EPS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentMatch {
    /// `"x"`, `"y"` or `"z"`.
    pub component: &'static str,
    pub value: f64,
    /// What the component is compared against, e.g. `"R"` or `"tangent at C"`.
    pub counterpart: String,
    /// Every independent geometric realization of the counterpart.
    pub realizations: Vec<f64>,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpretationReport {
    pub kind: Interpretation,
    pub system: ThreeSum,
    pub solution: Solution,
    pub matches: [ComponentMatch; 3],
    pub max_deviation: f64,
    /// Divisor applied to `max_deviation` before comparing with `tol`.
    pub scale: f64,
    pub tol: f64,
    pub all_positive: bool,
    pub classification: Classification,
    /// What the positivity should be for this triangle; `None` on the
    /// right-angle boundary where either answer is acceptable.
    pub expected_positive: Option<bool>,
    pub pass: bool,
}

impl InterpretationReport {
    pub fn positivity_consistent(&self) -> bool {
        self.expected_positive.is_none_or(|e| e == self.all_positive)
    }
}

pub fn interpret_squares(t: &Triangle) -> InterpretationReport {
    interpret(t, Interpretation::Squares, InterpretOptions::default())
}

pub fn interpret_sides(t: &Triangle) -> InterpretationReport {
    interpret(t, Interpretation::Sides, InterpretOptions::default())
}

pub fn interpret_angles(t: &Triangle) -> InterpretationReport {
    interpret(t, Interpretation::Angles, InterpretOptions::default())
}

pub fn interpret(t: &Triangle, kind: Interpretation, opts: InterpretOptions) -> InterpretationReport {
    let m = metrics(t);
    let classification = classify(&m, opts.right_eps);
    let boundary = matches!(classification, Classification::Right(_));
    let acute = classification.is_acute();

    let (system, targets, scale, expected_positive) = match kind {
        Interpretation::Squares => {
            let d = build(t);
            let panel = |l| d.panel(l).signed_area;
            use crate::cuoco::PanelLabel::*;
            let targets = [
                ("R", vec![d.pair_areas.r, panel(R1), panel(R2)]),
                ("T", vec![d.pair_areas.t, panel(T1), panel(T2)]),
                ("S", vec![d.pair_areas.s, panel(S1), panel(S2)]),
            ];
            let scale = 1f64.max(m.a * m.a).max(m.b * m.b).max(m.c * m.c);
            let sys = ThreeSum::new(m.a * m.a, m.b * m.b, m.c * m.c);
            (sys, targets, scale, (!boundary).then_some(acute))
        }
        Interpretation::Sides => {
            let circle = incircle(t);
            let measured = measured_tangent_lengths(&circle);
            let at = |v: Vertex| {
                let mut r = vec![circle.tangent_lengths[v.index()]];
                r.extend(measured[v.index()]);
                r
            };
            let targets = [
                ("tangent at C", at(Vertex::C)),
                ("tangent at B", at(Vertex::B)),
                ("tangent at A", at(Vertex::A)),
            ];
            let scale = 1f64.max(m.a).max(m.b).max(m.c);
            (ThreeSum::new(m.a, m.b, m.c), targets, scale, Some(true))
        }
        Interpretation::Angles => {
            let splits = circumcircle(t).splits;
            let s = |v: Vertex| splits[v.index()];
            let targets = [
                (
                    "split next to AB",
                    vec![s(Vertex::A).toward_next, s(Vertex::B).toward_prev],
                ),
                (
                    "split next to CA",
                    vec![s(Vertex::C).toward_next, s(Vertex::A).toward_prev],
                ),
                (
                    "split next to BC",
                    vec![s(Vertex::B).toward_next, s(Vertex::C).toward_prev],
                ),
            ];
            (
                ThreeSum::new(m.alpha, m.beta, m.gamma),
                targets,
                1.0,
                (!boundary).then_some(acute),
            )
        }
    };

    let solution = solve(&system);
    let values = solution.to_array();
    let mut i = 0;
    let matches = targets.map(|(name, realizations)| {
        let value = values[i];
        let component = ["x", "y", "z"][i];
        i += 1;
        let deviation = realizations.iter().fold(0.0f64, |acc, r| acc.max((r - value).abs()));
        ComponentMatch {
            component,
            value,
            counterpart: name.to_string(),
            realizations,
            deviation,
        }
    });
    let max_deviation = matches.iter().fold(0.0f64, |acc, c| acc.max(c.deviation));
    let all_pos = all_positive(&system);
    let mut report = InterpretationReport {
        kind,
        system,
        solution,
        matches,
        max_deviation,
        scale,
        tol: opts.tol,
        all_positive: all_pos,
        classification,
        expected_positive,
        pass: false,
    };
    report.pass = max_deviation <= opts.tol * scale && report.positivity_consistent();
    report
}
