//! The Cuoco configuration.
//!
//! Each side carries a square built outside the triangle. The altitude onto
//! that side, extended across the square, cuts it into two rectangles whose
//! widths are the signed projections of the adjacent sides. The six
//! rectangles fall into three classes of equal signed area:
//!
//! | class | area        | square on `a` | square on `b` | square on `c` |
//! |-------|-------------|---------------|---------------|---------------|
//! | R     | `ab cos γ`  | R1            | R2            |               |
//! | S     | `bc cos α`  |               | S1            | S2            |
//! | T     | `ac cos β`  | T2            |               | T1            |
//!
//! When an angle is obtuse its two rectangles get negative width: they lie
//! outside their squares and the neighbouring rectangle overruns the square,
//! which is then recovered as a difference of the two.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::geometry::{foot_of_altitude, metrics, Point, Triangle, TriangleMetrics, Vertex};

/// Equivalence class of panels, named after the area it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    R,
    S,
    T,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::R, Pair::S, Pair::T];

    /// The vertex whose angle the class measures: R ↔ C, S ↔ A, T ↔ B.
    pub fn vertex(self) -> Vertex {
        match self {
            Pair::R => Vertex::C,
            Pair::S => Vertex::A,
            Pair::T => Vertex::B,
        }
    }

    pub fn at_vertex(v: Vertex) -> Pair {
        match v {
            Vertex::A => Pair::S,
            Vertex::B => Pair::T,
            Vertex::C => Pair::R,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pair::R => "R",
            Pair::S => "S",
            Pair::T => "T",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PanelLabel {
    R1,
    R2,
    S1,
    S2,
    T1,
    T2,
}

impl PanelLabel {
    pub const ALL: [PanelLabel; 6] = [
        PanelLabel::R1,
        PanelLabel::R2,
        PanelLabel::S1,
        PanelLabel::S2,
        PanelLabel::T1,
        PanelLabel::T2,
    ];

    pub fn pair(self) -> Pair {
        match self {
            PanelLabel::R1 | PanelLabel::R2 => Pair::R,
            PanelLabel::S1 | PanelLabel::S2 => Pair::S,
            PanelLabel::T1 | PanelLabel::T2 => Pair::T,
        }
    }

    /// Side (named by its opposite vertex) whose square holds this panel.
    pub fn host(self) -> Vertex {
        match self {
            PanelLabel::R1 | PanelLabel::T2 => Vertex::A,
            PanelLabel::R2 | PanelLabel::S1 => Vertex::B,
            PanelLabel::S2 | PanelLabel::T1 => Vertex::C,
        }
    }

    /// The other member of the class.
    pub fn partner(self) -> PanelLabel {
        match self {
            PanelLabel::R1 => PanelLabel::R2,
            PanelLabel::R2 => PanelLabel::R1,
            PanelLabel::S1 => PanelLabel::S2,
            PanelLabel::S2 => PanelLabel::S1,
            PanelLabel::T1 => PanelLabel::T2,
            PanelLabel::T2 => PanelLabel::T1,
        }
    }

    pub fn in_square(pair: Pair, host: Vertex) -> Option<PanelLabel> {
        Self::ALL.into_iter().find(|l| l.pair() == pair && l.host() == host)
    }

    pub fn name(self) -> &'static str {
        match self {
            PanelLabel::R1 => "R1",
            PanelLabel::R2 => "R2",
            PanelLabel::S1 => "S1",
            PanelLabel::S2 => "S2",
            PanelLabel::T1 => "T1",
            PanelLabel::T2 => "T2",
        }
    }
}

impl fmt::Display for PanelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareOnSide {
    /// Side, named by its opposite vertex.
    pub side: Vertex,
    /// Counterclockwise; the first two points are the side's endpoints.
    pub vertices: [Point; 4],
}

impl SquareOnSide {
    fn build(t: &Triangle, side: Vertex) -> Self {
        let p = t.vertex(side.next());
        let q = t.vertex(side.prev());
        let edge = q - p;
        // the triangle is counterclockwise, so the outside of p→q is on its right
        let out = edge.perp_cw();
        Self {
            side,
            vertices: [q, p, p + out, q + out],
        }
    }

    pub fn side_length(&self) -> f64 {
        self.vertices[0].distance(self.vertices[1])
    }

    /// Containment in the closed square, with `slack` relative to the side length.
    pub fn contains(&self, p: Point, slack: f64) -> bool {
        let origin = self.vertices[0];
        let e1 = self.vertices[1] - origin;
        let e2 = self.vertices[3] - origin;
        let l2 = e1.norm_squared();
        let u = (p - origin).dot(e1) / l2;
        let v = (p - origin).dot(e2) / l2;
        (-slack..=1.0 + slack).contains(&u) && (-slack..=1.0 + slack).contains(&v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectanglePanel {
    pub label: PanelLabel,
    pub host: Vertex,
    pub signed_area: f64,
    /// Starts at the triangle vertex the panel is anchored to. Collapses to a
    /// segment when the anchored angle is right.
    pub quad: [Point; 4],
}

impl RectanglePanel {
    pub fn quad_area(&self) -> f64 {
        polygon_area(&self.quad).abs()
    }
}

/// Shoelace signed area.
pub fn polygon_area(points: &[Point]) -> f64 {
    let n = points.len();
    0.5 * (0..n)
        .map(|i| {
            let (p, q) = (points[i], points[(i + 1) % n]);
            p.x * q.y - q.x * p.y
        })
        .sum::<f64>()
}

/// Signed areas of the three panel classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairAreas<T> {
    pub r: T,
    pub s: T,
    pub t: T,
}

impl<T: Copy> PairAreas<T> {
    pub fn get(&self, pair: Pair) -> T {
        match pair {
            Pair::R => self.r,
            Pair::S => self.s,
            Pair::T => self.t,
        }
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.r, self.s, self.t]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CuocoDecomposition {
    pub triangle: Triangle,
    pub metrics: TriangleMetrics,
    /// Indexed by side: `a`, `b`, `c`.
    pub squares: [SquareOnSide; 3],
    /// Sorted by label.
    pub panels: [RectanglePanel; 6],
    /// Class areas from the dot-product path.
    pub pair_areas: PairAreas<f64>,
}

impl CuocoDecomposition {
    pub fn panel(&self, label: PanelLabel) -> &RectanglePanel {
        &self.panels[label as usize]
    }

    pub fn square(&self, side: Vertex) -> &SquareOnSide {
        &self.squares[side.index()]
    }

    /// Whether every corner of the panel lies in its host square.
    pub fn panel_within_host(&self, label: PanelLabel, slack: f64) -> bool {
        let square = self.square(label.host());
        self.panel(label).quad.iter().all(|&p| square.contains(p, slack))
    }
}

/// Builds the three exterior squares and the six panels cut by the altitudes.
pub fn build(t: &Triangle) -> CuocoDecomposition {
    let squares = Vertex::ALL.map(|side| SquareOnSide::build(t, side));
    let panels = PanelLabel::ALL.map(|label| build_panel(t, &squares, label));
    CuocoDecomposition {
        triangle: *t,
        metrics: metrics(t),
        squares,
        panels,
        pair_areas: exact_pair_areas_of(t),
    }
}

fn build_panel(t: &Triangle, squares: &[SquareOnSide; 3], label: PanelLabel) -> RectanglePanel {
    let host = label.host();
    let anchor = label.pair().vertex();
    let square = &squares[host.index()];
    let len = square.side_length();

    // the host side runs first → second; the altitude from `host` meets it at `tparam`
    let first = host.next();
    let (_, tparam) = foot_of_altitude(t, host);
    let width = if anchor == first {
        tparam * len
    } else {
        (1.0 - tparam) * len
    };

    let start = t.vertex(anchor);
    let toward = t.vertex(if anchor == first { host.prev() } else { first });
    let along = (toward - start) * (1.0 / len);
    let out = (square.vertices[2] - square.vertices[1]) * (1.0 / len);
    let near = start + along * width;
    let quad = [start, near, near + out * len, start + out * len];

    RectanglePanel {
        label,
        host,
        signed_area: width * len,
        quad,
    }
}

/// `R ↦ ab cos γ`, `S ↦ bc cos α`, `T ↦ ac cos β`.
pub fn panel_area_trig(pair: Pair, m: &TriangleMetrics) -> f64 {
    match pair {
        Pair::R => m.a * m.b * m.gamma.cos(),
        Pair::S => m.b * m.c * m.alpha.cos(),
        Pair::T => m.a * m.c * m.beta.cos(),
    }
}

/// Class area as a dot product of the two edge vectors at the class's vertex.
pub fn panel_area_exact(pair: Pair, t: &Triangle) -> f64 {
    exact_pair_areas_of(t).get(pair)
}

fn exact_pair_areas_of(t: &Triangle) -> PairAreas<f64> {
    let [a, b, c] = t.vertices().map(|p| [p.x, p.y]);
    exact_pair_areas(a, b, c)
}

/// Class areas from coordinates using only `+`, `−`, `×`, so integer or
/// rational coordinates give exact results.
pub fn exact_pair_areas<N>(a: [N; 2], b: [N; 2], c: [N; 2]) -> PairAreas<N>
where
    N: Copy + Add<Output = N> + Sub<Output = N> + Mul<Output = N>,
{
    PairAreas {
        r: dot_at(c, a, b),
        s: dot_at(a, b, c),
        t: dot_at(b, a, c),
    }
}

/// Squared side lengths `[a², b², c²]` from coordinates, exact for exact `N`.
pub fn exact_squared_sides<N>(a: [N; 2], b: [N; 2], c: [N; 2]) -> [N; 3]
where
    N: Copy + Add<Output = N> + Sub<Output = N> + Mul<Output = N>,
{
    [dot_at(b, c, c), dot_at(c, a, a), dot_at(a, b, b)]
}

fn dot_at<N>(o: [N; 2], p: [N; 2], q: [N; 2]) -> N
where
    N: Copy + Add<Output = N> + Sub<Output = N> + Mul<Output = N>,
{
    (p[0] - o[0]) * (q[0] - o[0]) + (p[1] - o[1]) * (q[1] - o[1])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairReport {
    /// `|R1 − R2|`, `|S1 − S2|`, `|T1 − T2|`.
    pub differences: [f64; 3],
    /// `max(1, a², b², c²)`.
    pub scale: f64,
    pub tol: f64,
    pub pass: bool,
}

impl PairReport {
    pub fn max_relative(&self) -> f64 {
        self.differences.iter().fold(0.0f64, |acc, d| acc.max(*d)) / self.scale
    }
}

pub fn verify_pairs(d: &CuocoDecomposition, tol: f64) -> PairReport {
    let differences = [
        (PanelLabel::R1, PanelLabel::R2),
        (PanelLabel::S1, PanelLabel::S2),
        (PanelLabel::T1, PanelLabel::T2),
    ]
    .map(|(x, y)| (d.panel(x).signed_area - d.panel(y).signed_area).abs());
    let m = &d.metrics;
    let scale = 1f64.max(m.a * m.a).max(m.b * m.b).max(m.c * m.c);
    PairReport {
        differences,
        scale,
        tol,
        pass: differences.iter().all(|&x| x <= tol * scale),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityReport {
    pub vertex: Vertex,
    /// Signed distance from the vertex to the foot `H` of the altitude from
    /// `vertex.next()`, measured along the side towards `vertex.prev()`.
    pub ch: f64,
    /// Signed distance to the foot `K` of the altitude from `vertex.prev()`,
    /// along the side towards `vertex.next()`.
    pub ck: f64,
    /// `|CA| · CK − |CB| · CH`, with `A = vertex.next()` and `B = vertex.prev()`.
    pub residual: f64,
    pub scale: f64,
    pub pass: bool,
}

/// Area equivalence without trigonometry: the right triangles `CAH` and
/// `CBK` share the angle at `C`, so `CA : CH = CB : CK`.
pub fn similarity_check(t: &Triangle, at: Vertex, tol: f64) -> SimilarityReport {
    let c = t.vertex(at);
    let a = t.vertex(at.next());
    let b = t.vertex(at.prev());
    let (h, _) = foot_of_altitude(t, at.next());
    let (k, _) = foot_of_altitude(t, at.prev());
    let ch = (h - c).dot((b - c).normalized());
    let ck = (k - c).dot((a - c).normalized());
    let (ca, cb) = (a.distance(c), b.distance(c));
    let residual = ca * ck - cb * ch;
    let scale = 1f64.max(ca * ca).max(cb * cb);
    SimilarityReport {
        vertex: at,
        ch,
        ck,
        residual,
        scale,
        pass: residual.abs() <= tol * scale,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivationStep {
    pub expression: String,
    pub value: f64,
}

/// Trace of the identity chain for the square on one side.
#[derive(Debug, Clone, PartialEq)]
pub struct Derivation {
    pub side: Vertex,
    /// Every entry should equal the first (the square's area).
    pub chain: Vec<DerivationStep>,
    /// The two bracketed differences of the third link.
    pub partials: Vec<DerivationStep>,
    /// `side² − (p² + q² − 2·X)` with `X` the class at the opposite vertex.
    pub residual: f64,
}

impl Derivation {
    pub fn max_chain_deviation(&self) -> f64 {
        let target = self.chain[0].value;
        self.chain
            .iter()
            .fold(0.0f64, |acc, s| acc.max((s.value - target).abs()))
    }
}

/// `a² = R1 + T2 = R2 + T1 = (b² − S1) + (c² − S2) = b² + c² − 2 S1`.
pub fn derive_cosine_theorem(d: &CuocoDecomposition) -> Derivation {
    derive_for_side(d, Vertex::A)
}

/// The same chain for any side, by cyclic relabeling.
pub fn derive_for_side(d: &CuocoDecomposition, side: Vertex) -> Derivation {
    let m = &d.metrics;
    let sq = |v: Vertex| m.side(v) * m.side(v);
    let sq_name = |v: Vertex| format!("{}^2", v.side_name());
    let area = |l: PanelLabel| d.panel(l).signed_area;

    // the square on `side` holds the panels anchored at its two endpoints
    let ends = [side.prev(), side.next()];
    let own = ends.map(|e| PanelLabel::in_square(Pair::at_vertex(e), side).expect("hosting table"));
    let moved = own.map(PanelLabel::partner);
    // each moved panel shares its square with a panel of the class at `side`
    let rest = moved.map(|l| PanelLabel::in_square(Pair::at_vertex(side), l.host()).expect("hosting table"));
    let hosts = moved.map(PanelLabel::host);
    let opposite_pair = Pair::at_vertex(side);
    let x = rest[0];

    let partials: Vec<DerivationStep> = (0..2)
        .map(|i| DerivationStep {
            expression: format!("{} - {}", sq_name(hosts[i]), rest[i]),
            value: sq(hosts[i]) - area(rest[i]),
        })
        .collect();

    let (p, q) = (m.side(hosts[0]), m.side(hosts[1]));
    let chain = vec![
        DerivationStep {
            expression: sq_name(side),
            value: sq(side),
        },
        DerivationStep {
            expression: format!("{} + {}", own[0], own[1]),
            value: area(own[0]) + area(own[1]),
        },
        DerivationStep {
            expression: format!("{} + {}", moved[0], moved[1]),
            value: area(moved[0]) + area(moved[1]),
        },
        DerivationStep {
            expression: format!("({}) + ({})", partials[0].expression, partials[1].expression),
            value: partials[0].value + partials[1].value,
        },
        DerivationStep {
            expression: format!("{} + {} - 2*{}", sq_name(hosts[0]), sq_name(hosts[1]), x),
            value: sq(hosts[0]) + sq(hosts[1]) - 2.0 * area(x),
        },
        DerivationStep {
            expression: format!(
                "{} + {} - 2*{}*{}*cos({})",
                sq_name(hosts[0]),
                sq_name(hosts[1]),
                hosts[0].side_name(),
                hosts[1].side_name(),
                angle_name(side)
            ),
            value: p * p + q * q - 2.0 * p * q * m.cos(side),
        },
    ];
    debug_assert_eq!(x.pair(), opposite_pair);
    Derivation {
        side,
        residual: sq(side) - (sq(hosts[0]) + sq(hosts[1]) - 2.0 * area(x)),
        chain,
        partials,
    }
}

fn angle_name(v: Vertex) -> &'static str {
    match v {
        Vertex::A => "alpha",
        Vertex::B => "beta",
        Vertex::C => "gamma",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::triangle_from_sides;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn hosting_table_is_consistent() {
        for side in Vertex::ALL {
            let hosted: Vec<_> = PanelLabel::ALL.iter().filter(|l| l.host() == side).collect();
            assert_eq!(hosted.len(), 2);
        }
        for l in PanelLabel::ALL {
            assert_eq!(l.partner().pair(), l.pair());
            assert_ne!(l.partner().host(), l.host());
            // a class lives on the two sides meeting at its vertex
            assert_ne!(l.host(), l.pair().vertex());
        }
    }

    #[test]
    fn equilateral_panels() {
        let d = build(&triangle_from_sides(1.0, 1.0, 1.0).unwrap());
        for p in &d.panels {
            assert!(close(p.signed_area, 0.5, 1e-15), "{p:?}");
        }
    }

    #[test]
    fn right_triangle_pairs() {
        let d = build(&triangle_from_sides(3.0, 4.0, 5.0).unwrap());
        assert_eq!(
            d.pair_areas,
            PairAreas {
                r: 0.0,
                s: 16.0,
                t: 9.0
            }
        );
        assert_eq!(d.panel(PanelLabel::R1).signed_area, 0.0);
        assert_eq!(d.panel(PanelLabel::R2).signed_area, 0.0);
        let q = d.panel(PanelLabel::R1).quad;
        assert_eq!(q[0], q[1]);
        assert_eq!(q[2], q[3]);
    }

    #[test]
    fn obtuse_pairs() {
        let d = build(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        let PairAreas { r, s, t } = d.pair_areas;
        assert!(close(r, -1.5, 1e-14) && close(s, 10.5, 1e-14) && close(t, 5.5, 1e-14));
        assert!(close(r + t, 4.0, 1e-14) && close(r + s, 9.0, 1e-14) && close(s + t, 16.0, 1e-14));
        for l in [PanelLabel::R1, PanelLabel::R2] {
            assert!(close(d.panel(l).signed_area, -1.5, 1e-14));
        }
        // squares on a and b overrun; the square on c is cut normally
        for l in [PanelLabel::R1, PanelLabel::R2, PanelLabel::T2, PanelLabel::S1] {
            assert!(!d.panel_within_host(l, 1e-9), "{l}");
        }
        assert!(d.panel_within_host(PanelLabel::S2, 1e-9));
        assert!(d.panel_within_host(PanelLabel::T1, 1e-9));
    }

    #[test]
    fn squares_are_exterior() {
        let t = triangle_from_sides(2.0, 3.0, 4.0).unwrap();
        let d = build(&t);
        for sq in &d.squares {
            let opposite = t.vertex(sq.side);
            assert!(!sq.contains(opposite, 0.0));
            assert!(polygon_area(&sq.vertices) > 0.0);
            let len = sq.side_length();
            for i in 0..4 {
                let e = sq.vertices[(i + 1) % 4] - sq.vertices[i];
                let f = sq.vertices[(i + 2) % 4] - sq.vertices[(i + 1) % 4];
                assert!(close(e.norm(), len, 1e-12 * len));
                assert!(e.dot(f).abs() < 1e-12 * len * len);
            }
        }
    }

    #[test]
    fn trig_examples() {
        let m = metrics(&triangle_from_sides(2.0, 2.0, 2.0).unwrap());
        assert!(close(panel_area_trig(Pair::R, &m), 2.0, 1e-14));
        let m = metrics(&triangle_from_sides(3.0, 4.0, 5.0).unwrap());
        assert!(panel_area_trig(Pair::R, &m).abs() < 1e-14);
        let m = metrics(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        assert!(close(panel_area_trig(Pair::S, &m), 10.5, 1e-13));
    }

    #[test]
    fn exact_examples() {
        let t = Triangle::from_coords([3.0, 4.0, 0.0, 0.0, 3.0, 0.0]).unwrap();
        assert_eq!(panel_area_exact(Pair::R, &t), 0.0);
        let t = Triangle::from_coords([1.0, 2.0, 0.0, 0.0, 3.0, 0.0]).unwrap();
        assert_eq!(panel_area_exact(Pair::T, &t), 3.0);
        let p = exact_pair_areas([1i64, 2], [0, 0], [3, 0]);
        let [a2, b2, c2] = exact_squared_sides([1i64, 2], [0, 0], [3, 0]);
        assert_eq!((p.r + p.t, p.r + p.s, p.s + p.t), (a2, b2, c2));
    }

    #[test]
    fn pair_verification() {
        for sides in [(1.0, 1.0, 1.0), (2.0, 3.0, 4.0), (3.0, 4.0, 5.0)] {
            let d = build(&triangle_from_sides(sides.0, sides.1, sides.2).unwrap());
            let r = verify_pairs(&d, 1e-12);
            assert!(r.pass, "{sides:?} {r:?}");
        }
    }

    #[test]
    fn similarity_examples() {
        let t = triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        for v in Vertex::ALL {
            let r = similarity_check(&t, v, 1e-12);
            assert!(close(r.ch, 0.5, 1e-15) && close(r.ck, 0.5, 1e-15) && r.pass);
        }
        let t = triangle_from_sides(2.0, 3.0, 4.0).unwrap();
        let r = similarity_check(&t, Vertex::C, 1e-12);
        assert!(close(r.ch, -0.75, 1e-14), "{r:?}");
        assert!(close(r.ck, -0.5, 1e-14), "{r:?}");
        assert!(r.pass);
        let t = triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        let r = similarity_check(&t, Vertex::C, 1e-12);
        assert!(r.ch.abs() < 1e-15 && r.ck.abs() < 1e-15 && r.residual.abs() < 1e-15);
    }

    #[test]
    fn derivation_obtuse() {
        let d = build(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        let tr = derive_cosine_theorem(&d);
        assert_eq!(tr.chain[1].expression, "R1 + T2");
        assert_eq!(tr.chain[2].expression, "R2 + T1");
        assert_eq!(tr.partials[0].expression, "b^2 - S1");
        assert_eq!(tr.partials[1].expression, "c^2 - S2");
        assert!(close(tr.partials[0].value, -1.5, 1e-13));
        assert!(close(tr.partials[1].value, 5.5, 1e-13));
        assert!(tr.max_chain_deviation() < 1e-13);
        assert!(tr.residual.abs() < 1e-13);
    }

    #[test]
    fn derivation_equilateral_and_pythagorean() {
        let d = build(&triangle_from_sides(1.0, 1.0, 1.0).unwrap());
        let tr = derive_cosine_theorem(&d);
        assert!(close(tr.partials[0].value, 0.5, 1e-15) && close(tr.partials[1].value, 0.5, 1e-15));

        // right angle at A
        let d = build(&triangle_from_sides(5.0, 3.0, 4.0).unwrap());
        let tr = derive_cosine_theorem(&d);
        assert!(close(tr.chain[0].value, 25.0, 1e-13));
        assert!(close(tr.partials[0].value, 9.0, 1e-13));
        assert!(close(tr.partials[1].value, 16.0, 1e-13));
    }

    #[test]
    fn derivation_every_side() {
        let d = build(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        for side in Vertex::ALL {
            let tr = derive_for_side(&d, side);
            assert!(tr.residual.abs() < 1e-12, "{side:?}");
            assert!(tr.max_chain_deviation() < 1e-12, "{side:?}");
        }
        let tr = derive_for_side(&d, Vertex::C);
        assert_eq!(tr.chain[5].expression, "a^2 + b^2 - 2*a*b*cos(gamma)");
    }
}
