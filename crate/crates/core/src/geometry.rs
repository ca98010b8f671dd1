//! Planar primitives: points, vectors, triangles and the measurements every
//! construction in this crate is built from.
//!
//! Labeling follows the usual convention: side `a = |BC|` is opposite vertex
//! `A`, `b = |CA|` opposite `B`, `c = |AB|` opposite `C`, and the angles
//! `alpha`, `beta`, `gamma` sit at `A`, `B`, `C`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cosine_law;
use crate::error::GeometryError;

/// Relative threshold below which `|cross| / max_edge²` counts as collinear.
pub const DEGENERACY_EPS: f64 = 1e-12;

/// Default tolerance on the cosine used by [`classify`].
pub const RIGHT_ANGLE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(self, other: Point) -> f64 {
        (other - self).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Affine combination `self + t (other - self)`.
    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl Vector {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Vector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Vector) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Rotation by -90 degrees.
    pub fn perp_cw(self) -> Vector {
        Vector::new(self.y, -self.x)
    }

    pub fn normalized(self) -> Vector {
        self * (1.0 / self.norm())
    }
}

impl Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    fn add(self, rhs: Vector) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        Vector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, k: f64) -> Vector {
        Vector::new(self.x * k, self.y * k)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

/// A triangle vertex. Also names the side opposite it (`Vertex::A` ↔ side `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    /// Cyclic successor: A → B → C → A.
    pub fn next(self) -> Vertex {
        match self {
            Vertex::A => Vertex::B,
            Vertex::B => Vertex::C,
            Vertex::C => Vertex::A,
        }
    }

    pub fn prev(self) -> Vertex {
        self.next().next()
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        }
    }

    /// Lower-case name of the opposite side.
    pub fn side_name(self) -> &'static str {
        match self {
            Vertex::A => "a",
            Vertex::B => "b",
            Vertex::C => "c",
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A non-degenerate triangle, always stored counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a: Point,
    b: Point,
    c: Point,
}

impl Triangle {
    /// Builds a triangle from three vertices. Clockwise input is relabeled by
    /// swapping `B` and `C`; collinear or non-finite input is rejected.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self, GeometryError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let cross = (b - a).cross(c - a);
        let scale = (b - a)
            .norm_squared()
            .max((c - b).norm_squared())
            .max((a - c).norm_squared());
        if scale == 0.0 || cross.abs() <= DEGENERACY_EPS * scale {
            return Err(GeometryError::Degenerate);
        }
        if cross > 0.0 {
            Ok(Self { a, b, c })
        } else {
            Ok(Self { a, b: c, c: b })
        }
    }

    pub fn from_coords(coords: [f64; 6]) -> Result<Self, GeometryError> {
        let [x1, y1, x2, y2, x3, y3] = coords;
        Self::new(Point::new(x1, y1), Point::new(x2, y2), Point::new(x3, y3))
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        match v {
            Vertex::A => self.a,
            Vertex::B => self.b,
            Vertex::C => self.c,
        }
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    /// Length of the side opposite `v`.
    pub fn side(&self, v: Vertex) -> f64 {
        self.vertex(v.next()).distance(self.vertex(v.prev()))
    }

    /// Squared length of the side opposite `v`, computed without a square root.
    pub fn side_squared(&self, v: Vertex) -> f64 {
        (self.vertex(v.prev()) - self.vertex(v.next())).norm_squared()
    }

    /// `(B - A) × (C - A)`; strictly positive after normalization.
    pub fn twice_signed_area(&self) -> f64 {
        (self.b - self.a).cross(self.c - self.a)
    }

    /// Interior angle at `v` in radians, from the two edge vectors.
    pub fn angle(&self, v: Vertex) -> f64 {
        let u = self.vertex(v.next()) - self.vertex(v);
        let w = self.vertex(v.prev()) - self.vertex(v);
        u.cross(w).abs().atan2(u.dot(w))
    }

    /// Strict containment; points on the boundary count as outside.
    pub fn contains_strict(&self, p: Point) -> bool {
        Vertex::ALL.iter().all(|&v| {
            let from = self.vertex(v);
            let to = self.vertex(v.next());
            (to - from).cross(p - from) > 0.0
        })
    }
}

/// Places a triangle with the given side lengths: `B = (0, 0)`, `C = (a, 0)`,
/// `A` in the upper half-plane.
pub fn triangle_from_sides(a: f64, b: f64, c: f64) -> Result<Triangle, GeometryError> {
    check_sides(a, b, c)?;
    let x = (a * a + c * c - b * b) / (2.0 * a);
    let y = (c * c - x * x).max(0.0).sqrt();
    Triangle::new(Point::new(x, y), Point::new(0.0, 0.0), Point::new(a, 0.0))
}

pub(crate) fn check_sides(a: f64, b: f64, c: f64) -> Result<(), GeometryError> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    if a <= 0.0 || b <= 0.0 || c <= 0.0 {
        return Err(GeometryError::NonPositiveSide);
    }
    if a >= b + c || b >= a + c || c >= a + b {
        return Err(GeometryError::TriangleInequalityViolated { a, b, c });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleMetrics {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Semiperimeter.
    pub s: f64,
    pub area: f64,
}

impl TriangleMetrics {
    pub fn side(&self, v: Vertex) -> f64 {
        match v {
            Vertex::A => self.a,
            Vertex::B => self.b,
            Vertex::C => self.c,
        }
    }

    pub fn angle(&self, v: Vertex) -> f64 {
        match v {
            Vertex::A => self.alpha,
            Vertex::B => self.beta,
            Vertex::C => self.gamma,
        }
    }

    pub fn cos(&self, v: Vertex) -> f64 {
        self.angle(v).cos()
    }

    pub fn heron_area(&self) -> f64 {
        let s = self.s;
        (s * (s - self.a) * (s - self.b) * (s - self.c)).max(0.0).sqrt()
    }
}

/// Side lengths, angles, semiperimeter and area.
///
/// Angles come from the edge vectors at each vertex (`atan2(|u × w|, u · w)`),
/// which is numerically equivalent to inverting the cosine law with
/// [`cosine_law::cos_from_sides`] but stays accurate for very small angles.
pub fn metrics(t: &Triangle) -> TriangleMetrics {
    let (a, b, c) = (t.side(Vertex::A), t.side(Vertex::B), t.side(Vertex::C));
    TriangleMetrics {
        a,
        b,
        c,
        alpha: t.angle(Vertex::A),
        beta: t.angle(Vertex::B),
        gamma: t.angle(Vertex::C),
        s: 0.5 * (a + b + c),
        area: 0.5 * t.twice_signed_area(),
    }
}

/// Angles recovered purely from side lengths through the inverted cosine law.
pub fn angles_from_sides(a: f64, b: f64, c: f64) -> Result<[f64; 3], GeometryError> {
    Ok([
        cosine_law::cos_from_sides(b, c, a)?.acos(),
        cosine_law::cos_from_sides(c, a, b)?.acos(),
        cosine_law::cos_from_sides(a, b, c)?.acos(),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Acute,
    Right(Vertex),
    Obtuse(Vertex),
}

impl Classification {
    pub fn is_acute(self) -> bool {
        matches!(self, Classification::Acute)
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Acute => "acute",
            Classification::Right(_) => "right",
            Classification::Obtuse(_) => "obtuse",
        }
    }

    pub fn vertex(self) -> Option<Vertex> {
        match self {
            Classification::Acute => None,
            Classification::Right(v) | Classification::Obtuse(v) => Some(v),
        }
    }
}

/// Classifies by the smallest vertex cosine, with tolerance `eps` on the cosine.
pub fn classify(m: &TriangleMetrics, eps: f64) -> Classification {
    let (v, cos) = Vertex::ALL
        .iter()
        .map(|&v| (v, m.cos(v)))
        .fold(
            (Vertex::A, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        );
    if cos < -eps {
        Classification::Obtuse(v)
    } else if cos <= eps {
        Classification::Right(v)
    } else {
        Classification::Acute
    }
}

/// Orthogonal projection of `from` onto the line of the opposite side.
///
/// The side runs from `from.next()` to `from.prev()`; the returned parameter
/// is 0 at the first endpoint and 1 at the second, and falls outside `[0, 1]`
/// when the foot lands on the extension of the side.
pub fn foot_of_altitude(t: &Triangle, from: Vertex) -> (Point, f64) {
    let p = t.vertex(from.next());
    let q = t.vertex(from.prev());
    let dir = q - p;
    let tparam = (t.vertex(from) - p).dot(dir) / dir.norm_squared();
    (p.lerp(q, tparam), tparam)
}

/// Signed length of the projection, at vertex `at`, of the side towards the
/// third vertex onto the side towards `onto`. Negative iff the angle at `at`
/// is obtuse.
///
/// # Panics
/// If `onto == at`.
pub fn signed_projection(t: &Triangle, at: Vertex, onto: Vertex) -> f64 {
    assert_ne!(at, onto, "projection needs two distinct vertices");
    let other = if onto == at.next() { at.prev() } else { at.next() };
    let origin = t.vertex(at);
    let u = t.vertex(other) - origin;
    let w = t.vertex(onto) - origin;
    u.dot(w) / w.norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn from_sides_345() {
        let t = triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        assert_eq!(t.vertex(Vertex::B), Point::new(0.0, 0.0));
        assert_eq!(t.vertex(Vertex::C), Point::new(3.0, 0.0));
        let a = t.vertex(Vertex::A);
        assert!(close(a.x, 3.0, 1e-15) && close(a.y, 4.0, 1e-15));
    }

    #[test]
    fn from_sides_equilateral() {
        let t = triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        let a = t.vertex(Vertex::A);
        assert!(close(a.x, 0.5, 1e-15));
        assert!(close(a.y, 3f64.sqrt() / 2.0, 1e-15));
        assert!(t.twice_signed_area() > 0.0);
    }

    #[test]
    fn from_sides_rejects_bad_input() {
        assert!(matches!(
            triangle_from_sides(1.0, 2.0, 5.0),
            Err(GeometryError::TriangleInequalityViolated { .. })
        ));
        assert!(matches!(
            triangle_from_sides(1.0, 1.0, 2.0),
            Err(GeometryError::TriangleInequalityViolated { .. })
        ));
        assert_eq!(triangle_from_sides(0.0, 1.0, 1.0), Err(GeometryError::NonPositiveSide));
        assert_eq!(triangle_from_sides(-1.0, 1.0, 1.0), Err(GeometryError::NonPositiveSide));
        assert_eq!(triangle_from_sides(f64::NAN, 1.0, 1.0), Err(GeometryError::NonFinite));
    }

    #[test]
    fn clockwise_input_is_relabeled() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 0.0)).unwrap();
        assert!(t.twice_signed_area() > 0.0);
        assert_eq!(t.vertex(Vertex::A), Point::new(0.0, 0.0));
        assert_eq!(t.vertex(Vertex::B), Point::new(1.0, 0.0));
        assert_eq!(t.vertex(Vertex::C), Point::new(0.0, 1.0));
    }

    #[test]
    fn collinear_and_nonfinite_rejected() {
        let p = Point::new;
        assert_eq!(
            Triangle::new(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)),
            Err(GeometryError::Degenerate)
        );
        assert_eq!(
            Triangle::new(p(1.0, 1.0), p(1.0, 1.0), p(1.0, 1.0)),
            Err(GeometryError::Degenerate)
        );
        assert_eq!(
            Triangle::new(p(0.0, 0.0), p(f64::INFINITY, 1.0), p(2.0, 0.0)),
            Err(GeometryError::NonFinite)
        );
    }

    #[test]
    fn metrics_examples() {
        let m = metrics(&triangle_from_sides(1.0, 1.0, 1.0).unwrap());
        for v in Vertex::ALL {
            assert!(close(m.angle(v), PI / 3.0, 1e-14));
        }
        let m = metrics(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        assert!(close(m.gamma.cos(), -0.25, 1e-14));
        let m = metrics(&triangle_from_sides(3.0, 4.0, 5.0).unwrap());
        assert!(close(m.gamma, PI / 2.0, 1e-15));
        assert!(close(m.area, 6.0, 1e-14));
        assert!(close(m.heron_area(), 6.0, 1e-13));
        assert!(close(m.s, 6.0, 1e-15));
    }

    #[test]
    fn angles_from_sides_matches_metrics() {
        let m = metrics(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        let [al, be, ga] = angles_from_sides(2.0, 3.0, 4.0).unwrap();
        assert!(close(al, m.alpha, 1e-14) && close(be, m.beta, 1e-14) && close(ga, m.gamma, 1e-14));
    }

    #[test]
    fn classify_examples() {
        let eps = RIGHT_ANGLE_EPS;
        let m = metrics(&triangle_from_sides(3.0, 4.0, 5.0).unwrap());
        assert_eq!(classify(&m, eps), Classification::Right(Vertex::C));
        let m = metrics(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        assert_eq!(classify(&m, eps), Classification::Obtuse(Vertex::C));
        let m = metrics(&triangle_from_sides(4.0, 5.0, 6.0).unwrap());
        assert_eq!(classify(&m, eps), Classification::Acute);
        assert!(close(m.gamma.cos(), 0.125, 1e-14));
    }

    #[test]
    fn foot_examples() {
        let t = Triangle::from_coords([1.0, 2.0, 0.0, 0.0, 3.0, 0.0]).unwrap();
        let (foot, tp) = foot_of_altitude(&t, Vertex::A);
        assert_eq!(foot, Point::new(1.0, 0.0));
        assert!(close(tp, 1.0 / 3.0, 1e-15));

        let t = triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        let (foot, tp) = foot_of_altitude(&t, Vertex::A);
        assert!(close(foot.x, 0.5, 1e-15) && close(foot.y, 0.0, 1e-15));
        assert!(close(tp, 0.5, 1e-15));

        let t = Triangle::from_coords([2.0, 1.0, 0.0, 0.0, 1.0, 0.0]).unwrap();
        let (foot, tp) = foot_of_altitude(&t, Vertex::A);
        assert_eq!(foot, Point::new(2.0, 0.0));
        assert_eq!(tp, 2.0);
    }

    #[test]
    fn projection_examples() {
        let t = triangle_from_sides(3.0, 4.0, 5.0).unwrap();
        assert!(signed_projection(&t, Vertex::C, Vertex::B).abs() < 1e-15);
        let t = triangle_from_sides(2.0, 3.0, 4.0).unwrap();
        // CA onto CB
        assert!(close(signed_projection(&t, Vertex::C, Vertex::B), -0.75, 1e-14));
        let t = Triangle::from_coords([1.0, 2.0, 0.0, 0.0, 3.0, 0.0]).unwrap();
        assert_eq!(signed_projection(&t, Vertex::B, Vertex::C), 1.0);
    }

    #[test]
    fn contains_strict_basic() {
        let t = triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        assert!(t.contains_strict(Point::new(0.5, 0.2)));
        assert!(!t.contains_strict(Point::new(0.5, -0.2)));
        assert!(!t.contains_strict(Point::new(0.5, 0.0)));
    }
}
