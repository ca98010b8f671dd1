//! Incircle and circumcircle constructions.

use std::f64::consts::FRAC_PI_2;

use crate::geometry::{metrics, Point, Triangle, TriangleMetrics, Vector, Vertex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncircleData {
    pub triangle: Triangle,
    pub center: Point,
    pub radius: f64,
    /// Touch point on each side, indexed by the side's opposite vertex.
    pub tangent_points: [Point; 3],
    /// `s − a`, `s − b`, `s − c`, indexed by vertex.
    pub tangent_lengths: [f64; 3],
}

pub fn incircle(t: &Triangle) -> IncircleData {
    let m = metrics(t);
    let perimeter = m.a + m.b + m.c;
    let weighted = Vertex::ALL.iter().fold(Vector::default(), |acc, &v| {
        acc + (t.vertex(v) - Point::default()) * m.side(v)
    });
    let center = Point::default() + weighted * (1.0 / perimeter);
    let tangent_points =
        Vertex::ALL.map(|side| project_onto_line(center, t.vertex(side.next()), t.vertex(side.prev())));
    IncircleData {
        triangle: *t,
        center,
        radius: m.area / m.s,
        tangent_points,
        tangent_lengths: closed_form_tangent_lengths(&m),
    }
}

fn project_onto_line(p: Point, from: Point, to: Point) -> Point {
    let dir = to - from;
    from.lerp(to, (p - from).dot(dir) / dir.norm_squared())
}

/// `s` minus the opposite side, per vertex.
pub fn tangent_lengths(t: &Triangle) -> [f64; 3] {
    closed_form_tangent_lengths(&metrics(t))
}

fn closed_form_tangent_lengths(m: &TriangleMetrics) -> [f64; 3] {
    Vertex::ALL.map(|v| m.s - m.side(v))
}

/// Distances from each vertex to the touch points on its two sides:
/// `[towards next vertex, towards previous vertex]`.
pub fn measured_tangent_lengths(circle: &IncircleData) -> [[f64; 2]; 3] {
    let t = &circle.triangle;
    Vertex::ALL.map(|v| {
        let p = t.vertex(v);
        // the side from v to v.next() is named by v.prev(), and vice versa
        [
            p.distance(circle.tangent_points[v.prev().index()]),
            p.distance(circle.tangent_points[v.next().index()]),
        ]
    })
}

/// The two parts into which the radius to the circumcenter cuts a vertex angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexSplit {
    /// Between the side towards `vertex.next()` and the ray to the center.
    pub toward_next: f64,
    /// Between the ray to the center and the side towards `vertex.prev()`.
    pub toward_prev: f64,
}

impl VertexSplit {
    pub fn sum(&self) -> f64 {
        self.toward_next + self.toward_prev
    }

    pub fn min(&self) -> f64 {
        self.toward_next.min(self.toward_prev)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumcircleData {
    pub triangle: Triangle,
    pub center: Point,
    /// `abc / (4 · area)`.
    pub radius: f64,
    /// Measured signed splits, indexed by vertex.
    pub splits: [VertexSplit; 3],
}

pub fn circumcircle(t: &Triangle) -> CircumcircleData {
    let m = metrics(t);
    CircumcircleData {
        triangle: *t,
        center: circumcenter(t),
        radius: m.a * m.b * m.c / (4.0 * m.area),
        splits: vertex_splits(t),
    }
}

/// Intersection of the perpendicular bisectors.
pub fn circumcenter(t: &Triangle) -> Point {
    let [a, b, c] = t.vertices();
    let ab = b - a;
    let ac = c - a;
    let (lb, lc) = (ab.norm_squared(), ac.norm_squared());
    let half_inv_det = 0.5 / ab.cross(ac);
    a + Vector::new(
        (lb * ac.y - lc * ab.y) * half_inv_det,
        (lc * ab.x - lb * ac.x) * half_inv_det,
    )
}

/// Signed angles between each side and the ray from its vertex to the
/// circumcenter. A split is negative when the center lies beyond that side's
/// line, i.e. on the far side from the triangle.
pub fn vertex_splits(t: &Triangle) -> [VertexSplit; 3] {
    let o = circumcenter(t);
    Vertex::ALL.map(|v| {
        let p = t.vertex(v);
        let to_next = t.vertex(v.next()) - p;
        let to_prev = t.vertex(v.prev()) - p;
        let ray = o - p;
        VertexSplit {
            toward_next: to_next.cross(ray).atan2(to_next.dot(ray)),
            toward_prev: ray.cross(to_prev).atan2(ray.dot(to_prev)),
        }
    })
}

/// Base angles of the isosceles triangles `OAB`, `OBC`, `OCA`: at `A` the
/// part next to `AB` is `π/2 − γ` and the part next to `AC` is `π/2 − β`.
pub fn closed_form_splits(m: &TriangleMetrics) -> [VertexSplit; 3] {
    Vertex::ALL.map(|v| VertexSplit {
        toward_next: FRAC_PI_2 - m.angle(v.prev()),
        toward_prev: FRAC_PI_2 - m.angle(v.next()),
    })
}
