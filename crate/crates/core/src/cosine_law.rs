//! The cosine law in its modern form and in Euclid's signed-rectangle form.

use std::f64::consts::PI;

use crate::error::GeometryError;
use crate::geometry::{check_sides, signed_projection, Triangle, TriangleMetrics, Vertex};

/// Side opposite the angle `gamma` enclosed by sides `a` and `b`.
pub fn third_side(a: f64, b: f64, gamma: f64) -> Result<f64, GeometryError> {
    if !(a.is_finite() && b.is_finite() && gamma.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    if a <= 0.0 || b <= 0.0 {
        return Err(GeometryError::NonPositiveSide);
    }
    if gamma <= 0.0 || gamma >= PI {
        return Err(GeometryError::AngleOutOfRange(gamma));
    }
    Ok((a * a + b * b - 2.0 * a * b * gamma.cos()).max(0.0).sqrt())
}

/// Cosine of the angle opposite `c`.
pub fn cos_from_sides(a: f64, b: f64, c: f64) -> Result<f64, GeometryError> {
    check_sides(a, b, c)?;
    Ok(((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclidDefect {
    pub vertex: Vertex,
    /// Signed foot distance `BD` along the base side.
    pub projection: f64,
    /// `2 · |BC| · BD`; negative when the angle at the vertex is obtuse.
    pub defect: f64,
    /// `AC² − AB² − BC² + defect`.
    pub residual: f64,
    /// `AC²`, the natural scale for `residual`.
    pub opposite_squared: f64,
}

/// Euclid's defect at `at`: the base side runs from `at` to `at.next()` and
/// the altitude comes down from `at.prev()`. With `at = B` this is the
/// familiar `AC² = AB² + BC² − 2·BC·BD`; a negative `BD` covers the obtuse
/// case with the same formula.
pub fn euclid_defect(t: &Triangle, at: Vertex) -> EuclidDefect {
    let base_end = at.next();
    let apex = at.prev();
    let projection = signed_projection(t, at, base_end);
    let origin = t.vertex(at);
    let base = t.vertex(base_end) - origin;
    let leg = t.vertex(apex) - origin;
    let defect = 2.0 * base.norm() * projection;
    let opposite_squared = (t.vertex(apex) - t.vertex(base_end)).norm_squared();
    EuclidDefect {
        vertex: at,
        projection,
        defect,
        residual: opposite_squared - leg.norm_squared() - base.norm_squared() + defect,
        opposite_squared,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineIdentityReport {
    /// `a² − b² − c² + 2bc cos α` and its two cyclic forms, indexed by vertex.
    pub residuals: [f64; 3],
    /// `max(a², b², c²)`.
    pub scale: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CosineIdentityReport {
    pub fn max_relative(&self) -> f64 {
        self.residuals.iter().fold(0.0f64, |acc, r| acc.max(r.abs())) / self.scale
    }
}

pub fn verify_cosine_identity(m: &TriangleMetrics, tol: f64) -> CosineIdentityReport {
    let residuals = Vertex::ALL.map(|v| {
        let own = m.side(v);
        let (p, q) = (m.side(v.next()), m.side(v.prev()));
        own * own - p * p - q * q + 2.0 * p * q * m.cos(v)
    });
    let scale = [m.a, m.b, m.c].iter().fold(0.0f64, |acc, s| acc.max(s * s));
    let pass = residuals.iter().all(|r| r.abs() <= tol * scale);
    CosineIdentityReport {
        residuals,
        scale,
        tol,
        pass,
    }
}
