use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GeometryError {
    #[error("coordinates and lengths must be finite")]
    NonFinite,
    #[error("side lengths must be positive")]
    NonPositiveSide,
    #[error("sides {a}, {b}, {c} violate the strict triangle inequality")]
    TriangleInequalityViolated { a: f64, b: f64, c: f64 },
    #[error("the three points are collinear")]
    Degenerate,
    #[error("angle {0} rad is outside the open interval (0, pi)")]
    AngleOutOfRange(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FigureError {
    #[error("figure kind `{kind}` cannot be drawn from {data}")]
    KindMismatch { kind: &'static str, data: &'static str },
    #[error("precision {0} is outside 1..=12")]
    InvalidPrecision(u8),
}
