//! Exterior squares on a triangle's sides, cut by the extended altitudes into
//! six rectangles of pairwise equal signed area, and what that picture says
//! about the cosine law, the system `x + y = L, x + z = M, y + z = N`, and the
//! incircle and circumcircle.

pub mod checks;
pub mod circles;
pub mod cosine_law;
pub mod cuoco;
mod error;
pub mod figure;
pub mod geometry;
pub mod three_sum;

pub use error::{FigureError, GeometryError};
pub use geometry::{Classification, Point, Triangle, TriangleMetrics, Vector, Vertex};
