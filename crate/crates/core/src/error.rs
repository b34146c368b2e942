use thiserror::Error;

/// The first violated polygon invariant found by [`crate::geom::Polygon::validate`].
///
/// Ring 0 is the outer boundary, ring `h + 1` is hole `h`. Edge `(i, j)` names
/// the two ring positions it joins, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Diagnostic {
    #[error("ring {ring} has {count} vertices, at least 3 are required")]
    TooFewVertices { ring: usize, count: usize },
    #[error("ring {ring} repeats a vertex at positions {i} and {j}")]
    RepeatedVertex { ring: usize, i: usize, j: usize },
    #[error("ring {ring} self-intersects at edge pair ({}, {}), ({}, {})", e1.0, e1.1, e2.0, e2.1)]
    SelfIntersection { ring: usize, e1: (usize, usize), e2: (usize, usize) },
    #[error("ring {ring} has zero area")]
    ZeroArea { ring: usize },
    #[error("ring {ring} has the wrong orientation (outer must be counterclockwise, holes clockwise)")]
    WrongOrientation { ring: usize },
    #[error("hole {hole} is not strictly inside the outer ring (vertex {vertex})")]
    HoleOutside { hole: usize, vertex: usize },
    #[error("holes {a} and {b} intersect")]
    HolesOverlap { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(#[from] Diagnostic),
    #[error("vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a funnel: {0}")]
    NotAFunnel(String),
    #[error("polygon is not weakly visible from base edge ({u}, {v})")]
    NotWeaklyVisible { u: usize, v: usize },
    #[error("input size {n} exceeds the brute-force limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("point lies outside the polygon")]
    PointOutside,
    #[error("polygon has holes; this operation needs a simple polygon")]
    HasHoles,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
