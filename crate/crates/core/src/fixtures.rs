//! Named scenes used by the tests, the acceptance run and the CLI examples.
//! Coordinates are decimal literals converted exactly.

use crate::geom::{Point, Polygon};
use crate::visibility::{Source, VisibilityGraph};

fn ring(c: &[(f64, f64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::f(x, y)).collect()
}

fn polygon(c: &[(f64, f64)]) -> Polygon {
    Polygon::simple(ring(c)).expect("fixture polygon is simple")
}

/// Left chain `l1..l9` of the symmetric guarding funnel; `l9` is the apex.
const FUNNEL_LEFT: [(f64, f64); 9] =
    [(-23.0, 0.0), (-18.5, 0.5), (-16.0, 1.0), (-9.4, 2.8), (-7.3, 4.2), (-3.5, 7.0), (-2.0, 8.5), (-0.5, 13.0), (0.0, 17.0)];

/// 17-vertex symmetric funnel, input order `l1..l9, r8..r1`, base `(0, 16)`.
pub fn guarding_funnel() -> Polygon {
    let mut c = FUNNEL_LEFT.to_vec();
    c.extend(FUNNEL_LEFT[..8].iter().rev().map(|&(x, y)| (-x, y)));
    polygon(&c)
}

pub const GUARDING_FUNNEL_BASE: (usize, usize) = (0, 16);

/// The weak visibility polygon as drawn (25 vertices, base `(0, 24)`).
pub const WEAKVIS_DRAWN: [(f64, f64); 25] = [
    (0.0, 0.0),
    (6.0, 0.9),
    (7.9, 2.0),
    (8.0, 6.0),
    (7.0, 8.0),
    (4.3, 9.0),
    (5.0, 11.5),
    (7.8, 9.5),
    (11.0, 8.0),
    (15.0, 8.5),
    (15.0, 11.5),
    (14.5, 13.0),
    (16.5, 12.0),
    (18.0, 13.0),
    (19.0, 10.0),
    (19.5, 9.0),
    (23.0, 8.0),
    (24.0, 10.5),
    (24.2, 12.0),
    (26.0, 11.0),
    (31.0, 10.0),
    (28.6, 8.0),
    (27.5, 6.0),
    (25.0, 1.5),
    (31.0, 0.0),
];

/// The weak visibility polygon with vertex 23 (index 22) moved to
/// `(27.4, 6)`, where it is reflex as drawn; it has 8 max funnels.
pub fn weakvis_polygon() -> Polygon {
    let mut c = WEAKVIS_DRAWN;
    c[22] = (27.4, 6.0);
    polygon(&c)
}

pub const WEAKVIS_BASE: (usize, usize) = (0, 24);

/// 27-vertex polygon of the decomposition example, base edge `(18, 19)`.
pub fn decomposition_polygon() -> Polygon {
    polygon(&[
        (3.6, 4.0),
        (5.2, 4.2),
        (3.5, 4.7),
        (6.6, 4.4),
        (4.0, 5.0),
        (6.4, 5.0),
        (3.5, 6.0),
        (5.8, 5.8),
        (4.0, 7.0),
        (5.2, 6.6),
        (4.4, 7.6),
        (8.0, 4.0),
        (10.6, 6.8),
        (11.0, 5.0),
        (12.5, 7.5),
        (16.0, 7.0),
        (15.0, 8.0),
        (11.0, 9.0),
        (16.2, 8.0),
        (16.5, 4.0),
        (15.5, 6.5),
        (10.0, 4.0),
        (11.0, 3.8),
        (12.0, 4.0),
        (11.5, 3.5),
        (12.0, 3.0),
        (10.0, 3.6),
    ])
}

pub const DECOMPOSITION_BASE: (usize, usize) = (18, 19);

/// Six-vertex graph `A..F` (indices 0..5): non-planar, no `K5`,
/// 4-colourable as `{A, E}, {B, D}, {C}, {F}`.
pub fn nonplanar_graph() -> VisibilityGraph {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)];
    VisibilityGraph::from_edges(6, &edges, Source::Abstract)
}

/// Hexagon on the unit grid used for the unit disk examples.
pub const UNIT_HEXAGON: [(f64, f64); 6] = [(0.0, 0.0), (0.5, 0.6), (0.8, 1.0), (1.5, 0.5), (1.4, 0.1), (0.9, 0.2)];

pub fn unit_hexagon() -> Polygon {
    polygon(&UNIT_HEXAGON)
}

/// Eleven collinear points 0.16 apart and `u = (0, -0.6)` (index 11), at
/// distance exactly 1 from the outermost two.
pub fn star_points() -> Vec<Point> {
    let mut s: Vec<Point> = (-5..=5).map(|i| Point::f(0.16 * i as f64, 0.0)).collect();
    s.push(Point::f(0.0, -0.6));
    s
}

/// Two polygons whose vertex-to-vertex conflict-free guarding needs two
/// colours.
pub fn v2v_two_color_polygons() -> [Polygon; 2] {
    [
        polygon(&[(0.0, 0.0), (2.5, -0.2), (2.0, 0.0), (1.0, 2.0), (1.0, 1.6), (-0.4, -0.2)]),
        polygon(&[(0.0, 0.0), (1.0, 0.2), (2.0, 0.2), (3.0, 0.0), (3.0, 2.0), (2.0, 1.8), (1.0, 1.8), (0.0, 2.0)]),
    ]
}

/// The 20-vertex bowl: `p2, p1, a1..a9, c9..c1` (indices 0..19).
pub fn bowl() -> Polygon {
    polygon(&[
        (0.06, -0.3),
        (-0.06, -0.3),
        (-1.9, 1.0),
        (-1.9, 1.33),
        (-1.97, 1.66),
        (-2.1, 2.0),
        (-1.1, 2.0),
        (-0.89, 1.66),
        (-0.64, 1.33),
        (-0.3, 1.0),
        (-0.1, 0.9),
        (0.1, 0.9),
        (0.3, 1.0),
        (0.64, 1.33),
        (0.89, 1.66),
        (1.1, 2.0),
        (2.1, 2.0),
        (1.97, 1.66),
        (1.9, 1.33),
        (1.9, 1.0),
    ])
}

pub const BOWL_P1: usize = 1;
pub const BOWL_P2: usize = 0;
