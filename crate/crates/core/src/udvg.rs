//! Unit disk visibility graphs: mutual visibility plus a distance cap.

use crate::error::{Error, Result};
use crate::geom::{on_segment, proper_cross, segments_intersect, Point, Polygon, Segment, Q};
use crate::visibility::{visibility_graph, Source, VisibilityGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitDiskVisibilityGraph {
    pub graph: VisibilityGraph,
    /// Pairs farther apart than this are never adjacent (closed comparison).
    pub threshold: Q,
}

pub fn unit() -> Q {
    Q::from_integer(1.into())
}

fn near(p: &Point, q: &Point, threshold: &Q) -> bool {
    p.dist2(q) <= threshold * threshold
}

fn check_threshold(t: &Q) -> Result<()> {
    if *t < Q::from_integer(0.into()) {
        return Err(Error::Invalid("negative distance threshold".into()));
    }
    Ok(())
}

/// Points see each other unless a third point lies on the open segment
/// between them.
pub fn udvg_points(pts: &[Point], threshold: &Q) -> Result<UnitDiskVisibilityGraph> {
    check_threshold(threshold)?;
    let n = pts.len();
    for i in 0..n {
        if let Some(j) = (i + 1..n).find(|&j| pts[i] == pts[j]) {
            return Err(Error::Invalid(format!("points {i} and {j} coincide")));
        }
    }
    let mut g = VisibilityGraph::empty(n, Source::PointSet);
    for a in 0..n {
        for b in a + 1..n {
            let blocked = (0..n).any(|c| c != a && c != b && on_segment(&pts[c], &pts[a], &pts[b]));
            if !blocked && near(&pts[a], &pts[b], threshold) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(UnitDiskVisibilityGraph { graph: g, threshold: threshold.clone() })
}

/// Vertices are segment endpoints: `2k` and `2k + 1` for segment `k`.
pub fn segment_endpoints(segs: &[Segment]) -> Vec<Point> {
    segs.iter().flat_map(|s| [s.a.clone(), s.b.clone()]).collect()
}

/// Endpoints see each other when the sight segment crosses no input
/// segment and passes through no other endpoint.
pub fn udvg_segments(segs: &[Segment], threshold: &Q) -> Result<UnitDiskVisibilityGraph> {
    check_threshold(threshold)?;
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if segments_intersect(&segs[i].a, &segs[i].b, &segs[j].a, &segs[j].b) {
                return Err(Error::Invalid(format!("segments {i} and {j} intersect")));
            }
        }
    }
    let pts = segment_endpoints(segs);
    let n = pts.len();
    let mut g = VisibilityGraph::empty(n, Source::SegmentEndpoints);
    for a in 0..n {
        for b in a + 1..n {
            let (p, q) = (&pts[a], &pts[b]);
            let visible = b == a + 1 && a % 2 == 0
                || (!(0..n).any(|c| c != a && c != b && on_segment(&pts[c], p, q))
                    && !segs.iter().any(|s| proper_cross(p, q, &s.a, &s.b)));
            if visible && near(p, q, threshold) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(UnitDiskVisibilityGraph { graph: g, threshold: threshold.clone() })
}

/// Vertex visibility inside the polygon (holes allowed), capped by distance.
pub fn udvg_polygon(poly: &Polygon, threshold: &Q) -> Result<UnitDiskVisibilityGraph> {
    check_threshold(threshold)?;
    poly.validate()?;
    let vis = visibility_graph(poly);
    let mut g = VisibilityGraph::empty(poly.n(), Source::PolygonVertices);
    for (a, b) in vis.edges() {
        if near(poly.vertex(a), poly.vertex(b), threshold) {
            g.add_edge(a, b);
        }
    }
    Ok(UnitDiskVisibilityGraph { graph: g, threshold: threshold.clone() })
}

/// A vertex and six pairwise non-adjacent neighbours, if any exist
/// (exhaustive search).
pub fn find_induced_k16(g: &VisibilityGraph) -> Option<(usize, [usize; 6])> {
    fn grow(g: &VisibilityGraph, cand: &[usize], acc: &mut Vec<usize>) -> bool {
        if acc.len() == 6 {
            return true;
        }
        for (i, &c) in cand.iter().enumerate() {
            if acc.iter().all(|&a| !g.has_edge(a, c)) {
                acc.push(c);
                if grow(g, &cand[i + 1..], acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    (0..g.n()).find_map(|c| {
        let nb: Vec<usize> = g.neighbours(c).collect();
        let mut acc = Vec::new();
        grow(g, &nb, &mut acc).then(|| (c, acc.try_into().unwrap()))
    })
}
