//! Visibility graphs and visibility polygons.
//!
//! Visibility polygons are built by pocket removal: every window (the
//! extension of a sight line past a reflex vertex into the interior) cuts the
//! polygon in two, and the side that cannot be seen is dropped. All window
//! endpoints are exact ray/edge intersections.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::{
    line_params, locate_in_ring, on_segment, orient_sign, param_on, point_in_polygon, q, segment_between, segment_in_ring,
    Location, Point, Polygon, Q,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    PolygonVertices,
    PointSet,
    SegmentEndpoints,
    Abstract,
}

/// Symmetric, irreflexive adjacency over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilityGraph {
    n: usize,
    adj: Vec<Vec<bool>>,
    pub source: Source,
}

impl VisibilityGraph {
    pub fn empty(n: usize, source: Source) -> Self {
        VisibilityGraph { n, adj: vec![vec![false; n]; n], source }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)], source: Source) -> Self {
        let mut g = VisibilityGraph::empty(n, source);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a][b] = true;
            self.adj[b][a] = true;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn neighbours(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&b| self.adj[a][b])
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].iter().filter(|&&x| x).count()
    }

    /// Edges `(a, b)` with `a < b`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Closed neighbourhoods as bitmasks (`n <= 64`).
    pub fn closed_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n)
            .map(|a| {
                let mut m = 1u64 << a;
                for b in self.neighbours(a) {
                    m |= 1 << b;
                }
                m
            })
            .collect()
    }

    /// Subgraph induced by `keep`, re-indexed in the given order.
    pub fn induced(&self, keep: &[usize]) -> VisibilityGraph {
        let mut g = VisibilityGraph::empty(keep.len(), self.source);
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if i < j && self.adj[a][b] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in self.neighbours(a) {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Closed sight segment between vertices `i` and `j` stays in the closed
/// polygon. Vertices lying on the segment never block.
pub fn vertex_visible(poly: &Polygon, i: usize, j: usize) -> Result<bool> {
    let n = poly.n();
    for k in [i, j] {
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
    }
    if i == j {
        return Err(Error::Invalid("vertex_visible needs two distinct vertices".into()));
    }
    Ok(segment_between(poly.vertex(i), poly.vertex(j), poly))
}

pub fn visibility_graph(poly: &Polygon) -> VisibilityGraph {
    let n = poly.n();
    let mut g = VisibilityGraph::empty(n, Source::PolygonVertices);
    for (a, b) in poly.edges() {
        g.add_edge(a, b);
    }
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) && segment_between(poly.vertex(a), poly.vertex(b), poly) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// A counterclockwise simple ring whose points remember which vertex of an
/// ambient polygon they are (`None` for window endpoints on edge interiors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub pts: Vec<Point>,
    pub origin: Vec<Option<usize>>,
}

impl Region {
    pub fn from_polygon(poly: &Polygon) -> Region {
        let ring = poly.outer_ring();
        Region { pts: ring.iter().map(|&i| poly.vertex(i).clone()).collect(), origin: ring.iter().map(|&i| Some(i)).collect() }
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    pub fn area2(&self) -> Q {
        crate::geom::area2(&self.pts)
    }

    /// Rotates so that position `k` comes first.
    pub fn rotated(&self, k: usize) -> Region {
        let mut r = self.clone();
        r.pts.rotate_left(k);
        r.origin.rotate_left(k);
        r
    }

    pub fn position_of_origin(&self, v: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == Some(v))
    }

    pub fn position_of_point(&self, p: &Point) -> Option<usize> {
        self.pts.iter().position(|x| x == p)
    }

    /// Polygon over this ring; vertex `k` of the result is ring position `k`.
    pub fn to_polygon(&self) -> Result<Polygon> {
        Polygon::simple(self.pts.clone()).map_err(|e| Error::Internal(format!("derived region is not a valid polygon: {e}")))
    }

    pub fn locate(&self, p: &Point) -> Location {
        locate_in_ring(p, &self.pts)
    }

    /// Drops consecutive duplicate points.
    fn dedup(mut self) -> Region {
        let mut pts: Vec<Point> = Vec::with_capacity(self.pts.len());
        let mut origin = Vec::with_capacity(self.pts.len());
        for (p, o) in self.pts.drain(..).zip(self.origin.drain(..)) {
            if pts.last() == Some(&p) {
                if origin.last() == Some(&None) {
                    *origin.last_mut().unwrap() = o;
                }
                continue;
            }
            pts.push(p);
            origin.push(o);
        }
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
            let o = origin.pop().unwrap();
            if origin[0].is_none() {
                origin[0] = o;
            }
        }
        Region { pts, origin }
    }
}

/// Position on a ring: edge `edge` (from point `edge` to `edge + 1`) at
/// parameter `t` in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RingPos {
    pub edge: usize,
    pub t: Q,
}

impl RingPos {
    fn vertex(i: usize) -> RingPos {
        RingPos { edge: i, t: Q::zero() }
    }
}

/// A cut through the polygon: the straight segment from ring position
/// `start` to `end`, removing the boundary strictly between them
/// (counterclockwise).
#[derive(Debug, Clone)]
pub struct Pocket {
    pub start: RingPos,
    pub end: RingPos,
    pub start_pt: Point,
    pub end_pt: Point,
}

/// A visible region together with the pockets that were cut away. Each
/// pocket ring is counterclockwise and starts with the window, as
/// `[end, start, ...]`, so its window is edge 0 with the pocket on its left.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub region: Region,
    pub pockets: Vec<Region>,
    /// For each pocket, the index in `region` of the window's first point
    /// (the window is `region[k] -> region[k + 1]`).
    pub windows: Vec<usize>,
}

fn point_at(ring: &Region, pos: &RingPos) -> Point {
    let n = ring.len();
    if pos.t.is_zero() {
        ring.pts[pos.edge].clone()
    } else {
        ring.pts[pos.edge].lerp(&ring.pts[(pos.edge + 1) % n], &pos.t)
    }
}

fn origin_at(ring: &Region, pos: &RingPos) -> Option<usize> {
    if pos.t.is_zero() {
        ring.origin[pos.edge]
    } else {
        None
    }
}

/// First boundary contact strictly beyond `r` along direction `d`.
/// Returns the ray parameter and ring position.
fn first_contact(ring: &Region, r: &Point, d: &Point) -> Option<(Q, RingPos)> {
    let n = ring.len();
    let far = r.add(d);
    let mut best: Option<(Q, RingPos)> = None;
    let consider = |s: Q, pos: RingPos, best: &mut Option<(Q, RingPos)>| {
        if s > Q::zero() && best.as_ref().map_or(true, |(b, _)| s < *b) {
            *best = Some((s, pos));
        }
    };
    for e in 0..n {
        let a = &ring.pts[e];
        let b = &ring.pts[(e + 1) % n];
        match line_params(r, &far, a, b) {
            Some((s, u)) => {
                if u >= Q::zero() && u <= Q::one() {
                    let pos = if u == Q::one() { RingPos::vertex((e + 1) % n) } else { RingPos { edge: e, t: u } };
                    consider(s, pos, &mut best);
                }
            }
            None => {
                if orient_sign(r, &far, a) == 0 {
                    consider(param_on(a, r, &far), RingPos::vertex(e), &mut best);
                    consider(param_on(b, r, &far), RingPos::vertex((e + 1) % n), &mut best);
                }
            }
        }
    }
    best
}

/// Window beyond ring vertex `k` along direction `d`, if the ray continues
/// into the interior past the vertex.
fn window_from(ring: &Region, k: usize, d: &Point) -> Option<RingPos> {
    let r = &ring.pts[k];
    let (s, pos) = first_contact(ring, r, d)?;
    let mid = r.add(&d.scale(&(s / q(2))));
    if locate_in_ring(&mid, &ring.pts) != Location::Interior {
        return None;
    }
    Some(pos)
}

/// Side (+1 left, -1 right) on which both ring edges at `k` lie relative to
/// the directed line through `k` with direction `d`; `None` if they
/// straddle it or both lie on it.
fn edge_side(ring: &Region, k: usize, d: &Point) -> Option<i8> {
    let n = ring.len();
    let r = &ring.pts[k];
    let far = r.add(d);
    let a = orient_sign(r, &far, &ring.pts[(k + n - 1) % n]);
    let b = orient_sign(r, &far, &ring.pts[(k + 1) % n]);
    if a * b < 0 || (a == 0 && b == 0) {
        None
    } else if a > 0 || b > 0 {
        Some(1)
    } else {
        Some(-1)
    }
}

/// Counterclockwise offset of `p` from `from` on a ring of `n` edges.
fn offset(from: &RingPos, p: &RingPos, n: usize) -> Q {
    let v = |x: &RingPos| q(x.edge as i64) + &x.t;
    let mut d = v(p) - v(from);
    if d < Q::zero() {
        d += q(n as i64);
    }
    d
}

fn arc_contains_strictly(s: &RingPos, e: &RingPos, p: &RingPos, n: usize) -> bool {
    let len = offset(s, e, n);
    let o = offset(s, p, n);
    o > Q::zero() && o < len
}

/// Ring of the piece bounded by the boundary arc from `s` to `e`
/// (counterclockwise) and the chord `e -> s`.
fn arc_piece(ring: &Region, s: &RingPos, e: &RingPos) -> Region {
    let n = ring.len();
    let mut pts = vec![point_at(ring, s)];
    let mut origin = vec![origin_at(ring, s)];
    let mut k = (s.edge + 1) % n;
    // Vertices strictly inside the arc.
    for _ in 0..n {
        let pos = RingPos::vertex(k);
        if !arc_contains_strictly(s, e, &pos, n) {
            break;
        }
        pts.push(ring.pts[k].clone());
        origin.push(ring.origin[k]);
        k = (k + 1) % n;
    }
    pts.push(point_at(ring, e));
    origin.push(origin_at(ring, e));
    Region { pts, origin }.dedup()
}

/// Removes the given pockets (arcs `start -> end`) from `ring`, keeping only
/// inclusion-maximal ones.
pub fn cut_pockets(ring: &Region, mut arcs: Vec<(RingPos, RingPos)>) -> CutResult {
    let n = ring.len();
    arcs.retain(|(s, e)| s != e);
    arcs.sort();
    arcs.dedup();
    let contains = |a: &(RingPos, RingPos), b: &(RingPos, RingPos)| {
        let len = offset(&a.0, &a.1, n);
        let os = offset(&a.0, &b.0, n);
        let oe = offset(&a.0, &b.1, n);
        os <= len && oe <= len && os <= oe
    };
    let mut maximal: Vec<(RingPos, RingPos)> = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        let dominated = arcs.iter().enumerate().any(|(j, b)| j != i && contains(b, a) && !(contains(a, b) && j > i));
        if !dominated {
            maximal.push(a.clone());
        }
    }
    // Event list: surviving vertices and window endpoints, sorted by position.
    #[derive(Clone)]
    struct Ev {
        pos: RingPos,
        kind: u8, // 0 window end, 1 vertex, 2 window start
        pocket: usize,
    }
    let mut evs: Vec<Ev> = Vec::new();
    for k in 0..n {
        let pos = RingPos::vertex(k);
        if !maximal.iter().any(|(s, e)| arc_contains_strictly(s, e, &pos, n)) {
            evs.push(Ev { pos, kind: 1, pocket: usize::MAX });
        }
    }
    for (i, (s, e)) in maximal.iter().enumerate() {
        evs.push(Ev { pos: s.clone(), kind: 2, pocket: i });
        evs.push(Ev { pos: e.clone(), kind: 0, pocket: i });
    }
    evs.sort_by(|a, b| a.pos.cmp(&b.pos).then(a.kind.cmp(&b.kind)));
    let mut pts = Vec::new();
    let mut origin = Vec::new();
    let mut start_idx = vec![usize::MAX; maximal.len()];
    for ev in &evs {
        let p = point_at(ring, &ev.pos);
        if pts.last() != Some(&p) {
            pts.push(p);
            origin.push(origin_at(ring, &ev.pos));
        }
        if ev.kind == 2 {
            start_idx[ev.pocket] = pts.len() - 1;
        }
    }
    let mut region = Region { pts, origin };
    // Wrap-around duplicate.
    if region.pts.len() > 1 && region.pts.first() == region.pts.last() {
        region.pts.pop();
        region.origin.pop();
        for s in start_idx.iter_mut() {
            if *s == region.pts.len() {
                *s = 0;
            }
        }
    }
    let pockets = maximal
        .iter()
        .map(|(s, e)| {
            let piece = arc_piece(ring, s, e);
            // Windows first: [end, start, ...].
            let m = piece.len();
            piece.rotated(m - 1)
        })
        .collect();
    CutResult { region, pockets, windows: start_idx }
}

/// Pocket arc of the window from ring vertex `k` to `w`: the piece for
/// which `p_side` holds is kept, the other one is the pocket.
fn orient_arc(ring: &Region, k: usize, w: RingPos, p_side: impl Fn(&Region) -> bool) -> (RingPos, RingPos) {
    let rk = RingPos::vertex(k);
    let piece1 = arc_piece(ring, &rk, &w);
    if p_side(&piece1) {
        // Reference lies in piece 1: the pocket is the other arc.
        (w, rk)
    } else {
        (rk, w)
    }
}

/// Visibility region of a point `p` in the closed simple ring.
pub fn visibility_region_of_point(ring: &Region, p: &Point) -> Result<CutResult> {
    if locate_in_ring(p, &ring.pts) == Location::Exterior {
        return Err(Error::PointOutside);
    }
    let n = ring.len();
    let mut arcs = Vec::new();
    for k in 0..n {
        let r = &ring.pts[k];
        if r == p || !segment_in_ring(p, r, &ring.pts) {
            continue;
        }
        let d = r.sub(p);
        if edge_side(ring, k, &d).is_none() {
            continue;
        }
        if let Some(w) = window_from(ring, k, &d) {
            arcs.push(orient_arc(ring, k, w, |piece| locate_in_ring(p, &piece.pts) != Location::Exterior));
        }
    }
    Ok(cut_pockets(ring, arcs))
}

/// Weak visibility region of the ring's edge 0 (`pts[0] -> pts[1]`).
pub fn weak_visibility_region(ring: &Region) -> CutResult {
    let n = ring.len();
    let u = &ring.pts[0];
    let v = &ring.pts[1];
    let s_at = |t: &Q| u.lerp(v, t);
    let half = RingPos { edge: 0, t: crate::geom::qf(1, 2) };
    let mut arcs = Vec::new();
    for k in 2..n {
        let r = &ring.pts[k];
        if orient_sign(u, v, r) == 0 {
            // Sight lines from the base all run along one line.
            let near = if r.dist2(u) < r.dist2(v) { u } else { v };
            if on_segment(r, u, v) || !segment_in_ring(near, r, &ring.pts) {
                continue;
            }
            let d = r.sub(near);
            if edge_side(ring, k, &d).is_some() {
                if let Some(w) = window_from(ring, k, &d) {
                    arcs.push(pocket_away_from(ring, k, w, &half));
                }
            }
            continue;
        }
        let mut ts: Vec<Q> = vec![Q::zero(), Q::one()];
        for (j, qv) in ring.pts.iter().enumerate() {
            if j == k || qv == r {
                continue;
            }
            if let Some((t, _)) = line_params(u, v, r, qv) {
                if t > Q::zero() && t < Q::one() {
                    ts.push(t);
                }
            }
        }
        ts.sort();
        ts.dedup();
        let mut all = ts.clone();
        for w in ts.windows(2) {
            all.push((&w[0] + &w[1]) / q(2));
        }
        all.sort();
        let vis: Vec<&Q> = all.iter().filter(|t| segment_in_ring(&s_at(t), r, &ring.pts)).collect();
        let (Some(&t1), Some(&t2)) = (vis.first(), vis.last()) else { continue };
        for (t, from_low) in [(t1, true), (t2, false)] {
            let s = s_at(t);
            let d = r.sub(&s);
            // Side of the line on which the rest of the visible base lies.
            let hidden = if from_low {
                if &s != v { orient_sign(&s, r, v) } else { -orient_sign(&s, r, u) }
            } else if &s != u {
                orient_sign(&s, r, u)
            } else {
                -orient_sign(&s, r, v)
            };
            if hidden == 0 {
                continue;
            }
            if edge_side(ring, k, &d) != Some(hidden) {
                continue;
            }
            if let Some(w) = window_from(ring, k, &d) {
                arcs.push(pocket_away_from(ring, k, w, &half));
            }
        }
    }
    cut_pockets(ring, arcs)
}

fn pocket_away_from(ring: &Region, k: usize, w: RingPos, base_mid: &RingPos) -> (RingPos, RingPos) {
    let rk = RingPos::vertex(k);
    if arc_contains_strictly(&rk, &w, base_mid, ring.len()) {
        (w, rk)
    } else {
        (rk, w)
    }
}

pub fn visibility_polygon_of_point(poly: &Polygon, p: &Point) -> Result<Polygon> {
    poly.require_simple()?;
    if point_in_polygon(p, poly) == Location::Exterior {
        return Err(Error::PointOutside);
    }
    visibility_region_of_point(&Region::from_polygon(poly), p)?.region.to_polygon()
}

/// Inserts point `p` (on the boundary) into the ring, returning its position.
fn insert_boundary_point(ring: &mut Region, p: &Point) -> Option<usize> {
    if let Some(k) = ring.position_of_point(p) {
        return Some(k);
    }
    let n = ring.len();
    for e in 0..n {
        if on_segment(p, &ring.pts[e], &ring.pts[(e + 1) % n]) {
            ring.pts.insert(e + 1, p.clone());
            ring.origin.insert(e + 1, None);
            return Some(e + 1);
        }
    }
    None
}

/// Weak visibility region of a segment `ab` whose endpoints lie on the
/// boundary and whose interior lies in the closed region: either a boundary
/// edge (or part of one), or a chord, in which case both sides are unioned.
pub fn weak_visibility_region_of_segment(ring: &Region, a: &Point, b: &Point) -> Result<Region> {
    if a == b || !segment_in_ring(a, b, &ring.pts) {
        return Err(Error::Invalid("segment is not inside the polygon".into()));
    }
    let mut r = ring.clone();
    let ia = insert_boundary_point(&mut r, a).ok_or_else(|| Error::Invalid("segment endpoint not on boundary".into()))?;
    let ib0 = insert_boundary_point(&mut r, b).ok_or_else(|| Error::Invalid("segment endpoint not on boundary".into()))?;
    let ia = if r.pts[ia] == *a { ia } else { r.position_of_point(a).unwrap() };
    let ib = if r.pts[ib0] == *b { ib0 } else { r.position_of_point(b).unwrap() };
    let n = r.len();
    if (ia + 1) % n == ib {
        return Ok(weak_visibility_region(&r.rotated(ia)).region);
    }
    if (ib + 1) % n == ia {
        return Ok(weak_visibility_region(&r.rotated(ib)).region);
    }
    if locate_in_ring(&a.midpoint(b), &r.pts) == Location::Boundary {
        return Err(Error::Invalid("segment runs along several boundary edges".into()));
    }
    // Chord: split into the piece a..b (closed by b -> a) and b..a.
    let piece = |from: usize, to: usize| -> Region {
        let mut pts = Vec::new();
        let mut origin = Vec::new();
        let mut k = from;
        loop {
            pts.push(r.pts[k].clone());
            origin.push(r.origin[k]);
            if k == to {
                break;
            }
            k = (k + 1) % n;
        }
        Region { pts, origin }
    };
    // piece(a..b) has base b -> a as its closing edge; rotate base first.
    let p1 = piece(ia, ib);
    let m1 = p1.len();
    let w1 = weak_visibility_region(&p1.rotated(m1 - 1)).region; // [b, a, x..]
    let p2 = piece(ib, ia);
    let m2 = p2.len();
    let w2 = weak_visibility_region(&p2.rotated(m2 - 1)).region; // [a, b, y..]
    let mut pts = vec![a.clone()];
    let mut origin = vec![r.origin[ia]];
    pts.extend(w1.pts[2..].iter().cloned());
    origin.extend(w1.origin[2..].iter().cloned());
    pts.push(b.clone());
    origin.push(r.origin[ib]);
    pts.extend(w2.pts[2..].iter().cloned());
    origin.extend(w2.origin[2..].iter().cloned());
    Ok(Region { pts, origin }.dedup())
}

pub fn visibility_polygon_of_edge(poly: &Polygon, a: &Point, b: &Point) -> Result<Polygon> {
    poly.require_simple()?;
    weak_visibility_region_of_segment(&Region::from_polygon(poly), a, b)?.to_polygon()
}

/// Whether `x` sees one of `steps + 1` evenly spaced points of segment `ab`.
pub fn visible_from_segment_sampled(ring: &[Point], a: &Point, b: &Point, x: &Point, steps: usize) -> bool {
    (0..=steps).any(|i| {
        let t = Q::new((i as i64).into(), (steps as i64).into());
        segment_in_ring(&a.lerp(b, &t), x, ring)
    })
}
