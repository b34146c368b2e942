//! Geodesic (shortest) paths inside a simple polygon.
//!
//! The ring is triangulated once; a path between two vertices follows the
//! sleeve of triangles joining them and is pulled taut with the funnel
//! algorithm using exact orientation tests.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geom::{on_segment, orient_sign, param_on, Point, Polygon, Q};
use crate::triangulate::triangulate;

/// Triangulated counterclockwise ring supporting repeated geodesic queries.
#[derive(Debug, Clone)]
pub struct Geodesics<'a> {
    ring: &'a [Point],
    tris: Vec<[usize; 3]>,
    adj: Vec<Vec<(usize, usize, usize)>>, // (neighbour, portal x, portal y)
    by_vertex: Vec<Vec<usize>>,
}

impl<'a> Geodesics<'a> {
    pub fn new(ring: &'a [Point]) -> Self {
        let tris = triangulate(ring);
        let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); tris.len()];
        let mut by_vertex = vec![Vec::new(); ring.len()];
        let mut edge_owner: std::collections::HashMap<(usize, usize), usize> = std::collections::HashMap::new();
        for (t, tri) in tris.iter().enumerate() {
            for k in 0..3 {
                by_vertex[tri[k]].push(t);
                let (x, y) = (tri[k], tri[(k + 1) % 3]);
                // Directed x -> y in t; its twin y -> x lives in the neighbour.
                if let Some(&s) = edge_owner.get(&(y, x)) {
                    adj[t].push((s, x, y));
                    adj[s].push((t, y, x));
                } else {
                    edge_owner.insert((x, y), t);
                }
            }
        }
        Geodesics { ring, tris, adj, by_vertex }
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.tris
    }

    /// Ring positions of the geodesic from `a` to `b`, endpoints included.
    /// Intermediate vertices are strict turns only.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        if a == b {
            return vec![a];
        }
        // Multi-source BFS over the dual tree.
        let nt = self.tris.len();
        let mut prev: Vec<Option<(usize, usize, usize)>> = vec![None; nt];
        let mut seen = vec![false; nt];
        let mut queue = VecDeque::new();
        for &t in &self.by_vertex[a] {
            seen[t] = true;
            queue.push_back(t);
        }
        let mut goal = None;
        while let Some(t) = queue.pop_front() {
            if self.tris[t].contains(&b) {
                goal = Some(t);
                break;
            }
            for &(s, x, y) in &self.adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    prev[s] = Some((t, x, y));
                    queue.push_back(s);
                }
            }
        }
        let mut t = goal.expect("triangulation of a simple ring is connected");
        // Portals as (left, right) while walking from a to b.
        let mut portals = Vec::new();
        while let Some((p, x, y)) = prev[t] {
            // x -> y is counterclockwise in p, so leaving p, y is on the left.
            portals.push((y, x));
            t = p;
        }
        portals.reverse();
        portals.insert(0, (a, a));
        portals.push((b, b));
        let raw = string_pull(self.ring, &portals);
        simplify(self.ring, raw)
    }

    /// Like [`Geodesics::path`], but also lists every ring vertex the path
    /// passes straight through.
    pub fn path_through(&self, a: usize, b: usize) -> Vec<usize> {
        let bends = self.path(a, b);
        let mut out = vec![a];
        for w in bends.windows(2) {
            let (x, y) = (&self.ring[w[0]], &self.ring[w[1]]);
            let mut on: Vec<(Q, usize)> = (0..self.ring.len())
                .filter(|&k| k != w[0] && k != w[1] && on_segment(&self.ring[k], x, y))
                .map(|k| (param_on(&self.ring[k], x, y), k))
                .collect();
            on.sort();
            out.extend(on.into_iter().map(|(_, k)| k));
            out.push(w[1]);
        }
        out
    }

    /// Shortest path tree in which vertices lying on a geodesic segment are
    /// nodes of it: the parent of `v` is its predecessor on
    /// [`Geodesics::path_through`].
    pub fn tree_through(&self, root: usize) -> Vec<Option<usize>> {
        (0..self.ring.len())
            .map(|v| {
                if v == root {
                    None
                } else {
                    let p = self.path_through(root, v);
                    Some(p[p.len() - 2])
                }
            })
            .collect()
    }

    /// Parent of every vertex in the shortest path tree rooted at `root`
    /// (`None` for the root itself).
    pub fn tree(&self, root: usize) -> Vec<Option<usize>> {
        (0..self.ring.len())
            .map(|v| {
                if v == root {
                    None
                } else {
                    let p = self.path(root, v);
                    Some(p[p.len() - 2])
                }
            })
            .collect()
    }
}

fn string_pull(ring: &[Point], portals: &[(usize, usize)]) -> Vec<usize> {
    let o = |a: usize, b: usize, c: usize| orient_sign(&ring[a], &ring[b], &ring[c]);
    let mut path = vec![portals[0].0];
    let (mut apex, mut left, mut right) = (portals[0].0, portals[0].0, portals[0].1);
    let (mut left_i, mut right_i) = (0usize, 0usize);
    let mut i = 1;
    while i < portals.len() {
        let (l, r) = portals[i];
        // Tighten the right side.
        if o(apex, right, r) >= 0 {
            if apex == right || o(apex, left, r) < 0 {
                right = r;
                right_i = i;
            } else {
                path.push(left);
                apex = left;
                right = apex;
                right_i = left_i;
                i = left_i + 1;
                continue;
            }
        }
        // Tighten the left side.
        if o(apex, left, l) <= 0 {
            if apex == left || o(apex, right, l) > 0 {
                left = l;
                left_i = i;
            } else {
                path.push(right);
                apex = right;
                left = apex;
                left_i = right_i;
                i = right_i + 1;
                continue;
            }
        }
        i += 1;
    }
    let end = portals[portals.len() - 1].0;
    if path.last() != Some(&end) {
        path.push(end);
    }
    path
}

fn simplify(ring: &[Point], raw: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(raw.len());
    for v in raw {
        if out.last() == Some(&v) {
            continue;
        }
        while out.len() >= 2 && orient_sign(&ring[out[out.len() - 2]], &ring[out[out.len() - 1]], &ring[v]) == 0 {
            out.pop();
        }
        out.push(v);
    }
    out
}

/// Shortest path tree of a simple polygon, over input vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
}

impl ShortestPathTree {
    /// Vertices from `v` up to the root.
    pub fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut c = v;
        while let Some(p) = self.parent[c] {
            out.push(p);
            c = p;
        }
        out
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        v != self.root && !self.parent.iter().any(|&p| p == Some(v))
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&w| self.parent[w] == Some(v)).collect()
    }
}

/// Geodesic tree rooted at `u`; parents are the last bend before each vertex.
pub fn shortest_path_tree(poly: &Polygon, u: usize) -> Result<ShortestPathTree> {
    spt(poly, u, false)
}

/// As [`shortest_path_tree`], except that a vertex lying exactly on a
/// geodesic is a node of it (so it is never a spurious leaf).
pub fn shortest_path_tree_through(poly: &Polygon, u: usize) -> Result<ShortestPathTree> {
    spt(poly, u, true)
}

fn spt(poly: &Polygon, u: usize, through: bool) -> Result<ShortestPathTree> {
    poly.require_simple()?;
    let n = poly.n();
    if u >= n {
        return Err(Error::IndexOutOfRange { index: u, n });
    }
    let ring_idx = poly.outer_ring();
    let pts = poly.outer_points();
    let mut pos = vec![0; n];
    for (k, &i) in ring_idx.iter().enumerate() {
        pos[i] = k;
    }
    let g = Geodesics::new(&pts);
    let tree = if through { g.tree_through(pos[u]) } else { g.tree(pos[u]) };
    let mut parent = vec![None; n];
    for (k, p) in tree.into_iter().enumerate() {
        parent[ring_idx[k]] = p.map(|q| ring_idx[q]);
    }
    Ok(ShortestPathTree { root: u, parent })
}

/// Euclidean length of a polyline (display/oracle use only).
pub fn path_length(pts: &[Point], path: &[usize]) -> f64 {
    path.windows(2)
        .map(|w| {
            let (ax, ay) = pts[w[0]].to_f64();
            let (bx, by) = pts[w[1]].to_f64();
            ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt()
        })
        .sum()
}
