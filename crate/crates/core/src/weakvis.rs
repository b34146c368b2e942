//! Weak-visibility polygons: vertex guard sets from the two shortest path
//! trees of the base, max funnels, and conflict-free colouring with
//! `O(log^2 n)` colours.
//!
//! Ring-level functions take a [`Region`] whose base edge is ring position
//! `0 -> 1` (`u = 0`, `v = 1`); "clockwise from `u`" is then the position
//! order `0, n-1, n-2, ..., 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::funnel::{ruler_color, Funnel, GuardColoring, GuardSet};
use crate::geodesic::Geodesics;
use crate::geom::{orient_sign, Point, Polygon};
use crate::visibility::{visibility_graph, weak_visibility_region, Region, VisibilityGraph};

/// Rotates the outer ring of `poly` so that the base edge is `0 -> 1` in
/// counterclockwise order. `base` may name the edge in either direction;
/// `u` is always the endpoint the counterclockwise boundary leaves from.
pub fn based_region(poly: &Polygon, base: (usize, usize)) -> Result<Region> {
    poly.require_simple()?;
    let n = poly.n();
    for i in [base.0, base.1] {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    let ring = Region::from_polygon(poly);
    let pa = ring.position_of_origin(base.0).unwrap();
    let pb = ring.position_of_origin(base.1).unwrap();
    let start = if (pa + 1) % n == pb {
        pa
    } else if (pb + 1) % n == pa {
        pb
    } else {
        return Err(Error::Invalid(format!("({}, {}) is not an edge of the polygon", base.0, base.1)));
    };
    Ok(ring.rotated(start))
}

/// Whether every point of the ring sees some point of its base edge.
pub fn is_weakly_visible(ring: &Region) -> bool {
    weak_visibility_region(ring).region.area2() == ring.area2()
}

/// Weak visibility from the base, plus non-reflex base endpoints: at a
/// reflex endpoint the geodesics of the vertices seeing only that endpoint
/// run through it, and the two chains no longer bound a funnel.
fn require_weakly_visible(ring: &Region) -> Result<()> {
    let name = |k: usize| ring.origin[k].unwrap_or(k);
    let n = ring.len();
    let p = &ring.pts;
    for (k, a, b) in [(0, n - 1, 1), (1, 0, 2 % n)] {
        if orient_sign(&p[a], &p[k], &p[b]) < 0 {
            return Err(Error::Invalid(format!("base endpoint {} is a reflex vertex", name(k))));
        }
    }
    if is_weakly_visible(ring) {
        Ok(())
    } else {
        Err(Error::NotWeaklyVisible { u: name(0), v: name(1) })
    }
}

/// Shortest path trees of `u` and `v` plus the clockwise order, over ring
/// positions.
struct Trees {
    n: usize,
    pu: Vec<Option<usize>>,
    pv: Vec<Option<usize>>,
    /// Clockwise rank of each position (`u` is 0, `v` is `n - 1`).
    rank: Vec<usize>,
    /// Positions in clockwise order.
    cw: Vec<usize>,
}

impl Trees {
    fn new(pts: &[Point]) -> Trees {
        let n = pts.len();
        let g = Geodesics::new(pts);
        let cw: Vec<usize> = std::iter::once(0).chain((1..n).rev()).collect();
        let mut rank = vec![0; n];
        for (r, &p) in cw.iter().enumerate() {
            rank[p] = r;
        }
        Trees { n, pu: g.tree_through(0), pv: g.tree_through(1), rank, cw }
    }

    fn parent_u(&self, z: usize) -> usize {
        self.pu[z].unwrap_or(z)
    }

    fn parent_v(&self, z: usize) -> usize {
        self.pv[z].unwrap_or(z)
    }

    fn is_leaf(parent: &[Option<usize>], z: usize) -> bool {
        parent[z].is_some() && !parent.iter().any(|&p| p == Some(z))
    }

    fn path_to_root(parent: &[Option<usize>], z: usize) -> Vec<usize> {
        let mut out = vec![z];
        let mut c = z;
        while let Some(p) = parent[c] {
            out.push(p);
            c = p;
        }
        out
    }

    /// Positions on the clockwise boundary between `a` and `b`, inclusive.
    fn between(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        let (lo, hi) = if self.rank[a] <= self.rank[b] { (self.rank[a], self.rank[b]) } else { (self.rank[b], self.rank[a]) };
        self.cw[lo..=hi].iter().copied()
    }
}

struct Marker<'a> {
    vis: &'a VisibilityGraph,
    marked: Vec<bool>,
    guards: Vec<usize>,
}

impl Marker<'_> {
    fn place(&mut self, g: usize) {
        if !self.guards.contains(&g) {
            self.guards.push(g);
        }
        self.marked[g] = true;
        for w in self.vis.neighbours(g) {
            self.marked[w] = true;
        }
    }

    fn seen_by(&self, w: usize, a: usize, b: usize) -> bool {
        w == a || w == b || self.vis.has_edge(w, a) || self.vis.has_edge(w, b)
    }
}

fn to_input(ring: &Region, guards: Vec<usize>) -> Result<GuardSet> {
    let guards = guards
        .into_iter()
        .map(|g| ring.origin[g].ok_or_else(|| Error::Internal(format!("guard at ring position {g} is not a polygon vertex"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GuardSet { guards })
}

/// Guard set of Bhattacharya, Ghosh and Roy's first pass: walk clockwise
/// from `u`; every vertex still unseen adds the guards `p_u(z)`, `p_v(z)`.
/// Ring positions.
pub fn guards_gamma_a_ring(ring: &Region) -> Result<Vec<usize>> {
    require_weakly_visible(ring)?;
    let t = Trees::new(&ring.pts);
    let vis = visibility_graph(&ring.to_polygon()?);
    let mut mk = Marker { vis: &vis, marked: vec![false; t.n], guards: Vec::new() };
    for &z in &t.cw[1..] {
        if !mk.marked[z] {
            mk.place(t.parent_u(z));
            mk.place(t.parent_v(z));
        }
    }
    Ok(mk.guards)
}

/// Vertex guard set of the second pass, seeing every vertex. Ring
/// positions.
pub fn guards_gamma_b_ring(ring: &Region) -> Result<Vec<usize>> {
    require_weakly_visible(ring)?;
    let t = Trees::new(&ring.pts);
    let vis = visibility_graph(&ring.to_polygon()?);
    let mut mk = Marker { vis: &vis, marked: vec![false; t.n], guards: Vec::new() };
    let first_unmarked_from = |mk: &Marker, r: usize| t.cw[r..].iter().copied().find(|&w| !mk.marked[w]);
    let all_seen = |mk: &Marker, a: usize, b: usize, z: usize| {
        let (gu, gv) = (t.parent_u(z), t.parent_v(z));
        t.between(a, b).all(|w| mk.marked[w] || mk.seen_by(w, gu, gv))
    };
    let mut z = 0;
    while mk.marked.iter().any(|&m| !m) {
        z = first_unmarked_from(&mk, t.rank[z]).or_else(|| first_unmarked_from(&mk, 0)).unwrap();
        if all_seen(&mk, z, t.parent_v(z), z) {
            mk.place(t.parent_u(z));
            mk.place(t.parent_v(z));
            z = t.parent_v(z);
            continue;
        }
        let mut next = first_unmarked_from(&mk, t.rank[z] + 1);
        while let Some(z2) = next {
            if !all_seen(&mk, t.parent_u(z2), z2, z2) {
                break;
            }
            z = z2;
            next = first_unmarked_from(&mk, t.rank[z2] + 1);
        }
        let mut w = z;
        while t.cw[..=t.rank[z]].iter().any(|&x| !mk.marked[x]) {
            mk.place(t.parent_u(w));
            mk.place(t.parent_v(w));
            match t.cw[..=t.rank[z]].iter().rev().copied().find(|&x| !mk.marked[x]) {
                Some(x) => w = x,
                None => break,
            }
        }
    }
    Ok(mk.guards)
}

pub fn guards_gamma_a(poly: &Polygon, base: (usize, usize)) -> Result<GuardSet> {
    let ring = based_region(poly, base)?;
    let g = guards_gamma_a_ring(&ring)?;
    to_input(&ring, g)
}

pub fn guards_gamma_b(poly: &Polygon, base: (usize, usize)) -> Result<GuardSet> {
    let ring = based_region(poly, base)?;
    let g = guards_gamma_b_ring(&ring)?;
    to_input(&ring, g)
}

/// Max funnels of a weak-visibility polygon, ordered left to right (by
/// clockwise order of their apices from `u`).
///
/// Funnel chain indices are ring positions for [`max_funnels_ring`] and
/// input vertex indices for [`max_funnels`]; `u` is `l1`, `v` is `r1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFunnelSet {
    pub funnels: Vec<Funnel>,
    /// Colour-set index `j` of every funnel (ruler sequence, from 1).
    pub color_sets: Vec<u32>,
    /// Vertex -> funnel it is associated with: among the funnels containing
    /// the vertex, the one with the highest colour-set index.
    pub association: BTreeMap<usize, usize>,
}

impl MaxFunnelSet {
    pub fn len(&self) -> usize {
        self.funnels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.funnels.is_empty()
    }

    pub fn apices(&self) -> Vec<usize> {
        self.funnels.iter().map(|f| f.apex_index()).collect()
    }

    /// Indices of the funnels whose chains contain vertex `v`.
    pub fn containing(&self, v: usize) -> Vec<usize> {
        (0..self.funnels.len()).filter(|&i| self.funnels[i].locate_vertex(v).is_some()).collect()
    }

    fn from_funnels(funnels: Vec<Funnel>) -> MaxFunnelSet {
        let color_sets = ruler_color(funnels.len());
        let mut association = BTreeMap::new();
        for (i, f) in funnels.iter().enumerate() {
            for &v in f.left_idx.iter().chain(&f.right_idx) {
                let e = association.entry(v).or_insert(i);
                if color_sets[i] > color_sets[*e] {
                    *e = i;
                }
            }
        }
        MaxFunnelSet { funnels, color_sets, association }
    }
}

pub fn max_funnels_ring(ring: &Region) -> Result<MaxFunnelSet> {
    require_weakly_visible(ring)?;
    let t = Trees::new(&ring.pts);
    let mut funnels = Vec::new();
    for &a in &t.cw {
        if a < 2 || !Trees::is_leaf(&t.pu, a) || !Trees::is_leaf(&t.pv, a) {
            continue;
        }
        let mut left = Trees::path_to_root(&t.pu, a);
        left.reverse();
        let mut right = Trees::path_to_root(&t.pv, a);
        right.reverse();
        // A vertex on the base line beyond a flat endpoint reaches the other
        // endpoint through it; its funnel has no area.
        if left.contains(&1) || right.contains(&0) {
            continue;
        }
        let pts = |c: &[usize]| c.iter().map(|&k| ring.pts[k].clone()).collect::<Vec<_>>();
        let f = Funnel::from_chains(pts(&left), pts(&right), left, right)
            .map_err(|e| Error::Internal(format!("max funnel at ring position {a} is not a funnel: {e}")))?;
        funnels.push(f);
    }
    Ok(MaxFunnelSet::from_funnels(funnels))
}

pub fn max_funnels(poly: &Polygon, base: (usize, usize)) -> Result<MaxFunnelSet> {
    let ring = based_region(poly, base)?;
    let set = max_funnels_ring(&ring)?;
    let name = |k: usize| ring.origin[k].expect("input polygon ring");
    let funnels = set
        .funnels
        .into_iter()
        .map(|f| Funnel {
            left_idx: f.left_idx.iter().map(|&k| name(k)).collect(),
            right_idx: f.right_idx.iter().map(|&k| name(k)).collect(),
            ..f
        })
        .collect();
    Ok(MaxFunnelSet::from_funnels(funnels))
}

/// Number of colours per chain half of a colour set: `ceil(log2 n)`, at
/// least 1.
pub fn half_set_size(n: usize) -> u32 {
    (usize::BITS - (n.max(2) - 1).leading_zeros()).max(1)
}

/// Number of colour sets for `m` max funnels: `1 + floor(log2 m)`.
pub fn color_set_count(m: usize) -> u32 {
    if m == 0 {
        0
    } else {
        usize::BITS - m.leading_zeros()
    }
}

/// Upper bound on the colours used by [`cf_color_weakvis`].
pub fn weakvis_color_bound(n: usize, m: usize) -> u32 {
    color_set_count(m) * 2 * half_set_size(n)
}

/// Colouring over ring positions: the chain vertices (apex excluded)
/// associated with each max funnel get the ruler sequence bottom-up, with
/// colours `(j - 1) * 2h + side * h + ruler` for colour set `j`, half-set
/// size `h` and side 0 (left) or 1 (right).
pub fn cf_color_weakvis_ring(ring: &Region) -> Result<BTreeMap<usize, u32>> {
    let set = max_funnels_ring(ring)?;
    let h = half_set_size(ring.len());
    let mut colors = BTreeMap::new();
    for (i, f) in set.funnels.iter().enumerate() {
        let j = set.color_sets[i];
        for (side, chain) in [(0, &f.left_idx), (1, &f.right_idx)] {
            // Chains may share a tail below the apex (a vertex seeing the base
            // only past a grazed reflex vertex); shared vertices count as left.
            let own: Vec<usize> = chain[..chain.len() - 1]
                .iter()
                .copied()
                .filter(|v| set.association[v] == i && (side == 0 || !f.left_idx.contains(v)))
                .collect();
            for (v, r) in own.iter().zip(ruler_color(own.len())) {
                if r > h {
                    return Err(Error::Internal(format!("chain of {} vertices overflows a half set of {h}", own.len())));
                }
                colors.insert(*v, (j - 1) * 2 * h + side * h + r);
            }
        }
    }
    Ok(colors)
}

pub fn cf_color_weakvis(poly: &Polygon, base: (usize, usize)) -> Result<GuardColoring> {
    let ring = based_region(poly, base)?;
    let local = cf_color_weakvis_ring(&ring)?;
    let mut colors = BTreeMap::new();
    for (k, c) in local {
        let v = ring.origin[k].ok_or_else(|| Error::Internal(format!("guard at ring position {k} is not a polygon vertex")))?;
        colors.insert(v, c);
    }
    Ok(GuardColoring { colors })
}
