//! Decomposition of a simple polygon into weak-visibility pieces and the
//! recursive conflict-free colouring built on it.
//!
//! Ordinary pieces are weak visibility regions of a base whose endpoints are
//! polygon vertices. When a cut has an endpoint inside a polygon edge, a
//! forward piece bounded by the cut and the geodesic between the adjacent
//! vertices is inserted first, so every later base joins two vertices again.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::funnel::{ruler_color, GuardColoring};
use crate::geodesic::Geodesics;
use crate::geom::{dot, line_params, orient_sign, Point, Polygon, Q};
use crate::visibility::{weak_visibility_region, Region};
use crate::weakvis::{based_region, cf_color_weakvis_ring, half_set_size};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Ordinary,
    Forward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeSide {
    Root,
    Left,
    Right,
}

/// A piece of the decomposition. The region is counterclockwise with its
/// base edge at ring positions `0 -> 1`; `origin` names polygon vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    pub kind: NodeKind,
    pub side: NodeSide,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub region: Region,
}

impl DecompNode {
    pub fn base(&self) -> (&Point, &Point) {
        (&self.region.pts[0], &self.region.pts[1])
    }
}

/// Decomposition tree; node 0 is the root and nodes are in BFS order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub nodes: Vec<DecompNode>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nearest ordinary proper ancestor.
    pub fn ordinary_ancestor(&self, k: usize) -> Option<usize> {
        let mut p = self.nodes[k].parent;
        while let Some(i) = p {
            if self.nodes[i].kind == NodeKind::Ordinary {
                return Some(i);
            }
            p = self.nodes[i].parent;
        }
        None
    }
}

fn hit_point(orig: &Point, dir: &Point, q: &Region, edges: impl Iterator<Item = usize>) -> Option<(usize, Q)> {
    // First boundary point strictly ahead on the ray, as (edge, parameter).
    let n = q.len();
    let far = orig.add(dir);
    let mut best: Option<(Q, usize, Q)> = None;
    for k in edges {
        let (a, b) = (&q.pts[k], &q.pts[(k + 1) % n]);
        let cands: Vec<(Q, Q)> = match line_params(orig, &far, a, b) {
            Some((s, t)) if s.is_positive() && !t.is_negative() && t <= Q::from_integer(1.into()) => vec![(s, t)],
            Some(_) => vec![],
            None if orient_sign(orig, &far, a) == 0 => {
                // Edge on the ray's line: its nearer endpoint ahead.
                let d2 = dot(dir, dir);
                [(a, Q::zero()), (b, Q::from_integer(1.into()))]
                    .into_iter()
                    .map(|(p, t)| (dot(&p.sub(orig), dir) / &d2, t))
                    .filter(|(s, _)| s.is_positive())
                    .collect()
            }
            None => vec![],
        };
        for (s, t) in cands {
            if best.as_ref().is_none_or(|(bs, _, _)| &s < bs) {
                best = Some((s, k, t));
            }
        }
    }
    best.map(|(_, k, t)| (k, t))
}

fn point_on(q: &Region, k: usize, t: &Q) -> (Point, Option<usize>) {
    let n = q.len();
    if t.is_zero() {
        return (q.pts[k].clone(), q.origin[k]);
    }
    if *t == Q::from_integer(1.into()) {
        return (q.pts[(k + 1) % n].clone(), q.origin[(k + 1) % n]);
    }
    (q.pts[k].lerp(&q.pts[(k + 1) % n], t), None)
}

fn region_from(items: Vec<(Point, Option<usize>)>) -> Region {
    let mut pts: Vec<Point> = Vec::new();
    let mut origin = Vec::new();
    for (p, o) in items {
        if pts.last() != Some(&p) && pts.first() != Some(&p) {
            pts.push(p);
            origin.push(o);
        }
    }
    Region { pts, origin }
}

/// Cuts `q` along its base line behind reflex base endpoints. Returns the
/// remaining ring (same base) and the cut-off pieces with their sides.
fn split_fans(q: &Region) -> Result<(Region, Vec<(Region, NodeSide)>)> {
    let mut q = q.clone();
    let mut fans = Vec::new();
    let n = q.len();
    if orient_sign(&q.pts[n - 1], &q.pts[0], &q.pts[1]) < 0 {
        let (u, v) = (q.pts[0].clone(), q.pts[1].clone());
        let (k, t) = hit_point(&u, &u.sub(&v), &q, 1..n - 1).ok_or_else(|| Error::Internal("fan ray escapes at u".into()))?;
        let star = point_on(&q, k, &t);
        let item = |i: usize| (q.pts[i].clone(), q.origin[i]);
        let mut main: Vec<_> = (0..=k).map(item).collect();
        main.push(star.clone());
        let mut side = vec![item(0), star];
        side.extend((k + 1..n).map(item));
        fans.push((region_from(side), NodeSide::Left));
        q = region_from(main);
    }
    let n = q.len();
    if orient_sign(&q.pts[0], &q.pts[1], &q.pts[2 % n]) < 0 {
        let (u, v) = (q.pts[0].clone(), q.pts[1].clone());
        let (k, t) = hit_point(&v, &v.sub(&u), &q, 2..n).ok_or_else(|| Error::Internal("fan ray escapes at v".into()))?;
        let star = point_on(&q, k, &t);
        let item = |i: usize| (q.pts[i].clone(), q.origin[i]);
        let mut low = vec![star.clone()];
        low.extend((1..=k).map(item));
        let mut main = vec![item(0), item(1), star];
        main.extend((k + 1..n).map(item));
        fans.push((region_from(low), NodeSide::Right));
        q = region_from(main);
    }
    Ok((q, fans))
}

struct Task {
    ring: Region,
    kind: NodeKind,
    side: NodeSide,
    parent: Option<usize>,
}

fn kind_of(ring: &Region) -> NodeKind {
    if ring.origin[0].is_some() && ring.origin[1].is_some() {
        NodeKind::Ordinary
    } else {
        NodeKind::Forward
    }
}

/// Decomposes `poly` starting from the weak visibility polygon of edge
/// `e0` (given in either direction). Sides are filled in by
/// [`classify_children`].
pub fn decompose(poly: &Polygon, e0: (usize, usize)) -> Result<Decomposition> {
    let root = based_region(poly, e0)?;
    let mut nodes: Vec<DecompNode> = Vec::new();
    let mut queue = VecDeque::from([Task { ring: root, kind: NodeKind::Ordinary, side: NodeSide::Root, parent: None }]);
    while let Some(task) = queue.pop_front() {
        let id = nodes.len();
        let children = match task.kind {
            NodeKind::Ordinary => {
                let (q, fans) = split_fans(&task.ring)?;
                let cut = weak_visibility_region(&q);
                let w = cut.region;
                if w.pts[0] != q.pts[0] || w.pts[1] != q.pts[1] {
                    return Err(Error::Internal("weak visibility region lost its base".into()));
                }
                let m = w.len();
                let mut order: Vec<usize> = (0..cut.pockets.len()).collect();
                order.sort_by_key(|&i| (m - cut.windows[i]) % m);
                nodes.push(DecompNode { kind: NodeKind::Ordinary, side: task.side, parent: task.parent, children: Vec::new(), region: w });
                let mut out: Vec<Region> = Vec::new();
                let (mut left_fan, mut right_fan) = (None, None);
                for (r, s) in fans {
                    if s == NodeSide::Left {
                        left_fan = Some(r);
                    } else {
                        right_fan = Some(r);
                    }
                }
                out.extend(left_fan);
                out.extend(order.into_iter().map(|i| cut.pockets[i].clone()));
                out.extend(right_fan);
                out
            }
            NodeKind::Forward => {
                let q = task.ring;
                let u = weak_visibility_region(&q).region;
                let m = u.len();
                if u.pts[0] != q.pts[0] || u.pts[1] != q.pts[1] || m < 3 {
                    return Err(Error::Internal("forward region lost its base".into()));
                }
                let g = Geodesics::new(&u.pts);
                let path = g.path_through(2, m - 1);
                let mut ring = Region { pts: u.pts[..2].to_vec(), origin: u.origin[..2].to_vec() };
                let mut qpos = Vec::with_capacity(path.len());
                for &k in &path {
                    if u.origin[k].is_none() {
                        return Err(Error::Internal("forward chain passes a non-vertex point".into()));
                    }
                    ring.pts.push(u.pts[k].clone());
                    ring.origin.push(u.origin[k]);
                    qpos.push(q.position_of_point(&u.pts[k]).ok_or_else(|| Error::Internal("forward chain leaves its pocket".into()))?);
                }
                if qpos[0] != 2 || *qpos.last().unwrap() != q.len() - 1 || qpos.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Internal(format!("forward chain is not monotone along its pocket: {qpos:?}")));
                }
                nodes.push(DecompNode { kind: NodeKind::Forward, side: task.side, parent: task.parent, children: Vec::new(), region: ring });
                // Pieces behind the chain edges, clockwise (from x back to y).
                let mut out = Vec::new();
                for w in qpos.windows(2).rev() {
                    let (i, j) = (w[0], w[1]);
                    if j > i + 1 {
                        let mut items = vec![(q.pts[j].clone(), q.origin[j])];
                        items.extend((i..j).map(|k| (q.pts[k].clone(), q.origin[k])));
                        out.push(region_from(items));
                    }
                }
                out
            }
        };
        if let Some(p) = task.parent {
            nodes[p].children.push(id);
        }
        for ring in children {
            let kind = if task.kind == NodeKind::Forward { NodeKind::Ordinary } else { kind_of(&ring) };
            queue.push_back(Task { ring, kind, side: NodeSide::Root, parent: Some(id) });
        }
    }
    let mut d = Decomposition { nodes };
    classify_children(&mut d)?;
    Ok(d)
}

/// Labels every non-root node left or right: the side of its cut edge it
/// lies on when the parent's base is drawn horizontally below the parent.
/// Ordinary children of a forward piece inherit the forward piece's side.
pub fn classify_children(d: &mut Decomposition) -> Result<()> {
    for k in 0..d.nodes.len() {
        let Some(p) = d.nodes[k].parent else {
            d.nodes[k].side = NodeSide::Root;
            continue;
        };
        let side = if d.nodes[p].kind == NodeKind::Forward {
            d.nodes[p].side
        } else {
            let (u, v) = d.nodes[p].base();
            let dir = v.sub(u);
            let up = Point::new(-dir.y.clone(), dir.x.clone());
            let (a, b) = d.nodes[k].base();
            // The parent traverses the shared edge from b to a.
            let s = dot(&a.sub(b), &up);
            if s.is_positive() {
                NodeSide::Right
            } else if s.is_negative() {
                NodeSide::Left
            } else {
                let t = dot(&a.midpoint(b).sub(u), &dir);
                if !t.is_positive() {
                    NodeSide::Left
                } else if t >= dot(&dir, &dir) {
                    NodeSide::Right
                } else {
                    return Err(Error::Internal("cut edge lies on the parent's base".into()));
                }
            }
        };
        d.nodes[k].side = side;
    }
    Ok(())
}

/// Result of [`cf_color_polygon_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonColoring {
    pub coloring: GuardColoring,
    pub decomposition: Decomposition,
    /// Colour super-set (1, 2 or 3) of every node.
    pub sets: Vec<u32>,
    /// `C`: the most colours any ordinary piece needs.
    pub ordinary_colors: u32,
    /// Size of the forward palette of each super-set.
    pub forward_colors: u32,
}

impl PolygonColoring {
    /// `3 (C + ceil(log2 n))`.
    pub fn bound(&self) -> u32 {
        3 * (self.ordinary_colors + self.forward_colors)
    }
}

fn named(ring: &Region, k: usize) -> Result<usize> {
    ring.origin[k].ok_or_else(|| Error::Internal(format!("guard at non-vertex point {:?}", ring.pts[k].to_f64())))
}

pub fn cf_color_polygon_with(poly: &Polygon, e0: (usize, usize)) -> Result<PolygonColoring> {
    let d = decompose(poly, e0)?;
    let mut local: Vec<BTreeMap<usize, u32>> = Vec::with_capacity(d.len());
    for node in &d.nodes {
        let mut m = BTreeMap::new();
        if node.kind == NodeKind::Ordinary {
            for (k, c) in cf_color_weakvis_ring(&node.region)? {
                m.insert(named(&node.region, k)?, c);
            }
        }
        local.push(m);
    }
    let c_ord = local.iter().flat_map(|m| m.values().copied()).max().unwrap_or(0).max(1);
    let h = half_set_size(poly.n());
    let block = c_ord + h;
    // Super-set of every node, top-down.
    let mut sets = vec![1u32; d.len()];
    for k in 1..d.len() {
        let p = d.nodes[k].parent.unwrap();
        sets[k] = if d.nodes[p].kind == NodeKind::Forward {
            sets[p]
        } else {
            let others: Vec<u32> = (1..=3).filter(|&s| s != sets[p]).collect();
            if d.nodes[k].side == NodeSide::Left {
                others[0]
            } else {
                others[1]
            }
        };
    }
    // Bottom-up: BFS order reversed, so every parent overrides its children.
    let mut colors: BTreeMap<usize, u32> = BTreeMap::new();
    for k in (0..d.len()).rev() {
        let node = &d.nodes[k];
        let off = (sets[k] - 1) * block;
        match node.kind {
            NodeKind::Ordinary => {
                for (&v, &c) in &local[k] {
                    colors.insert(v, off + c);
                }
            }
            NodeKind::Forward => {
                let chain = 2..node.region.len();
                for (pos, r) in chain.clone().zip(ruler_color(chain.len())) {
                    colors.insert(named(&node.region, pos)?, off + c_ord + r);
                }
            }
        }
    }
    Ok(PolygonColoring { coloring: GuardColoring { colors }, decomposition: d, sets, ordinary_colors: c_ord, forward_colors: h })
}

/// Conflict-free chromatic vertex guarding of a simple polygon, decomposing
/// from the edge between input vertices 0 and 1.
pub fn cf_color_polygon(poly: &Polygon) -> Result<GuardColoring> {
    Ok(cf_color_polygon_with(poly, (0, 1))?.coloring)
}
