//! Planar arrangement of segments inside a simple polygon, used to pick one
//! interior point in every face.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::geom::{area2, cross, line_params, locate_in_ring, on_segment, orient_sign, param_on, Location, Point, Q};

/// Splits all segments at mutual intersections and returns the distinct
/// elementary pieces.
fn split_segments(segs: &[(Point, Point)]) -> Vec<(Point, Point)> {
    let mut cuts: Vec<Vec<Q>> = segs.iter().map(|_| vec![Q::zero(), Q::one()]).collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (a, b) = (&segs[i].0, &segs[i].1);
            let (c, d) = (&segs[j].0, &segs[j].1);
            match line_params(a, b, c, d) {
                Some((t, u)) => {
                    if t >= Q::zero() && t <= Q::one() && u >= Q::zero() && u <= Q::one() {
                        cuts[i].push(t);
                        cuts[j].push(u);
                    }
                }
                None => {
                    if orient_sign(a, b, c) == 0 {
                        for (p, k, (x, y)) in [(c, i, (a, b)), (d, i, (a, b)), (a, j, (c, d)), (b, j, (c, d))] {
                            if on_segment(p, x, y) {
                                cuts[k].push(param_on(p, x, y));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut pieces: Vec<(Point, Point)> = Vec::new();
    for (k, (a, b)) in segs.iter().enumerate() {
        let ts = &mut cuts[k];
        ts.sort();
        ts.dedup();
        for w in ts.windows(2) {
            let p = a.lerp(b, &w[0]);
            let q = a.lerp(b, &w[1]);
            if p != q {
                pieces.push(if p < q { (p, q) } else { (q, p) });
            }
        }
    }
    pieces.sort();
    pieces.dedup();
    pieces
}

fn half(d: &Point) -> u8 {
    // 0 for directions in [0, pi), 1 for [pi, 2 pi).
    if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Boundary walks of all bounded faces (counterclockwise rings).
pub fn bounded_faces(segs: &[(Point, Point)]) -> Vec<Vec<Point>> {
    let pieces = split_segments(segs);
    let mut ids: HashMap<Point, usize> = HashMap::new();
    let mut pts: Vec<Point> = Vec::new();
    let mut id = |p: &Point, pts: &mut Vec<Point>| -> usize {
        *ids.entry(p.clone()).or_insert_with(|| {
            pts.push(p.clone());
            pts.len() - 1
        })
    };
    // Half-edge h: 2e is a -> b, 2e + 1 is b -> a.
    let mut ends: Vec<(usize, usize)> = Vec::new();
    for (a, b) in &pieces {
        let (ia, ib) = (id(a, &mut pts), id(b, &mut pts));
        ends.push((ia, ib));
        ends.push((ib, ia));
    }
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (h, &(u, _)) in ends.iter().enumerate() {
        out_edges[u].push(h);
    }
    let mut rank = vec![0usize; ends.len()];
    for (v, list) in out_edges.iter_mut().enumerate() {
        list.sort_by(|&x, &y| angle_cmp(&pts[ends[x].1].sub(&pts[v]), &pts[ends[y].1].sub(&pts[v])));
        for (r, &h) in list.iter().enumerate() {
            rank[h] = r;
        }
    }
    // next(u -> v) = edge out of v immediately clockwise of v -> u.
    let next = |h: usize| -> usize {
        let (_, v) = ends[h];
        let twin = h ^ 1;
        let list = &out_edges[v];
        let r = rank[twin];
        list[(r + list.len() - 1) % list.len()]
    };
    let mut used = vec![false; ends.len()];
    let mut faces = Vec::new();
    for start in 0..ends.len() {
        if used[start] {
            continue;
        }
        let mut ring = Vec::new();
        let mut h = start;
        while !used[h] {
            used[h] = true;
            ring.push(pts[ends[h].0].clone());
            h = next(h);
        }
        if area2(&ring).is_positive() {
            faces.push(ring);
        }
    }
    faces
}

/// A point strictly inside a counterclockwise face ring.
pub fn interior_point(ring: &[Point]) -> Option<Point> {
    let n = ring.len();
    let third = Q::new(1.into(), 3.into());
    for k in 0..n {
        let (a, b, c) = (&ring[(k + n - 1) % n], &ring[k], &ring[(k + 1) % n]);
        if orient_sign(a, b, c) <= 0 {
            continue;
        }
        let g = a.add(b).add(c).scale(&third);
        if locate_in_ring(&g, ring) == Location::Interior {
            let blocked = ring.iter().any(|p| {
                p != a && p != b && p != c && orient_sign(a, b, p) >= 0 && orient_sign(b, c, p) >= 0 && orient_sign(c, a, p) >= 0
            });
            if !blocked {
                return Some(g);
            }
        }
    }
    // Fall back to any triangle of a triangulation with positive area.
    crate::triangulate::triangulate(ring).into_iter().find_map(|t| {
        let (a, b, c) = (&ring[t[0]], &ring[t[1]], &ring[t[2]]);
        if orient_sign(a, b, c) > 0 {
            let g = a.add(b).add(c).scale(&third);
            (locate_in_ring(&g, ring) == Location::Interior).then_some(g)
        } else {
            None
        }
    })
}
