//! Ear-clipping triangulation with exact predicates.

use crate::geom::{orient_sign, Point};

fn in_closed_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    let o1 = orient_sign(a, b, p);
    let o2 = orient_sign(b, c, p);
    let o3 = orient_sign(c, a, p);
    o1 >= 0 && o2 >= 0 && o3 >= 0
}

fn in_open_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    orient_sign(a, b, p) > 0 && orient_sign(b, c, p) > 0 && orient_sign(c, a, p) > 0
}

/// Triangulates a simple counterclockwise ring; triangles are counterclockwise
/// index triples into `ring`. Collinear (180 degree) vertices are clipped as
/// zero-area triangles only once no proper ear remains, so the dual graph
/// still connects every vertex.
pub fn triangulate(ring: &[Point]) -> Vec<[usize; 3]> {
    let mut idx: Vec<usize> = (0..ring.len()).collect();
    let mut out = Vec::with_capacity(ring.len().saturating_sub(2));
    while idx.len() > 3 {
        let m = idx.len();
        let mut pick = None;
        'strict: for pass in 0..3 {
            for k in 0..m {
                let (a, b, c) = (idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]);
                let o = orient_sign(&ring[a], &ring[b], &ring[c]);
                let ok = match pass {
                    0 | 1 => o > 0,
                    _ => o == 0,
                };
                if !ok {
                    continue;
                }
                let blocked = idx.iter().any(|&j| {
                    if j == a || j == b || j == c {
                        return false;
                    }
                    let p = &ring[j];
                    if p == &ring[a] || p == &ring[b] || p == &ring[c] {
                        return false;
                    }
                    match pass {
                        0 => in_closed_triangle(p, &ring[a], &ring[b], &ring[c]),
                        1 => in_open_triangle(p, &ring[a], &ring[b], &ring[c]),
                        _ => false,
                    }
                });
                if !blocked {
                    pick = Some(k);
                    break 'strict;
                }
            }
        }
        let k = pick.expect("simple ring always has an ear");
        let m = idx.len();
        out.push([idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]]);
        idx.remove(k);
    }
    if idx.len() == 3 {
        out.push([idx[0], idx[1], idx[2]]);
    }
    out
}
