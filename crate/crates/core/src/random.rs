//! Seeded generators for test instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{orient_sign, proper_cross, segments_intersect, Point, Polygon, Q};
use crate::visibility::{weak_visibility_region, Region};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn no_collinear_triple(pts: &[Point], p: &Point) -> bool {
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if orient_sign(&pts[i], &pts[j], p) == 0 {
                return false;
            }
        }
    }
    true
}

/// `n` distinct integer points in `[0, size]^2` in general position.
pub fn general_points(rng: &mut impl Rng, n: usize, size: i64) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::int(rng.gen_range(0..=size), rng.gen_range(0..=size));
        if !pts.contains(&p) && no_collinear_triple(&pts, &p) {
            pts.push(p);
        }
    }
    pts
}

/// Random simple polygon: random points in general position, put in random
/// order and untangled by 2-opt moves until no edges cross.
pub fn random_simple_polygon(rng: &mut impl Rng, n: usize) -> Polygon {
    assert!(n >= 3);
    let size = (10 * n as i64).max(100);
    let mut pts = general_points(rng, n, size);
    pts.shuffle(rng);
    'untangle: loop {
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (&pts[i], &pts[i + 1]);
                let (c, d) = (&pts[j], &pts[(j + 1) % n]);
                if proper_cross(a, b, c, d) {
                    pts[i + 1..=j].reverse();
                    continue 'untangle;
                }
            }
        }
        break;
    }
    Polygon::simple(pts).expect("untangled ring is simple")
}

/// Random convex polygon with `n` vertices on a lattice circle-ish curve.
pub fn random_convex_polygon(rng: &mut impl Rng, n: usize) -> Polygon {
    assert!(n >= 3);
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let pts: Vec<Point> = angles
            .iter()
            .map(|a| Point::int((1000.0 * a.cos()).round() as i64, (1000.0 * a.sin()).round() as i64))
            .collect();
        let strictly_convex = (0..n).all(|i| orient_sign(&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]) > 0);
        if strictly_convex {
            if let Ok(p) = Polygon::simple(pts) {
                return p;
            }
        }
    }
}

fn rat(x: f64) -> Q {
    Q::new(((x * 1000.0).round() as i64).into(), 1000.into())
}

/// Random funnel with `n >= 3` vertices. The ring is counterclockwise and
/// starts with the base `l1 -> r1`, followed by the right chain up to the
/// apex and the left chain back down.
pub fn random_funnel(rng: &mut impl Rng, n: usize) -> Polygon {
    assert!(n >= 3);
    loop {
        // Interior chain vertices: n - 3 split between the chains.
        let inner = n - 3;
        let left_inner = inner / 2 + rng.gen_range(0..=inner % 2);
        let right_inner = inner - left_inner;
        let h = rng.gen_range(8.0..20.0);
        // Nearly mirror-symmetric chains are the hard cases for guarding.
        let (w0, g0) = (rng.gen_range(10.0..30.0), rng.gen_range(2.0..5.0));
        let chain = |rng: &mut ChaCha8Rng, count: usize, sign: f64| -> Vec<Point> {
            let w = w0 * rng.gen_range(0.85..1.15);
            let gamma = g0 * rng.gen_range(0.85..1.15);
            let mut ys: Vec<f64> = (0..count).map(|_| rng.gen_range(0.02f64..0.98) * h).collect();
            ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut out = vec![Point::new(rat(sign * w), rat(0.0))];
            for y in ys {
                let x = sign * w * (1.0 - y / h).powf(gamma);
                out.push(Point::new(rat(x), rat(y)));
            }
            out
        };
        let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
        let left = chain(&mut local, left_inner, -1.0);
        let right = chain(&mut local, right_inner, 1.0);
        let apex = Point::new(rat(0.0), rat(h));
        let mut ring = vec![left[0].clone()];
        ring.extend(right.iter().cloned());
        ring.push(apex);
        ring.extend(left[1..].iter().rev().cloned());
        if ring.len() != n {
            continue;
        }
        let Ok(poly) = Polygon::simple(ring.clone()) else { continue };
        let convex = (0..n).filter(|&i| orient_sign(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]) > 0).count();
        let flat = (0..n).any(|i| orient_sign(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]) == 0);
        if convex == 3 && !flat {
            return poly;
        }
    }
}

/// Random polygon weakly visible from its edge `0 -> 1`: the weak
/// visibility polygon of an edge of a random simple polygon, with at most
/// `max_n` vertices. Both base endpoints are convex.
pub fn random_weakvis_polygon(rng: &mut impl Rng, n_source: usize, max_n: usize) -> Polygon {
    loop {
        let p = random_simple_polygon(rng, n_source);
        let ring = Region::from_polygon(&p);
        let start = rng.gen_range(0..ring.len());
        let cut = weak_visibility_region(&ring.rotated(start));
        let pts = cut.region.pts;
        if pts.len() < 3 || pts.len() > max_n {
            continue;
        }
        // Window endpoints may create collinear runs; keep them, they are valid.
        let ok = (0..pts.len()).all(|i| {
            let m = pts.len();
            (i + 2..m).all(|j| (i == 0 && j == m - 1) || !segments_intersect(&pts[i], &pts[i + 1], &pts[j], &pts[(j + 1) % m]))
        });
        let m = pts.len();
        let convex_base = orient_sign(&pts[m - 1], &pts[0], &pts[1]) > 0 && orient_sign(&pts[0], &pts[1], &pts[2 % m]) > 0;
        if ok && convex_base {
            if let Ok(poly) = Polygon::simple(pts) {
                return poly;
            }
        }
    }
}
