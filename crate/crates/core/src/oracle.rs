//! Brute-force ground truth: coverage and conflict-free verifiers, minimum
//! guard sets, conflict-free chromatic numbers and proper chromatic numbers.

use num_bigint::BigInt;
use rand::Rng;

use crate::arrangement::{bounded_faces, interior_point};
use crate::error::{Error, Result};
use crate::funnel::GuardColoring;
use crate::geom::{locate_in_ring, point_in_polygon, segment_between, Location, Point, Polygon, Q};
use crate::random::rng;
use crate::triangulate::triangulate;
use crate::visibility::{visibility_region_of_point, Region, VisibilityGraph};

pub const DEFAULT_SAMPLES: usize = 20_000;
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Sampled { samples: usize, seed: u64 },
}

impl Mode {
    pub fn sampled() -> Mode {
        Mode::Sampled { samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    ExactArrangement { faces: usize },
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub covered: bool,
    pub witness: Option<Point>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictFreeReport {
    /// Every test point sees at least one guard.
    pub covered: bool,
    /// Every test point sees a colour exactly once.
    pub conflict_free: bool,
    pub violations: usize,
    pub witness: Option<Point>,
    pub method: Method,
}

/// Window segments of the visibility polygon of vertex `g`.
fn windows_of(ring: &Region, g: &Point) -> Result<Vec<(Point, Point)>> {
    let cut = visibility_region_of_point(ring, g)?;
    let m = cut.region.len();
    Ok(cut.windows.iter().map(|&k| (cut.region.pts[k].clone(), cut.region.pts[(k + 1) % m].clone())).collect())
}

/// One interior point per face of the arrangement formed by the boundary
/// and the visibility windows of all `candidates`. Visibility from any
/// candidate is constant on each face.
pub fn face_points(poly: &Polygon, candidates: &[usize]) -> Result<Vec<Point>> {
    poly.require_simple()?;
    let region = Region::from_polygon(poly);
    let mut segs: Vec<(Point, Point)> = (0..region.len()).map(|k| (region.pts[k].clone(), region.pts[(k + 1) % region.len()].clone())).collect();
    for &g in candidates {
        segs.extend(windows_of(&region, poly.vertex(g))?);
    }
    let faces = bounded_faces(&segs);
    faces
        .iter()
        .map(|f| interior_point(f).ok_or_else(|| Error::Internal("arrangement face without interior point".into())))
        .collect()
}

/// Test points of the sampled verifier: the centroid of every triangle of
/// a triangulation, then uniform samples from the bounding box that fall
/// strictly inside.
pub fn sample_points(poly: &Polygon, count: usize, seed: u64) -> Vec<Point> {
    let ring = poly.outer_points();
    let third = Q::new(1.into(), 3.into());
    let mut out: Vec<Point> = triangulate(&ring)
        .into_iter()
        .filter(|t| crate::geom::orient_sign(&ring[t[0]], &ring[t[1]], &ring[t[2]]) > 0)
        .map(|t| ring[t[0]].add(&ring[t[1]]).add(&ring[t[2]]).scale(&third))
        .filter(|p| point_in_polygon(p, poly) == Location::Interior)
        .collect();
    let (mut lo, mut hi) = (ring[0].clone(), ring[0].clone());
    for p in poly.vertices() {
        lo = Point::new(lo.x.clone().min(p.x.clone()), lo.y.clone().min(p.y.clone()));
        hi = Point::new(hi.x.clone().max(p.x.clone()), hi.y.clone().max(p.y.clone()));
    }
    let mut r = rng(seed);
    let scale = 1i64 << 24;
    let dyadic = |r: &mut rand_chacha::ChaCha8Rng| Q::new(BigInt::from(r.gen_range(0..=scale)), BigInt::from(scale));
    let mut guard = 0usize;
    while out.len() < count && guard < count * 1000 {
        guard += 1;
        let p = Point::new(&lo.x + (&hi.x - &lo.x) * dyadic(&mut r), &lo.y + (&hi.y - &lo.y) * dyadic(&mut r));
        if point_in_polygon(&p, poly) == Location::Interior {
            out.push(p);
        }
    }
    out.truncate(count.max(1));
    out
}

/// For each test point, which of `guards` see it.
fn visibility_table(poly: &Polygon, guards: &[usize], mode: Mode) -> Result<(Vec<Point>, Vec<Vec<bool>>, Method)> {
    match mode {
        Mode::Exact => {
            let pts = face_points(poly, guards)?;
            let ring = poly.outer_points();
            let table = pts
                .iter()
                .map(|x| guards.iter().map(|&g| crate::geom::segment_in_ring(poly.vertex(g), x, &ring)).collect())
                .collect();
            let faces = pts.len();
            Ok((pts, table, Method::ExactArrangement { faces }))
        }
        Mode::Sampled { samples, seed } => {
            let pts = sample_points(poly, samples, seed);
            let table = if poly.has_holes() {
                pts.iter().map(|x| guards.iter().map(|&g| segment_between(poly.vertex(g), x, poly)).collect()).collect()
            } else {
                let region = Region::from_polygon(poly);
                let vis: Vec<Vec<Point>> = guards
                    .iter()
                    .map(|&g| visibility_region_of_point(&region, poly.vertex(g)).map(|c| c.region.pts))
                    .collect::<Result<_>>()?;
                pts.iter().map(|x| vis.iter().map(|v| locate_in_ring(x, v) != Location::Exterior).collect()).collect()
            };
            let count = pts.len();
            Ok((pts, table, Method::Sampled { count, seed }))
        }
    }
}

fn check_guards(poly: &Polygon, guards: &[usize]) -> Result<()> {
    for &g in guards {
        if g >= poly.n() {
            return Err(Error::IndexOutOfRange { index: g, n: poly.n() });
        }
    }
    Ok(())
}

pub fn coverage_check(poly: &Polygon, guards: &[usize], mode: Mode) -> Result<CoverageReport> {
    check_guards(poly, guards)?;
    let (pts, table, method) = visibility_table(poly, guards, mode)?;
    let witness = pts.iter().zip(&table).find(|(_, row)| !row.iter().any(|&b| b)).map(|(p, _)| p.clone());
    Ok(CoverageReport { covered: witness.is_none(), witness, method })
}

/// Conflict-free verification of a coloured guard set.
pub fn conflict_free_check(poly: &Polygon, coloring: &GuardColoring, mode: Mode) -> Result<ConflictFreeReport> {
    let guards: Vec<usize> = coloring.colors.keys().copied().collect();
    check_guards(poly, &guards)?;
    let colors: Vec<u32> = coloring.colors.values().copied().collect();
    let (pts, table, method) = visibility_table(poly, &guards, mode)?;
    let mut covered = true;
    let mut violations = 0;
    let mut witness = None;
    for (p, row) in pts.iter().zip(&table) {
        let seen: Vec<u32> = row.iter().zip(&colors).filter(|(&b, _)| b).map(|(_, &c)| c).collect();
        if seen.is_empty() {
            covered = false;
        }
        if !has_unique(&seen) {
            violations += 1;
            witness.get_or_insert_with(|| p.clone());
        }
    }
    Ok(ConflictFreeReport { covered, conflict_free: violations == 0, violations, witness, method })
}

fn has_unique(colors: &[u32]) -> bool {
    colors.iter().any(|c| colors.iter().filter(|d| *d == c).count() == 1)
}

/// Visibility masks (bit `v` = vertex `v` sees the face) of every face of
/// the all-vertex arrangement.
pub fn face_masks(poly: &Polygon) -> Result<Vec<u64>> {
    let n = poly.n();
    if n > 64 {
        return Err(Error::LimitExceeded { n, limit: 64 });
    }
    let all: Vec<usize> = (0..n).collect();
    let pts = face_points(poly, &all)?;
    let ring = poly.outer_points();
    let mut masks: Vec<u64> = pts
        .iter()
        .map(|x| (0..n).filter(|&v| crate::geom::segment_in_ring(poly.vertex(v), x, &ring)).fold(0u64, |m, v| m | 1 << v))
        .collect();
    masks.sort_unstable();
    masks.dedup();
    Ok(masks)
}

pub const MIN_GUARD_LIMIT: usize = 14;

/// Smallest vertex guard set covering the polygon (exact), ties broken by
/// the lexicographically smallest sorted index list.
pub fn min_guard_set_bruteforce(poly: &Polygon, limit: usize) -> Result<Vec<usize>> {
    let n = poly.n();
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let masks = face_masks(poly)?;
    for size in 1..=n {
        let mut best = None;
        for_each_subset(n, size, &mut |s: &[usize]| {
            let m = s.iter().fold(0u64, |m, &v| m | 1 << v);
            if masks.iter().all(|&f| f & m != 0) {
                best = Some(s.to_vec());
                return true;
            }
            false
        });
        if let Some(b) = best {
            return Ok(b);
        }
    }
    Err(Error::Internal("no guard set covers the polygon".into()))
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order until
/// it returns true.
fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, size: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if acc.len() == size {
            return f(acc);
        }
        for v in start..n {
            if n - v < size - acc.len() {
                break;
            }
            acc.push(v);
            if rec(v + 1, n, size, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(0, n, size, &mut Vec::new(), f)
}

pub const CF_LIMIT: usize = 10;

/// Does some assignment of colours `1..=k` (or none) to vertices give every
/// face-mask a uniquely occurring colour? Returns the assignment.
pub fn cf_assignment(n: usize, masks: &[u64], k: u32) -> Option<Vec<u32>> {
    // Faces become decidable once their highest vertex is assigned.
    let mut by_last: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &m in masks {
        if m == 0 {
            return None;
        }
        by_last[63 - m.leading_zeros() as usize].push(m);
    }
    fn ok(m: u64, col: &[u32]) -> bool {
        let mut counts = [0u8; 33];
        let mut v = m;
        while v != 0 {
            let i = v.trailing_zeros() as usize;
            v &= v - 1;
            if col[i] > 0 {
                counts[col[i] as usize] = counts[col[i] as usize].saturating_add(1);
            }
        }
        counts.iter().any(|&c| c == 1)
    }
    fn rec(i: usize, n: usize, k: u32, used: u32, col: &mut Vec<u32>, by_last: &[Vec<u64>]) -> bool {
        if i == n {
            return true;
        }
        // Colours are introduced in increasing order (symmetry breaking).
        for c in 0..=k.min(used + 1) {
            col[i] = c;
            if by_last[i].iter().all(|&m| ok(m, col)) && rec(i + 1, n, k, used.max(c), col, by_last) {
                return true;
            }
        }
        col[i] = 0;
        false
    }
    let mut col = vec![0u32; n];
    rec(0, n, k, 0, &mut col, &by_last).then_some(col)
}

/// Minimum number of colours of a conflict-free vertex-to-point guarding,
/// if at most `kmax`.
pub fn cf_chromatic_number_bruteforce(poly: &Polygon, kmax: u32, limit: usize) -> Result<Option<u32>> {
    let n = poly.n();
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let masks = face_masks(poly)?;
    Ok((1..=kmax).find(|&k| cf_assignment(n, &masks, k).is_some()))
}

pub const CHROMATIC_LIMIT: usize = 20;

/// Proper colouring with at most `k` colours (backtracking), if any.
pub fn proper_coloring(g: &VisibilityGraph, k: u32) -> Option<Vec<u32>> {
    let n = g.n();
    // Highest degree first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    fn rec(i: usize, order: &[usize], g: &VisibilityGraph, k: u32, used: u32, col: &mut Vec<u32>) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 1..=k.min(used + 1) {
            if g.neighbours(v).all(|w| col[w] != c) {
                col[v] = c;
                if rec(i + 1, order, g, k, used.max(c), col) {
                    return true;
                }
                col[v] = 0;
            }
        }
        false
    }
    let mut col = vec![0u32; n];
    rec(0, &order, g, k, 0, &mut col).then_some(col)
}

pub fn chromatic_number_bruteforce(g: &VisibilityGraph, kmax: u32) -> Result<Option<u32>> {
    if g.n() > CHROMATIC_LIMIT {
        return Err(Error::LimitExceeded { n: g.n(), limit: CHROMATIC_LIMIT });
    }
    if g.n() == 0 {
        return Ok(Some(0));
    }
    Ok((1..=kmax).find(|&k| proper_coloring(g, k).is_some()))
}

pub const V2V_LIMIT: usize = 20;

/// Conflict-free closed-neighbourhood colouring with at most `k` colours,
/// with the vertices in `forbidden` left uncoloured.
pub fn v2v_assignment(g: &VisibilityGraph, k: u32, forbidden: &[usize]) -> Option<Vec<u32>> {
    let n = g.n();
    let masks = g.closed_masks();
    face_like(n, &masks, k, forbidden)
}

fn face_like(n: usize, masks: &[u64], k: u32, forbidden: &[usize]) -> Option<Vec<u32>> {
    if forbidden.is_empty() {
        return cf_assignment(n, masks, k);
    }
    // Dropping forbidden vertices from every mask forces them uncoloured.
    let keep: u64 = !forbidden.iter().fold(0u64, |m, &v| m | 1 << v);
    let reduced: Vec<u64> = masks.iter().map(|&m| m & keep).collect();
    cf_assignment(n, &reduced, k).map(|mut c| {
        for &v in forbidden {
            c[v] = 0;
        }
        c
    })
}

pub fn v2v_cf_bruteforce(g: &VisibilityGraph, cmax: u32, limit: usize) -> Result<Option<u32>> {
    if g.n() > limit {
        return Err(Error::LimitExceeded { n: g.n(), limit });
    }
    Ok((1..=cmax).find(|&k| v2v_assignment(g, k, &[]).is_some()))
}
