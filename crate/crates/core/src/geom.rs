//! Exact planar primitives: rational points, orientation, point and segment
//! containment, and polygon validation/normalisation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Diagnostic, Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_decimal(&self.x), format_decimal(&self.y))
    }
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point { x: q(x), y: q(y) }
    }

    /// Parses two decimal strings (`"-1.25"`, `"3e-2"`, `"1/3"`) losslessly.
    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(Point { x: parse_decimal(x)?, y: parse_decimal(y)? })
    }

    /// Shorthand for tests and figure data: `Point::f(0.5, 1.25)` goes through
    /// the shortest decimal representation of each `f64`, so figure
    /// coordinates written as literals stay exact.
    pub fn f(x: f64, y: f64) -> Self {
        Point::parse(&format!("{x}"), &format!("{y}")).expect("finite literal")
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn add(&self, o: &Point) -> Point {
        Point { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn scale(&self, k: &Q) -> Point {
        Point { x: &self.x * k, y: &self.y * k }
    }

    /// `self + t (o - self)`.
    pub fn lerp(&self, o: &Point, t: &Q) -> Point {
        Point { x: &self.x + (&o.x - &self.x) * t, y: &self.y + (&o.y - &self.y) * t }
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        let h = qf(1, 2);
        Point { x: (&self.x + &o.x) * &h, y: (&self.y + &o.y) * &h }
    }

    pub fn dist2(&self, o: &Point) -> Q {
        let dx = &self.x - &o.x;
        let dy = &self.y - &o.y;
        &dx * &dx + &dy * &dy
    }
}

pub fn cross(a: &Point, b: &Point) -> Q {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Point, b: &Point) -> Q {
    &a.x * &b.x + &a.y * &b.y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Collinear,
    Right,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Left => 1,
            Orientation::Collinear => 0,
            Orientation::Right => -1,
        }
    }
}

// Difference of two rationals as an unreduced fraction with positive
// denominator; skipping the gcd is what makes orientation cheap.
fn diff_raw(a: &Q, b: &Q) -> (BigInt, BigInt) {
    let (an, ad) = (a.numer(), a.denom());
    let (bn, bd) = (b.numer(), b.denom());
    if ad == bd {
        (an - bn, ad.clone())
    } else if bd.is_one() {
        (an - bn * ad, ad.clone())
    } else if ad.is_one() {
        (an * bd - bn, bd.clone())
    } else {
        (an * bd - bn * ad, ad * bd)
    }
}

fn mul_d(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else {
        a * b
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orient_sign(p: &Point, q: &Point, r: &Point) -> i8 {
    let (a, ad) = diff_raw(&q.x, &p.x);
    let (b, bd) = diff_raw(&r.y, &p.y);
    let (c, cd) = diff_raw(&q.y, &p.y);
    let (d, dd) = diff_raw(&r.x, &p.x);
    // a/ad * b/bd - c/cd * d/dd, all denominators positive.
    let l = &a * &b * mul_d(&cd, &dd);
    let r = &c * &d * mul_d(&ad, &bd);
    match l.cmp(&r) {
        Ordering::Greater => 1,
        Ordering::Equal => 0,
        Ordering::Less => -1,
    }
}

pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    match orient_sign(p, q, r) {
        1 => Orientation::Left,
        0 => Orientation::Collinear,
        _ => Orientation::Right,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::Invalid("segment endpoints coincide".into()));
        }
        Ok(Segment { a, b })
    }

    pub fn reversed(&self) -> Segment {
        Segment { a: self.b.clone(), b: self.a.clone() }
    }
}

/// `p` on the closed segment `ab` (`a != b` not required).
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient_sign(a, b, p) != 0 {
        return false;
    }
    in_box(p, a, b)
}

fn in_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (xl, xh) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (yl, yh) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    &p.x >= xl && &p.x <= xh && &p.y >= yl && &p.y <= yh
}

/// Interiors of `ab` and `cd` cross at a single point that is an endpoint of
/// neither.
pub fn proper_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient_sign(a, b, c);
    let o2 = orient_sign(a, b, d);
    if o1 == 0 || o2 == 0 || o1 == o2 {
        return false;
    }
    let o3 = orient_sign(c, d, a);
    let o4 = orient_sign(c, d, b);
    o3 != 0 && o4 != 0 && o3 != o4
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient_sign(a, b, c);
    let o2 = orient_sign(a, b, d);
    let o3 = orient_sign(c, d, a);
    let o4 = orient_sign(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && in_box(c, a, b))
        || (o2 == 0 && in_box(d, a, b))
        || (o3 == 0 && in_box(a, c, d))
        || (o4 == 0 && in_box(b, c, d))
}

/// Parameters `(t, u)` with `a + t(b-a) = c + u(d-c)` for non-parallel lines.
pub fn line_params(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<(Q, Q)> {
    let r = b.sub(a);
    let s = d.sub(c);
    let den = cross(&r, &s);
    if den.is_zero() {
        return None;
    }
    let ca = c.sub(a);
    let t = cross(&ca, &s) / &den;
    let u = cross(&ca, &r) / &den;
    Some((t, u))
}

/// Position of a point `p` known to be on line `ab` as the parameter `t` of
/// `a + t(b - a)`.
pub fn param_on(p: &Point, a: &Point, b: &Point) -> Q {
    if a.x != b.x {
        (&p.x - &a.x) / (&b.x - &a.x)
    } else {
        (&p.y - &a.y) / (&b.y - &a.y)
    }
}

/// Twice the signed area of a ring (positive for counterclockwise).
pub fn area2(ring: &[Point]) -> Q {
    let n = ring.len();
    let mut s = Q::zero();
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        s += &a.x * &b.y - &a.y * &b.x;
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// Location of `p` relative to a single closed ring (orientation ignored).
pub fn locate_in_ring(p: &Point, ring: &[Point]) -> Location {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        // Half-open crossing rule on a rightward ray.
        if (a.y > p.y) != (b.y > p.y) {
            let o = orient_sign(a, b, p);
            if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Interior
    } else {
        Location::Exterior
    }
}

/// A polygon with optional holes. Vertices keep their input indices:
/// outer vertices first, then each hole in order. `rings` hold those indices
/// in canonical order (outer counterclockwise, holes clockwise), so the
/// interior is always to the left of every directed ring edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    verts: Vec<Point>,
    rings: Vec<Vec<usize>>,
}

impl Polygon {
    /// Normalises ring orientation and validates.
    pub fn new(outer: Vec<Point>, holes: Vec<Vec<Point>>) -> Result<Self> {
        let mut p = Polygon::from_rings_raw(outer, holes);
        p.normalize()?;
        p.validate()?;
        Ok(p)
    }

    pub fn simple(outer: Vec<Point>) -> Result<Self> {
        Polygon::new(outer, Vec::new())
    }

    /// Builds rings in input order without normalising or validating.
    pub fn from_rings_raw(outer: Vec<Point>, holes: Vec<Vec<Point>>) -> Self {
        let mut verts = Vec::new();
        let mut rings = Vec::new();
        for ring in std::iter::once(outer).chain(holes) {
            let start = verts.len();
            rings.push((start..start + ring.len()).collect());
            verts.extend(ring);
        }
        Polygon { verts, rings }
    }

    fn normalize(&mut self) -> Result<()> {
        for (k, ring) in self.rings.iter_mut().enumerate() {
            if ring.len() < 3 {
                return Err(Diagnostic::TooFewVertices { ring: k, count: ring.len() }.into());
            }
            let pts: Vec<Point> = ring.iter().map(|&i| self.verts[i].clone()).collect();
            let a = area2(&pts);
            if (k == 0 && a.is_negative()) || (k > 0 && a.is_positive()) {
                ring.reverse();
                // Keep the first input vertex first.
                ring.rotate_right(1);
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.verts[i]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn rings(&self) -> &[Vec<usize>] {
        &self.rings
    }

    pub fn outer_ring(&self) -> &[usize] {
        &self.rings[0]
    }

    pub fn has_holes(&self) -> bool {
        self.rings.len() > 1
    }

    pub fn ring_points(&self, k: usize) -> Vec<Point> {
        self.rings[k].iter().map(|&i| self.verts[i].clone()).collect()
    }

    /// Outer ring as counterclockwise points.
    pub fn outer_points(&self) -> Vec<Point> {
        self.ring_points(0)
    }

    /// Input-order outer and hole rings (as read from a scene file).
    pub fn input_rings(&self) -> (Vec<Point>, Vec<Vec<Point>>) {
        let mut rings: Vec<Vec<Point>> = self
            .rings
            .iter()
            .map(|r| {
                let mut idx = r.clone();
                idx.sort_unstable();
                idx.into_iter().map(|i| self.verts[i].clone()).collect()
            })
            .collect();
        let outer = rings.remove(0);
        (outer, rings)
    }

    /// All directed boundary edges `(i, j)` with the interior on the left.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for ring in &self.rings {
            let m = ring.len();
            for k in 0..m {
                out.push((ring[k], ring[(k + 1) % m]));
            }
        }
        out
    }

    pub fn area2(&self) -> Q {
        let mut a = Q::zero();
        for k in 0..self.rings.len() {
            a += area2(&self.ring_points(k));
        }
        a
    }

    /// Index of the ring containing vertex `i` and `i`'s position in it.
    pub fn ring_of(&self, i: usize) -> (usize, usize) {
        for (k, r) in self.rings.iter().enumerate() {
            if let Some(pos) = r.iter().position(|&v| v == i) {
                return (k, pos);
            }
        }
        panic!("vertex {i} not in polygon");
    }

    /// Counterclockwise neighbours `(prev, next)` of vertex `i` along its ring.
    pub fn neighbours(&self, i: usize) -> (usize, usize) {
        let (k, pos) = self.ring_of(i);
        let r = &self.rings[k];
        let m = r.len();
        (r[(pos + m - 1) % m], r[(pos + 1) % m])
    }

    /// Interior angle at `i` exceeds 180 degrees.
    pub fn is_reflex(&self, i: usize) -> bool {
        let (a, b) = self.neighbours(i);
        orient_sign(&self.verts[a], &self.verts[i], &self.verts[b]) < 0
    }

    pub fn is_convex_vertex(&self, i: usize) -> bool {
        let (a, b) = self.neighbours(i);
        orient_sign(&self.verts[a], &self.verts[i], &self.verts[b]) > 0
    }

    /// Checks every polygon invariant, reporting the first violation.
    pub fn validate(&self) -> std::result::Result<(), Diagnostic> {
        for (k, ring) in self.rings.iter().enumerate() {
            if ring.len() < 3 {
                return Err(Diagnostic::TooFewVertices { ring: k, count: ring.len() });
            }
        }
        for (k, ring) in self.rings.iter().enumerate() {
            let mut idx: Vec<usize> = ring.clone();
            idx.sort_unstable();
            let base = idx[0];
            for a in 0..idx.len() {
                for b in a + 1..idx.len() {
                    if self.verts[idx[a]] == self.verts[idx[b]] {
                        return Err(Diagnostic::RepeatedVertex { ring: k, i: idx[a] - base, j: idx[b] - base });
                    }
                }
            }
            self.check_ring_simple(k)?;
        }
        for k in 0..self.rings.len() {
            let a = area2(&self.ring_points(k));
            if a.is_zero() {
                return Err(Diagnostic::ZeroArea { ring: k });
            }
            if (k == 0) != a.is_positive() {
                return Err(Diagnostic::WrongOrientation { ring: k });
            }
        }
        let outer = self.ring_points(0);
        for h in 1..self.rings.len() {
            let base = *self.rings[h].iter().min().unwrap();
            let mut idx = self.rings[h].clone();
            idx.sort_unstable();
            for &i in &idx {
                if locate_in_ring(&self.verts[i], &outer) != Location::Interior {
                    return Err(Diagnostic::HoleOutside { hole: h - 1, vertex: i - base });
                }
            }
            if rings_touch(&outer, &self.ring_points(h)) {
                return Err(Diagnostic::HoleOutside { hole: h - 1, vertex: 0 });
            }
        }
        for a in 1..self.rings.len() {
            for b in a + 1..self.rings.len() {
                let ra = self.ring_points(a);
                let rb = self.ring_points(b);
                if rings_touch(&ra, &rb)
                    || locate_in_ring(&ra[0], &rb) != Location::Exterior
                    || locate_in_ring(&rb[0], &ra) != Location::Exterior
                {
                    return Err(Diagnostic::HolesOverlap { a: a - 1, b: b - 1 });
                }
            }
        }
        Ok(())
    }

    fn check_ring_simple(&self, k: usize) -> std::result::Result<(), Diagnostic> {
        // Edges are numbered by input order so diagnostics match the file.
        let mut idx = self.rings[k].clone();
        idx.sort_unstable();
        let m = idx.len();
        let p: Vec<&Point> = idx.iter().map(|&i| &self.verts[i]).collect();
        for e in 0..m {
            let (a, b) = (p[e], p[(e + 1) % m]);
            // Adjacent edge folding back over this one.
            let c = p[(e + 2) % m];
            if orient_sign(a, b, c) == 0 && dot(&b.sub(a), &c.sub(b)).is_negative() {
                return Err(Diagnostic::SelfIntersection {
                    ring: k,
                    e1: (e, (e + 1) % m),
                    e2: ((e + 1) % m, (e + 2) % m),
                });
            }
            for f in e + 2..m {
                if e == 0 && f == m - 1 {
                    continue;
                }
                let (c, d) = (p[f], p[(f + 1) % m]);
                if segments_intersect(a, b, c, d) {
                    return Err(Diagnostic::SelfIntersection { ring: k, e1: (e, (e + 1) % m), e2: (f, (f + 1) % m) });
                }
            }
        }
        Ok(())
    }

    /// `ring_points` of every ring.
    pub fn all_rings(&self) -> Vec<Vec<Point>> {
        (0..self.rings.len()).map(|k| self.ring_points(k)).collect()
    }

    pub fn require_simple(&self) -> Result<()> {
        if self.has_holes() {
            Err(Error::HasHoles)
        } else {
            Ok(())
        }
    }
}

fn rings_touch(a: &[Point], b: &[Point]) -> bool {
    for i in 0..a.len() {
        for j in 0..b.len() {
            if segments_intersect(&a[i], &a[(i + 1) % a.len()], &b[j], &b[(j + 1) % b.len()]) {
                return true;
            }
        }
    }
    false
}

pub fn point_in_polygon(p: &Point, poly: &Polygon) -> Location {
    let mut inside = false;
    for (i, j) in poly.edges() {
        let a = poly.vertex(i);
        let b = poly.vertex(j);
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let o = orient_sign(a, b, p);
            if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Interior
    } else {
        Location::Exterior
    }
}

/// Closed-segment containment in the closed region bounded by `edges`
/// (pairs of points). Boundary contact, including passing through vertices,
/// is allowed.
pub fn segment_inside_edges(a: &Point, b: &Point, edges: &[(&Point, &Point)], locate: impl Fn(&Point) -> Location) -> bool {
    if locate(a) == Location::Exterior || locate(b) == Location::Exterior {
        return false;
    }
    if a == b {
        return true;
    }
    let mut ts: Vec<Q> = vec![Q::zero(), Q::one()];
    for &(c, d) in edges {
        let o1 = orient_sign(a, b, c);
        let o2 = orient_sign(a, b, d);
        if o1 != 0 && o2 != 0 && o1 == o2 {
            continue;
        }
        let o3 = orient_sign(c, d, a);
        let o4 = orient_sign(c, d, b);
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return false;
        }
        if o1 == 0 && in_box(c, a, b) {
            ts.push(param_on(c, a, b));
        }
        if o2 == 0 && in_box(d, a, b) {
            ts.push(param_on(d, a, b));
        }
    }
    if ts.len() == 2 {
        return locate(&a.midpoint(b)) != Location::Exterior;
    }
    ts.sort();
    ts.dedup();
    for w in ts.windows(2) {
        let t = (&w[0] + &w[1]) / q(2);
        if locate(&a.lerp(b, &t)) == Location::Exterior {
            return false;
        }
    }
    true
}

pub fn segment_in_polygon(s: &Segment, poly: &Polygon) -> bool {
    segment_between(&s.a, &s.b, poly)
}

/// [`segment_in_polygon`] without constructing a [`Segment`]; degenerate
/// segments reduce to point containment.
pub fn segment_between(a: &Point, b: &Point, poly: &Polygon) -> bool {
    let edges: Vec<(&Point, &Point)> = poly.edges().into_iter().map(|(i, j)| (poly.vertex(i), poly.vertex(j))).collect();
    segment_inside_edges(a, b, &edges, |p| point_in_polygon(p, poly))
}

/// Closed containment of segment `ab` in a simple ring.
pub fn segment_in_ring(a: &Point, b: &Point, ring: &[Point]) -> bool {
    let n = ring.len();
    let edges: Vec<(&Point, &Point)> = (0..n).map(|i| (&ring[i], &ring[(i + 1) % n])).collect();
    segment_inside_edges(a, b, &edges, |p| locate_in_ring(p, ring))
}

/// Parses a decimal (`-12.5`, `.5`, `3e-2`) or fraction (`7/3`) losslessly.
pub fn parse_decimal(s: &str) -> Result<Q> {
    let bad = || Error::Invalid(format!("malformed number {s:?}"));
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if (ip.is_empty() && fp.is_empty()) || !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    if neg {
        num = -num;
    }
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let v = if scale >= 0 {
        Q::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Q::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(v)
}

/// Canonical string: a terminating decimal when the value has one, else `n/d`.
pub fn format_decimal(v: &Q) -> String {
    let d = v.denom().clone();
    let mut rest = d.clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return format!("{}/{}", v.numer(), v.denom());
    }
    let k = twos.max(fives);
    if k == 0 {
        return v.numer().to_string();
    }
    let scaled = v.numer() * num_traits::pow(BigInt::from(10), k) / &d;
    let neg = scaled.is_negative();
    let mut digits = scaled.abs().to_string();
    if digits.len() <= k {
        digits = format!("{}{}", "0".repeat(k + 1 - digits.len()), digits);
    }
    let (ip, fp) = digits.split_at(digits.len() - k);
    let fp = fp.trim_end_matches('0');
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(ip);
    if !fp.is_empty() {
        s.push('.');
        s.push_str(fp);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_round_trip() {
        for s in ["0", "-1.25", "3", "0.001", "1/3", "-7/9", "123.5"] {
            let v = parse_decimal(s).unwrap();
            assert_eq!(parse_decimal(&format_decimal(&v)).unwrap(), v);
        }
        assert_eq!(format_decimal(&parse_decimal("1.500").unwrap()), "1.5");
        assert_eq!(format_decimal(&parse_decimal("2.5e-3").unwrap()), "0.0025");
        assert_eq!(format_decimal(&parse_decimal("-.5").unwrap()), "-0.5");
        assert!(parse_decimal("1..2").is_err());
        assert!(parse_decimal("").is_err());
    }

    #[test]
    fn orientation_basics() {
        let o = Point::int(0, 0);
        assert_eq!(orientation(&o, &Point::int(1, 0), &Point::int(0, 1)), Orientation::Left);
        assert_eq!(orientation(&o, &Point::int(1, 1), &Point::int(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&o, &Point::int(0, 1), &Point::int(1, 0)), Orientation::Right);
        assert_eq!(orientation(&Point::f(0.1, 0.2), &Point::f(0.3, 0.6), &Point::f(0.5, 1.0)), Orientation::Collinear);
    }

    #[test]
    fn normalisation_keeps_indices() {
        let cw = vec![Point::int(0, 0), Point::int(0, 1), Point::int(1, 1), Point::int(1, 0)];
        let p = Polygon::simple(cw).unwrap();
        assert_eq!(p.outer_ring(), &[0, 3, 2, 1]);
        assert!(area2(&p.outer_points()).is_positive());
    }
}
