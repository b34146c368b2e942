//! Funnels: guarding with the upper-tangent digraph (simple and optimum
//! variants) and conflict-free colouring by the ruler sequence.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::{area2, line_params, orient_sign, segment_in_ring, Point, Polygon, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A chain vertex, `index` counted from 0 at the base (`l1` is `Left, 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainVertex {
    pub side: Side,
    pub index: usize,
}

impl fmt::Display for ChainVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.side == Side::Left { 'l' } else { 'r' };
        write!(f, "{}{}", c, self.index + 1)
    }
}

/// Two concave chains from the base edge `l1 r1` up to a shared apex.
///
/// `left_idx` / `right_idx` name each chain vertex in the polygon the funnel
/// came from; the apex is the last entry of both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Funnel {
    pub left: Vec<Point>,
    pub right: Vec<Point>,
    pub left_idx: Vec<usize>,
    pub right_idx: Vec<usize>,
}

/// Partial vertex colouring; absent vertices carry no guard.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GuardColoring {
    pub colors: BTreeMap<usize, u32>,
}

impl GuardColoring {
    pub fn guards(&self) -> Vec<usize> {
        self.colors.keys().copied().collect()
    }

    pub fn color_count(&self) -> usize {
        let mut c: Vec<u32> = self.colors.values().copied().collect();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardSet {
    /// Guard vertices in the order the algorithm placed them (bottom-up for
    /// funnels).
    pub guards: Vec<usize>,
}

impl GuardSet {
    pub fn len(&self) -> usize {
        self.guards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guards.is_empty()
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut g = self.guards.clone();
        g.sort_unstable();
        g
    }
}

fn turn(ring: &[Point], i: usize) -> i8 {
    let n = ring.len();
    orient_sign(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n])
}

impl Funnel {
    /// Builds a funnel from explicit chains (both starting at the base and
    /// ending at the common apex). Flat vertices are tolerated, reflex turns
    /// the wrong way are not.
    pub fn from_chains(left: Vec<Point>, right: Vec<Point>, left_idx: Vec<usize>, right_idx: Vec<usize>) -> Result<Funnel> {
        if left.len() < 2 || right.len() < 2 || left.last() != right.last() {
            return Err(Error::NotAFunnel("chains must have two vertices each and share the apex".into()));
        }
        if left.len() != left_idx.len() || right.len() != right_idx.len() {
            return Err(Error::Invalid("chain index lists do not match the chains".into()));
        }
        let f = Funnel { left, right, left_idx, right_idx };
        let ring = f.ring();
        let n = ring.len();
        // Ring positions 0 and 1 are the base corners, position m is the apex.
        for i in 0..n {
            if i == 0 || i == 1 || i == f.m() {
                continue;
            }
            if turn(&ring, i) > 0 {
                return Err(Error::NotAFunnel(format!("chain vertex at ring position {i} is convex")));
            }
        }
        if area2(&ring) <= Q::zero() {
            return Err(Error::NotAFunnel("chains do not enclose a counterclockwise region".into()));
        }
        Ok(f)
    }

    pub fn k(&self) -> usize {
        self.left.len()
    }

    pub fn m(&self) -> usize {
        self.right.len()
    }

    pub fn apex(&self) -> &Point {
        self.left.last().unwrap()
    }

    pub fn apex_index(&self) -> usize {
        *self.left_idx.last().unwrap()
    }

    pub fn n(&self) -> usize {
        self.k() + self.m() - 1
    }

    /// Counterclockwise ring `l1, r1, ..., rm = apex, l(k-1), ..., l2`.
    pub fn ring(&self) -> Vec<Point> {
        let mut r = vec![self.left[0].clone()];
        r.extend(self.right.iter().cloned());
        r.extend(self.left[1..self.k() - 1].iter().rev().cloned());
        r
    }

    /// Source-vertex index of every ring position of [`Funnel::ring`].
    pub fn ring_idx(&self) -> Vec<usize> {
        let mut r = vec![self.left_idx[0]];
        r.extend(self.right_idx.iter().copied());
        r.extend(self.left_idx[1..self.k() - 1].iter().rev().copied());
        r
    }

    pub fn polygon(&self) -> Result<Polygon> {
        Polygon::simple(self.ring())
    }

    pub fn chain(&self, side: Side) -> &[Point] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn chain_idx(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.left_idx,
            Side::Right => &self.right_idx,
        }
    }

    pub fn point(&self, v: ChainVertex) -> &Point {
        &self.chain(v.side)[v.index]
    }

    pub fn vertex_index(&self, v: ChainVertex) -> usize {
        self.chain_idx(v.side)[v.index]
    }

    pub fn is_apex(&self, v: ChainVertex) -> bool {
        v.index + 1 == self.chain(v.side).len()
    }

    /// Chain position of a source vertex (the apex reports the left chain).
    pub fn locate_vertex(&self, idx: usize) -> Option<ChainVertex> {
        if let Some(i) = self.left_idx.iter().position(|&x| x == idx) {
            return Some(ChainVertex { side: Side::Left, index: i });
        }
        self.right_idx.iter().position(|&x| x == idx).map(|i| ChainVertex { side: Side::Right, index: i })
    }

    /// Display label such as `l3` or `r5`; the apex is named on the left.
    pub fn label(&self, idx: usize) -> Option<String> {
        let v = self.locate_vertex(idx)?;
        if self.is_apex(v) {
            return Some(format!("l{}", self.k()));
        }
        Some(v.to_string())
    }
}

/// Identifies the funnel structure of a simple polygon: exactly three
/// strictly convex vertices, two of them adjacent (the base). With
/// `base = Some((a, b))`, the base edge is forced to be `a b` (either
/// direction); otherwise the first qualifying edge in ring order is used.
pub fn funnel_from_polygon(poly: &Polygon, base: Option<(usize, usize)>) -> Result<Funnel> {
    if poly.has_holes() {
        return Err(Error::NotAFunnel("polygon has holes".into()));
    }
    let ring_idx = poly.outer_ring().to_vec();
    let ring = poly.outer_points();
    let n = ring.len();
    let convex: Vec<usize> = (0..n).filter(|&i| turn(&ring, i) > 0).collect();
    if convex.len() != 3 {
        return Err(Error::NotAFunnel(format!("{} convex vertices, exactly 3 are required", convex.len())));
    }
    let is_base = |i: usize| convex.contains(&i) && convex.contains(&((i + 1) % n));
    let start = match base {
        Some((a, b)) => {
            let pa = ring_idx.iter().position(|&x| x == a).ok_or(Error::IndexOutOfRange { index: a, n })?;
            let pb = ring_idx.iter().position(|&x| x == b).ok_or(Error::IndexOutOfRange { index: b, n })?;
            let s = if (pa + 1) % n == pb {
                pa
            } else if (pb + 1) % n == pa {
                pb
            } else {
                return Err(Error::NotAFunnel(format!("({a}, {b}) is not a boundary edge")));
            };
            if !is_base(s) {
                return Err(Error::NotAFunnel(format!("edge ({a}, {b}) does not join two convex vertices")));
            }
            s
        }
        None => (0..n).find(|&i| is_base(i)).ok_or_else(|| Error::NotAFunnel("no two convex vertices are adjacent".into()))?,
    };
    let apex_pos = *convex.iter().find(|&&c| c != start && c != (start + 1) % n).unwrap();
    let rot = |k: usize| (start + k) % n;
    let apex_off = (apex_pos + n - start) % n;
    let right: Vec<usize> = (1..=apex_off).map(rot).collect();
    let mut left: Vec<usize> = vec![rot(0)];
    left.extend((apex_off..n).rev().map(rot));
    Funnel::from_chains(
        left.iter().map(|&p| ring[p].clone()).collect(),
        right.iter().map(|&p| ring[p].clone()).collect(),
        left.iter().map(|&p| ring_idx[p]).collect(),
        right.iter().map(|&p| ring_idx[p]).collect(),
    )
}

/// Position on a chain: edge `edge` (from vertex `edge` to `edge + 1`) at
/// parameter `t` in `[0, 1)`; the apex is `(len - 1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainPos {
    pub edge: usize,
    pub t: Q,
}

impl ChainPos {
    fn vertex(i: usize) -> ChainPos {
        ChainPos { edge: i, t: Q::zero() }
    }
}

/// A cut across the funnel from a point of the left chain to a point of the
/// right chain, possibly bent once at `mid` (the lower envelope of two
/// crossing upper segments seen from above).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    pub left: ChainPos,
    pub right: ChainPos,
    pub mid: Option<Point>,
}

impl Funnel {
    fn at(&self, side: Side, p: &ChainPos) -> Point {
        let c = self.chain(side);
        if p.t.is_zero() {
            c[p.edge].clone()
        } else {
            c[p.edge].lerp(&c[p.edge + 1], &p.t)
        }
    }

    pub fn frontier_points(&self, f: &Frontier) -> Vec<Point> {
        let mut v = vec![self.at(Side::Left, &f.left)];
        if let Some(m) = &f.mid {
            v.push(m.clone());
        }
        v.push(self.at(Side::Right, &f.right));
        v
    }

    fn apex_frontier(&self) -> Frontier {
        Frontier { left: ChainPos::vertex(self.k() - 1), right: ChainPos::vertex(self.m() - 1), mid: None }
    }

    fn base_frontier(&self) -> Frontier {
        Frontier { left: ChainPos::vertex(0), right: ChainPos::vertex(0), mid: None }
    }

    /// The part of the funnel above `f` has zero area, i.e. `f` reaches
    /// the apex.
    fn completes(&self, f: &Frontier) -> bool {
        let (l, r) = (&self.left, &self.right);
        let mut ring = vec![self.at(Side::Left, &f.left)];
        ring.extend(l[f.left.edge + 1..].iter().cloned());
        ring.extend(r[(f.right.edge + 1).min(r.len() - 1)..r.len() - 1].iter().rev().cloned());
        ring.push(self.at(Side::Right, &f.right));
        if let Some(m) = &f.mid {
            ring.push(m.clone());
        }
        area2(&ring).is_zero()
    }
}

/// Upper segment of a non-apex chain vertex `v`: from its chain successor
/// along the ray `v -> successor` to the first point of the other chain.
pub fn upseg(f: &Funnel, v: ChainVertex) -> Result<Frontier> {
    if f.is_apex(v) {
        return Err(Error::Invalid("the apex has no upper tangent".into()));
    }
    let own = f.chain(v.side);
    let other = f.chain(v.side.other());
    let next = v.index + 1;
    let (own_pos, other_pos) = if next + 1 == own.len() {
        (ChainPos::vertex(next), ChainPos::vertex(other.len() - 1))
    } else {
        let o = &own[next];
        let far = o.add(&o.sub(&own[v.index]));
        let mut best: Option<(Q, ChainPos)> = None;
        let mut consider = |s: Q, pos: ChainPos| {
            if s > Q::zero() && best.as_ref().map_or(true, |(b, _)| s < *b) {
                best = Some((s, pos));
            }
        };
        for b in 0..other.len() - 1 {
            let (c, d) = (&other[b], &other[b + 1]);
            match line_params(o, &far, c, d) {
                Some((s, u)) => {
                    if u >= Q::zero() && u <= Q::one() {
                        let pos = if u == Q::one() { ChainPos::vertex(b + 1) } else { ChainPos { edge: b, t: u } };
                        consider(s, pos);
                    }
                }
                None => {
                    if orient_sign(o, &far, c) == 0 {
                        consider(crate::geom::param_on(c, o, &far), ChainPos::vertex(b));
                        consider(crate::geom::param_on(d, o, &far), ChainPos::vertex(b + 1));
                    }
                }
            }
        }
        let (_, pos) = best.ok_or_else(|| Error::Internal(format!("upper tangent of {v} misses the opposite chain")))?;
        (ChainPos::vertex(next), pos)
    };
    Ok(match v.side {
        Side::Left => Frontier { left: own_pos, right: other_pos, mid: None },
        Side::Right => Frontier { left: other_pos, right: own_pos, mid: None },
    })
}

/// Upper envelope of the upper segments of `l_a` and `r_b`.
fn pair_upseg(f: &Funnel, a: usize, b: usize) -> Result<Frontier> {
    let u1 = upseg(f, ChainVertex { side: Side::Left, index: a })?;
    let u2 = upseg(f, ChainVertex { side: Side::Right, index: b })?;
    let left = u1.left.clone().max(u2.left.clone());
    let right = u1.right.clone().max(u2.right.clone());
    let crossing = (u2.left > u1.left && u1.right > u2.right) || (u1.left > u2.left && u2.right > u1.right);
    let mid = if crossing {
        let (p1, p2) = (f.at(Side::Left, &u1.left), f.at(Side::Right, &u1.right));
        let (p3, p4) = (f.at(Side::Left, &u2.left), f.at(Side::Right, &u2.right));
        line_params(&p1, &p2, &p3, &p4).map(|(t, _)| p1.lerp(&p2, &t))
    } else {
        None
    };
    Ok(Frontier { left, right, mid })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Node {
    X,
    One(ChainVertex),
    Pair(usize, usize),
    Y,
}

struct Digraph {
    edges: HashMap<Node, Vec<(Node, u32)>>,
}

fn sees_whole(f: &Funnel, ring: &[Point], z: &Point, s: &Frontier) -> bool {
    f.frontier_points(s).iter().all(|p| p == z || segment_in_ring(z, p, ring))
}

fn normalise(f: &Funnel, v: ChainVertex) -> ChainVertex {
    if f.is_apex(v) {
        ChainVertex { side: Side::Left, index: f.k() - 1 }
    } else {
        v
    }
}

fn frontier_of(f: &Funnel, node: Node) -> Result<Frontier> {
    match node {
        Node::X => Ok(f.base_frontier()),
        Node::One(v) if f.is_apex(v) => Ok(f.apex_frontier()),
        Node::One(v) => upseg(f, v),
        Node::Pair(a, b) => pair_upseg(f, a, b),
        Node::Y => Ok(f.apex_frontier()),
    }
}

fn above(lo: &Frontier, hi: &Frontier) -> bool {
    hi.left >= lo.left && hi.right >= lo.right && (hi.left > lo.left || hi.right > lo.right || hi.mid != lo.mid)
}

fn build_graph(f: &Funnel, with_pairs: bool) -> Result<Digraph> {
    let ring = f.ring();
    let mut g = Digraph { edges: HashMap::new() };
    let mut frontiers: HashMap<Node, Frontier> = HashMap::new();
    frontiers.insert(Node::X, f.base_frontier());
    let mut queue = VecDeque::from([Node::X]);
    let mut queued: std::collections::HashSet<Node> = [Node::X].into_iter().collect();
    while let Some(t) = queue.pop_front() {
        let s = frontiers[&t].clone();
        let (i, j) = (s.left.edge, s.right.edge);
        let pick = |side: Side, i: usize| -> ChainVertex {
            let c = f.chain(side);
            if i + 1 < c.len() && sees_whole(f, &ring, &c[i + 1], &s) {
                ChainVertex { side, index: i + 1 }
            } else {
                ChainVertex { side, index: i }
            }
        };
        let mut succ = vec![(Node::One(normalise(f, pick(Side::Left, i))), 1), (Node::One(normalise(f, pick(Side::Right, j))), 1)];
        if with_pairs {
            // Topmost vertices strictly below the upper segments at the
            // far ends of s.
            let up_p = frontier_of(f, Node::One(normalise(f, ChainVertex { side: Side::Right, index: j })))?;
            let up_q = frontier_of(f, Node::One(normalise(f, ChainVertex { side: Side::Left, index: i })))?;
            let below = |p: &ChainPos| if p.t.is_zero() { p.edge.checked_sub(1) } else { Some(p.edge) };
            if let (Some(a), Some(b)) = (below(&up_p.left), below(&up_q.right)) {
                if a + 1 < f.k() && b + 1 < f.m() {
                    succ.push((Node::Pair(a, b), 2));
                }
            }
        }
        succ.dedup();
        for (z, w) in succ {
            let fz = match frontiers.get(&z) {
                Some(x) => x.clone(),
                None => {
                    let x = frontier_of(f, z)?;
                    frontiers.insert(z, x.clone());
                    x
                }
            };
            if !above(&s, &fz) {
                return Err(Error::Internal(format!("upper segment of {z:?} is not above that of {t:?}")));
            }
            g.edges.entry(t).or_default().push((z, w));
            if f.completes(&fz) {
                let e = g.edges.entry(z).or_default();
                if !e.contains(&(Node::Y, 0)) {
                    e.push((Node::Y, 0));
                }
            } else if queued.insert(z) {
                queue.push_back(z);
            }
        }
    }
    Ok(g)
}

fn node_guards(f: &Funnel, n: Node) -> Vec<usize> {
    match n {
        Node::One(v) => vec![f.vertex_index(v)],
        Node::Pair(a, b) => vec![f.left_idx[a], f.right_idx[b]],
        _ => vec![],
    }
}

type TieKey = (std::cmp::Reverse<usize>, bool, bool, Side, Vec<usize>);

/// Among equally short continuations prefer, in order: the guard placed
/// highest on its chain, a change of chain side, a single guard over a
/// pair, the left chain, and finally the smaller vertex indices.
fn tie_key(f: &Funnel, cur: Node, z: Node) -> TieKey {
    let side_of = |n: Node| match n {
        Node::One(v) => Some(v.side),
        _ => None,
    };
    let (height, side) = match z {
        Node::One(v) => (v.index, v.side),
        Node::Pair(a, b) => (a.max(b), Side::Left),
        _ => (0, Side::Left),
    };
    let same_side = matches!((side_of(cur), side_of(z)), (Some(a), Some(b)) if a == b);
    let mut label = node_guards(f, z);
    label.sort_unstable();
    (std::cmp::Reverse(height), same_side, matches!(z, Node::Pair(..)), side, label)
}

fn shortest_guards(f: &Funnel, g: &Digraph) -> Result<GuardSet> {
    // Distances to y over the (acyclic) digraph.
    fn dist(n: Node, g: &Digraph, memo: &mut HashMap<Node, Option<u32>>) -> Option<u32> {
        if n == Node::Y {
            return Some(0);
        }
        if let Some(&d) = memo.get(&n) {
            return d;
        }
        let mut best: Option<u32> = None;
        for &(z, w) in g.edges.get(&n).map(|v| v.as_slice()).unwrap_or(&[]) {
            if let Some(d) = dist(z, g, memo) {
                best = Some(best.map_or(d + w, |b: u32| b.min(d + w)));
            }
        }
        memo.insert(n, best);
        best
    }
    let mut memo = HashMap::new();
    let total = dist(Node::X, g, &mut memo).ok_or_else(|| Error::Internal("no guard path reaches the apex".into()))?;
    let mut guards = Vec::new();
    let mut cur = Node::X;
    let mut left = total;
    while cur != Node::Y {
        let mut options: Vec<(TieKey, Node)> = Vec::new();
        for &(z, w) in &g.edges[&cur] {
            if let Some(d) = dist(z, g, &mut memo) {
                if d + w == left {
                    options.push((tie_key(f, cur, z), z));
                }
            }
        }
        options.sort();
        let (_, z) = options.into_iter().next().expect("a shortest path continues");
        let w = g.edges[&cur].iter().find(|e| e.0 == z).unwrap().1;
        guards.extend(node_guards(f, z));
        left -= w;
        cur = z;
    }
    Ok(GuardSet { guards })
}

/// Simple guarding: every step places one guard at the topmost vertex of
/// either chain that still sees the whole upper segment of the previous one.
pub fn guard_funnel_simple(f: &Funnel) -> Result<GuardSet> {
    let g = build_graph(f, false)?;
    shortest_guards(f, &g)
}

/// Minimum guarding: as [`guard_funnel_simple`], with an extra step that
/// places a left/right pair of guards at once.
pub fn guard_funnel_optimal(f: &Funnel) -> Result<GuardSet> {
    let g = build_graph(f, true)?;
    shortest_guards(f, &g)
}

/// `c_i` = exponent of the largest power of two dividing `2i`, for
/// `i = 1..=t`.
pub fn ruler_color(t: usize) -> Vec<u32> {
    (1..=t).map(|i| 1 + (i as u64).trailing_zeros()).collect()
}

/// Colours the simple guard sequence bottom-up with the ruler sequence.
/// Ruler coloring of the simple guard sequence, bottom-up.
pub fn ruler_color_funnel(f: &Funnel) -> Result<GuardColoring> {
    let guards = guard_funnel_simple(f)?;
    let colors = ruler_color(guards.len());
    Ok(GuardColoring { colors: guards.guards.iter().copied().zip(colors).collect() })
}

/// Same guards, but each chain gets its own ruler palette (the apex counts
/// as left). A point sees a contiguous run of every concave chain, so this
/// is always conflict-free.
pub fn chain_ruler_color_funnel(f: &Funnel) -> Result<GuardColoring> {
    let guards = guard_funnel_simple(f)?;
    let (left, right): (Vec<usize>, Vec<usize>) = guards.guards.iter().partition(|&&g| f.locate_vertex(g).map(|v| v.side) == Some(Side::Left));
    let lc = ruler_color(left.len());
    let offset = lc.iter().copied().max().unwrap_or(0);
    let rc = ruler_color(right.len()).into_iter().map(|c| c + offset);
    let mut colors: BTreeMap<usize, u32> = left.into_iter().zip(lc).collect();
    colors.extend(right.into_iter().zip(rc));
    Ok(GuardColoring { colors })
}

/// Conflict-free coloring of the simple guards: the ruler coloring when the
/// exact check accepts it, otherwise the per-chain coloring.
pub fn cf_color_funnel(f: &Funnel) -> Result<GuardColoring> {
    let ruler = ruler_color_funnel(f)?;
    let idx = f.ring_idx();
    let poly = f.polygon()?;
    let local = GuardColoring {
        colors: ruler.colors.iter().map(|(g, &c)| (idx.iter().position(|x| x == g).unwrap(), c)).collect(),
    };
    if crate::oracle::conflict_free_check(&poly, &local, crate::oracle::Mode::Exact)?.conflict_free {
        Ok(ruler)
    } else {
        chain_ruler_color_funnel(f)
    }
}

/// All minimum-weight guard sequences of the simple or optimum digraph
/// (diagnostics and tests; exponential in the worst case).
pub fn all_shortest_guard_paths(f: &Funnel, with_pairs: bool) -> Result<Vec<Vec<usize>>> {
    let g = build_graph(f, with_pairs)?;
    fn walk(n: Node, f: &Funnel, g: &Digraph, budget: i64, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == Node::Y {
            if budget == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if budget < 0 {
            return;
        }
        for &(z, w) in g.edges.get(&n).map(|v| v.as_slice()).unwrap_or(&[]) {
            let k = acc.len();
            acc.extend(node_guards(f, z));
            walk(z, f, g, budget - w as i64, acc, out);
            acc.truncate(k);
        }
    }
    let best = shortest_guards(f, &g)?;
    let weight = best.len() as i64;
    let mut out = Vec::new();
    walk(Node::X, f, &g, weight, &mut Vec::new(), &mut out);
    Ok(out)
}
