//! Proper colourings of polygon visibility graphs: the 4-colouring decision
//! by clique-cutset splitting and forced propagation, and the 3-colouring
//! decision through a triangulation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geom::Polygon;
use crate::triangulate::triangulate;
use crate::visibility::{visibility_graph, VisibilityGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Colorable,
    NotColorable,
    /// The input broke the promise in a way the algorithm can detect (a
    /// reduced piece without a triangle).
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub verdict: Verdict,
    /// Colour of every vertex (1-based) when colourable.
    pub assignment: Option<Vec<u32>>,
    /// Propagation stopped with uncoloured vertices in some piece.
    pub stalled: bool,
}

impl ColoringResult {
    fn not_colorable(stalled: bool) -> Self {
        ColoringResult { verdict: Verdict::NotColorable, assignment: None, stalled }
    }
}

/// Whether `col` is a proper colouring of `g`.
pub fn is_proper(g: &VisibilityGraph, col: &[u32]) -> bool {
    col.len() == g.n() && g.edges().iter().all(|&(a, b)| col[a] != col[b])
}

fn connected_without(g: &VisibilityGraph, removed: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if removed.contains(&s) || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        let mut members = vec![];
        comp[s] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            for y in g.neighbours(x) {
                if !removed.contains(&y) && comp[y] == usize::MAX {
                    comp[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Every edge `uv` whose two endpoints' removal disconnects `g`.
pub fn bottleneck_pairs(g: &VisibilityGraph) -> Result<BTreeSet<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.edges().into_iter().filter(|&(a, b)| connected_without(g, &[a, b]).len() > 1).collect())
}

/// A reduced piece: an induced subgraph and the original vertex of each of
/// its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: VisibilityGraph,
    pub vertices: Vec<usize>,
}

/// Reduced pieces of a graph, from splitting at bottleneck pairs one pair
/// at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSubgraphSet {
    pub components: Vec<Component>,
}

enum Piece {
    Leaf(usize),
    Split { pair: (usize, usize), parts: Vec<Piece> },
}

fn split(g: &VisibilityGraph, vertices: Vec<usize>, out: &mut Vec<Component>) -> Piece {
    let sub = g.induced(&vertices);
    let pair = sub.edges().into_iter().find(|&(a, b)| connected_without(&sub, &[a, b]).len() > 1);
    match pair {
        None => {
            out.push(Component { graph: sub, vertices });
            Piece::Leaf(out.len() - 1)
        }
        Some((a, b)) => {
            let parts = connected_without(&sub, &[a, b])
                .into_iter()
                .map(|c| {
                    let mut vs: Vec<usize> = c.into_iter().chain([a, b]).map(|k| vertices[k]).collect();
                    vs.sort_unstable();
                    split(g, vs, out)
                })
                .collect();
            Piece::Split { pair: (vertices[a], vertices[b]), parts }
        }
    }
}

/// Reduced subgraphs of a connected graph. Every bottleneck pair is copied
/// into each piece it separates.
pub fn reduced_subgraphs(g: &VisibilityGraph) -> Result<ReducedSubgraphSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut components = Vec::new();
    split(g, (0..g.n()).collect(), &mut components);
    Ok(ReducedSubgraphSet { components })
}

/// Order in which eligible vertices are coloured during propagation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Discipline {
    LowestFirst,
    HighestFirst,
}

enum Local {
    Done(Vec<u32>),
    Conflict,
    Stalled,
    NoTriangle,
}

fn propagate(g: &VisibilityGraph, order: Discipline) -> Local {
    let n = g.n();
    let mut col = vec![0u32; n];
    if n <= 2 {
        return Local::Done((1..=n as u32).collect());
    }
    let seed = (0..n).find_map(|a| {
        (a + 1..n).find_map(|b| (b + 1..n).find(|&c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)).map(|c| (a, b, c)))
    });
    let Some((a, b, c)) = seed else { return Local::NoTriangle };
    col[a] = 1;
    col[b] = 2;
    col[c] = 3;
    let mut left = n - 3;
    let seen = |col: &[u32], v: usize| g.neighbours(v).fold(0u8, |m, w| if col[w] > 0 { m | 1 << (col[w] - 1) } else { m });
    while left > 0 {
        let pick = |v: &usize| col[*v] == 0 && seen(&col, *v).count_ones() >= 3;
        let v = match order {
            Discipline::LowestFirst => (0..n).find(pick),
            Discipline::HighestFirst => (0..n).rev().find(pick),
        };
        let Some(v) = v else { return Local::Stalled };
        let mask = seen(&col, v);
        if mask == 0b1111 {
            return Local::Conflict;
        }
        col[v] = 1 + (!mask).trailing_zeros();
        left -= 1;
    }
    Local::Done(col)
}

fn relabel(col: &mut BTreeMap<usize, u32>, from: (u32, u32), to: (u32, u32)) {
    let mut map = [0u32; 5];
    map[from.0 as usize] = to.0;
    map[from.1 as usize] = to.1;
    let rest_from = (1..=4).filter(|c| *c != from.0 && *c != from.1);
    let mut rest_to = (1..=4).filter(|c| *c != to.0 && *c != to.1);
    for c in rest_from {
        map[c as usize] = rest_to.next().unwrap();
    }
    for v in col.values_mut() {
        *v = map[*v as usize];
    }
}

enum Outcome {
    Colored(BTreeMap<usize, u32>),
    Failed(Verdict, bool),
}

fn solve(piece: &Piece, comps: &[Component], order: Discipline) -> Outcome {
    match piece {
        Piece::Leaf(i) => {
            let c = &comps[*i];
            match propagate(&c.graph, order) {
                Local::Done(col) if is_proper(&c.graph, &col) => Outcome::Colored(c.vertices.iter().copied().zip(col).collect()),
                Local::Done(_) | Local::Conflict => Outcome::Failed(Verdict::NotColorable, false),
                Local::Stalled => Outcome::Failed(Verdict::NotColorable, true),
                Local::NoTriangle => Outcome::Failed(Verdict::Indeterminate, false),
            }
        }
        Piece::Split { pair: (x, y), parts } => {
            let mut glued: Option<BTreeMap<usize, u32>> = None;
            for p in parts {
                let mut col = match solve(p, comps, order) {
                    Outcome::Colored(c) => c,
                    failed => return failed,
                };
                if let Some(g) = &mut glued {
                    let from = (col[x], col[y]);
                    relabel(&mut col, from, (g[x], g[y]));
                    g.extend(col);
                } else {
                    glued = Some(col);
                }
            }
            Outcome::Colored(glued.expect("a split has at least two parts"))
        }
    }
}

/// Decides 4-colourability of a connected graph under the promise that it
/// is a simple polygon's visibility graph, colouring lowest index first.
pub fn four_color(g: &VisibilityGraph) -> Result<ColoringResult> {
    four_color_with(g, Discipline::LowestFirst)
}

pub fn four_color_with(g: &VisibilityGraph, order: Discipline) -> Result<ColoringResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut comps = Vec::new();
    let root = split(g, (0..g.n()).collect(), &mut comps);
    Ok(match solve(&root, &comps, order) {
        Outcome::Colored(col) => {
            let assignment: Vec<u32> = (0..g.n()).map(|v| col[&v]).collect();
            if !is_proper(g, &assignment) {
                return Err(Error::Internal("glued 4-colouring is not proper".into()));
            }
            ColoringResult { verdict: Verdict::Colorable, assignment: Some(assignment), stalled: false }
        }
        Outcome::Failed(Verdict::Indeterminate, _) => ColoringResult { verdict: Verdict::Indeterminate, assignment: None, stalled: false },
        Outcome::Failed(_, stalled) => ColoringResult::not_colorable(stalled),
    })
}

/// Decides 3-colourability of a simple polygon's visibility graph: the
/// triangulation forces a unique 3-colouring, which is then checked
/// against every visibility edge.
pub fn three_color(poly: &Polygon) -> Result<ColoringResult> {
    poly.require_simple()?;
    let ring = poly.outer_ring();
    let tris = triangulate(&poly.outer_points());
    let n = poly.n();
    let mut col = vec![0u32; n];
    let Some(first) = tris.first() else { return Err(Error::Internal("empty triangulation".into())) };
    for (k, &p) in first.iter().enumerate() {
        col[ring[p]] = k as u32 + 1;
    }
    let mut done = vec![false; tris.len()];
    done[0] = true;
    let mut progress = true;
    while progress {
        progress = false;
        for (t, tri) in tris.iter().enumerate() {
            if done[t] {
                continue;
            }
            let vs = tri.map(|p| ring[p]);
            let known: Vec<usize> = vs.iter().copied().filter(|&v| col[v] > 0).collect();
            if known.len() >= 2 {
                let used: u32 = known.iter().map(|&v| col[v]).sum();
                for &v in &vs {
                    if col[v] == 0 {
                        col[v] = 6 - used;
                    }
                }
                done[t] = true;
                progress = true;
            }
        }
    }
    if col.contains(&0) {
        return Err(Error::Internal("triangulation propagation did not reach every vertex".into()));
    }
    let g = visibility_graph(poly);
    Ok(if is_proper(&g, &col) {
        ColoringResult { verdict: Verdict::Colorable, assignment: Some(col), stalled: false }
    } else {
        ColoringResult::not_colorable(false)
    })
}
