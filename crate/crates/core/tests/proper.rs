use std::collections::BTreeSet;

use polyguard::geom::{proper_cross, Point, Polygon};
use polyguard::oracle::chromatic_number_bruteforce;
use polyguard::proper::{
    bottleneck_pairs, four_color, four_color_with, is_proper, reduced_subgraphs, three_color, Discipline, Verdict,
};
use polyguard::random::{random_convex_polygon, random_simple_polygon, rng};
use polyguard::visibility::{visibility_graph, Source, VisibilityGraph};
use polyguard::Error;
use proptest::prelude::*;
use rand::Rng;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;

/// The drawn graph: a hexagon A..F plus seven chords.
fn nonplanar() -> VisibilityGraph {
    let edges = [(A, B), (B, C), (C, D), (D, E), (E, F), (F, A), (A, C), (A, D), (B, E), (B, F), (C, E), (C, F), (D, F)];
    VisibilityGraph::from_edges(6, &edges, Source::Abstract)
}

fn classes(col: &[u32]) -> BTreeSet<BTreeSet<usize>> {
    let mut out = std::collections::BTreeMap::<u32, BTreeSet<usize>>::new();
    for (v, &c) in col.iter().enumerate() {
        out.entry(c).or_default().insert(v);
    }
    out.into_values().collect()
}

fn complete(n: usize) -> VisibilityGraph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    VisibilityGraph::from_edges(n, &edges, Source::Abstract)
}

fn cycle(n: usize) -> VisibilityGraph {
    let edges: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
    VisibilityGraph::from_edges(n, &edges, Source::Abstract)
}

#[test]
fn nonplanar_graph_classes() {
    let g = nonplanar();
    assert_eq!(g.edge_count(), 13);
    assert!(bottleneck_pairs(&g).unwrap().is_empty());
    let r = four_color(&g).unwrap();
    assert_eq!(r.verdict, Verdict::Colorable);
    let col = r.assignment.unwrap();
    assert!(is_proper(&g, &col));
    let expect: BTreeSet<BTreeSet<usize>> =
        [vec![A, E], vec![B, D], vec![C], vec![F]].into_iter().map(|c| c.into_iter().collect()).collect();
    assert_eq!(classes(&col), expect);
    assert_eq!(chromatic_number_bruteforce(&g, 4).unwrap(), Some(4));
}

#[test]
fn cliques_and_cycles() {
    assert_eq!(four_color(&complete(6)).unwrap().verdict, Verdict::NotColorable);
    assert_eq!(four_color(&complete(4)).unwrap().verdict, Verdict::Colorable);
    for n in 4..9 {
        assert!(bottleneck_pairs(&cycle(n)).unwrap().is_empty());
    }
    // A cycle has no triangle to start from.
    assert_eq!(four_color(&cycle(5)).unwrap().verdict, Verdict::Indeterminate);
    let disconnected = VisibilityGraph::from_edges(4, &[(0, 1), (2, 3)], Source::Abstract);
    assert_eq!(bottleneck_pairs(&disconnected), Err(Error::Disconnected));
    assert_eq!(four_color(&disconnected), Err(Error::Disconnected));
}

#[test]
fn two_triangles_share_a_bottleneck() {
    let g = VisibilityGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)], Source::Abstract);
    assert_eq!(bottleneck_pairs(&g).unwrap(), BTreeSet::from([(0, 1)]));
    let red = reduced_subgraphs(&g).unwrap();
    let pieces: Vec<Vec<usize>> = red.components.iter().map(|c| c.vertices.clone()).collect();
    assert_eq!(pieces, [vec![0, 1, 2], vec![0, 1, 3]]);
    let r = four_color(&g).unwrap();
    assert_eq!(r.verdict, Verdict::Colorable);
    assert!(is_proper(&g, r.assignment.as_ref().unwrap()));
}

/// Chords (internal visibility edges) crossed by no other chord.
fn uncrossed_chords(poly: &Polygon, g: &VisibilityGraph) -> BTreeSet<(usize, usize)> {
    let n = poly.n();
    let boundary = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
    let chords: Vec<(usize, usize)> = g.edges().into_iter().filter(|&(a, b)| !boundary(a, b)).collect();
    let p = |i: usize| poly.vertex(i);
    chords
        .iter()
        .copied()
        .filter(|&(a, b)| !chords.iter().any(|&(c, d)| proper_cross(p(a), p(b), p(c), p(d))))
        .collect()
}

#[test]
fn bottlenecks_are_uncrossed_chords() {
    let mut r = rng(41);
    for _ in 0..60 {
        let n = r.gen_range(4..=12);
        let poly = random_simple_polygon(&mut r, n);
        let g = visibility_graph(&poly);
        assert_eq!(bottleneck_pairs(&g).unwrap(), uncrossed_chords(&poly, &g));
        let red = reduced_subgraphs(&g).unwrap();
        let covered: BTreeSet<usize> = red.components.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        assert_eq!(covered.len(), n);
        for c in &red.components {
            assert!(bottleneck_pairs(&c.graph).unwrap().is_empty(), "pieces are reduced");
        }
    }
}

fn same_up_to_permutation(a: &[u32], b: &[u32]) -> bool {
    classes(a) == classes(b)
}

#[test]
fn four_color_matches_backtracking() {
    let mut r = rng(42);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..100 {
        let n = r.gen_range(3..=12);
        let poly = random_simple_polygon(&mut r, n);
        let g = visibility_graph(&poly);
        let lo = four_color_with(&g, Discipline::LowestFirst).unwrap();
        let hi = four_color_with(&g, Discipline::HighestFirst).unwrap();
        let oracle = chromatic_number_bruteforce(&g, 4).unwrap().is_some();
        assert_eq!(lo.verdict == Verdict::Colorable, oracle);
        assert_eq!(lo.verdict, hi.verdict);
        assert_ne!(lo.verdict, Verdict::Indeterminate);
        if oracle {
            yes += 1;
            let (a, b) = (lo.assignment.unwrap(), hi.assignment.unwrap());
            assert!(is_proper(&g, &a) && is_proper(&g, &b));
            assert!(same_up_to_permutation(&a, &b), "propagation order changed the colouring");
        } else {
            no += 1;
        }
    }
    assert!(yes > 10 && no > 10, "both verdicts occur: {yes} / {no}");
}

#[test]
fn three_color_small_cases() {
    let quad = Polygon::simple(vec![Point::int(0, 0), Point::int(2, 0), Point::int(2, 2), Point::int(0, 2)]).unwrap();
    assert_eq!(three_color(&quad).unwrap().verdict, Verdict::NotColorable);
    let tri = Polygon::simple(vec![Point::int(0, 0), Point::int(2, 0), Point::int(1, 3)]).unwrap();
    let r = three_color(&tri).unwrap();
    assert_eq!(r.verdict, Verdict::Colorable);
    assert_eq!(classes(&r.assignment.unwrap()).len(), 3);
    let hex = random_convex_polygon(&mut rng(1), 6);
    assert_eq!(four_color(&visibility_graph(&hex)).unwrap().verdict, Verdict::NotColorable);
}

#[test]
fn three_color_matches_backtracking() {
    let mut r = rng(43);
    let mut yes = 0;
    for _ in 0..100 {
        let n = r.gen_range(3..=12);
        let poly = random_simple_polygon(&mut r, n);
        let g = visibility_graph(&poly);
        let res = three_color(&poly).unwrap();
        let oracle = chromatic_number_bruteforce(&g, 3).unwrap().is_some();
        assert_eq!(res.verdict == Verdict::Colorable, oracle);
        if let Some(col) = res.assignment {
            yes += 1;
            assert!(is_proper(&g, &col));
        }
    }
    assert!(yes > 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn colorable_results_are_proper(seed in any::<u64>(), n in 4usize..10) {
        let poly = random_simple_polygon(&mut rng(seed), n);
        let g = visibility_graph(&poly);
        let r = four_color(&g).unwrap();
        if let Some(col) = &r.assignment {
            prop_assert!(is_proper(&g, col));
            prop_assert!(col.iter().all(|&c| (1..=4).contains(&c)));
        }
        prop_assert_eq!(r.stalled, false);
    }
}
