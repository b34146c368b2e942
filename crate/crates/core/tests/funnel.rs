use std::collections::BTreeSet;

use polyguard::funnel::{
    cf_color_funnel, chain_ruler_color_funnel, funnel_from_polygon, ruler_color_funnel, guard_funnel_optimal, guard_funnel_simple, ruler_color, upseg, ChainVertex, Funnel, Side,
};
use polyguard::geom::{point_in_polygon, segment_between, segment_in_ring, Location, Point, Polygon};
use polyguard::oracle::{conflict_free_check, coverage_check, min_guard_set_bruteforce, Mode};
use polyguard::random::{random_convex_polygon, random_funnel, rng};
use polyguard::Error;
use proptest::prelude::*;
use rand::Rng;

fn pts(c: &[(f64, f64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::f(x, y)).collect()
}

/// The symmetric 17-vertex funnel; input order l1..l9, r8..r1.
fn guards_figure() -> (Polygon, Funnel) {
    let left = [(-23.0, 0.0), (-18.5, 0.5), (-16.0, 1.0), (-9.4, 2.8), (-7.3, 4.2), (-3.5, 7.0), (-2.0, 8.5), (-0.5, 13.0), (0.0, 17.0)];
    let mut ring = pts(&left);
    ring.extend(left[..8].iter().rev().map(|&(x, y)| Point::f(-x, y)));
    let poly = Polygon::simple(ring).unwrap();
    let f = funnel_from_polygon(&poly, Some((0, 16))).unwrap();
    (poly, f)
}

fn labels(f: &Funnel, g: &[usize]) -> BTreeSet<String> {
    g.iter().map(|&v| f.label(v).unwrap()).collect()
}

fn mirrored(s: &BTreeSet<String>, k: usize) -> BTreeSet<String> {
    s.iter()
        .map(|l| {
            let (c, i) = l.split_at(1);
            if i.parse::<usize>().unwrap() == k {
                l.clone()
            } else {
                format!("{}{}", if c == "l" { "r" } else { "l" }, i)
            }
        })
        .collect()
}

fn set(v: &[&str]) -> BTreeSet<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn figure_simple_guards() {
    let (poly, f) = guards_figure();
    let g = guard_funnel_simple(&f).unwrap();
    let got = labels(&f, &g.guards);
    let want = set(&["l2", "r5", "l7", "l9"]);
    assert!(got == want || mirrored(&got, f.k()) == want, "{got:?}");
    assert!(coverage_check(&poly, &g.guards, Mode::Exact).unwrap().covered);
}

#[test]
fn figure_optimal_guards() {
    let (poly, f) = guards_figure();
    let g = guard_funnel_optimal(&f).unwrap();
    let got = labels(&f, &g.guards);
    let want = set(&["l4", "r4", "l8"]);
    assert!(got == want || mirrored(&got, f.k()) == want, "{got:?}");
    assert!(coverage_check(&poly, &g.guards, Mode::Exact).unwrap().covered);
    assert_eq!(min_guard_set_bruteforce(&poly, 17).unwrap().len(), 3);
}

#[test]
fn figure_ruler_coloring_has_a_conflict() {
    let (poly, f) = guards_figure();
    let simple = guard_funnel_simple(&f).unwrap();
    let c = ruler_color_funnel(&f).unwrap();
    let seq: Vec<u32> = simple.guards.iter().map(|g| c.colors[g]).collect();
    assert_eq!(seq, vec![1, 2, 1, 3]);
    // A point low on the right sees l2 and l7 (both color 1) but neither r5
    // nor the apex.
    let rep = conflict_free_check(&poly, &c, Mode::Exact).unwrap();
    assert!(rep.covered && !rep.conflict_free);
    let w = rep.witness.unwrap();
    let seen: BTreeSet<String> =
        simple.guards.iter().filter(|&&g| segment_between(poly.vertex(g), &w, &poly)).map(|&g| f.label(g).unwrap()).collect();
    assert!(seen == set(&["l2", "l7"]) || seen == set(&["r2", "r7"]), "{seen:?}");
}

#[test]
fn figure_cf_coloring_falls_back_to_chain_palettes() {
    let (poly, f) = guards_figure();
    let c = cf_color_funnel(&f).unwrap();
    assert_eq!(c, chain_ruler_color_funnel(&f).unwrap());
    assert_eq!(c.guards(), guard_funnel_simple(&f).unwrap().sorted());
    assert_eq!(c.color_count(), 3);
    let rep = conflict_free_check(&poly, &c, Mode::Exact).unwrap();
    assert!(rep.conflict_free && rep.covered);
}

#[test]
fn chain_palettes_are_conflict_free() {
    let mut r = rng(99);
    for _ in 0..40 {
        let n = r.gen_range(10..=24);
        let poly = random_funnel(&mut r, n);
        let f = funnel_from_polygon(&poly, Some((0, 1))).unwrap();
        let c = chain_ruler_color_funnel(&f).unwrap();
        assert!(conflict_free_check(&poly, &c, Mode::Exact).unwrap().conflict_free);
    }
}

#[test]
fn eleven_vertex_funnel_chains() {
    let ring = pts(&[
        (0.0, 0.0),
        (0.6, 0.1),
        (1.1, 0.5),
        (1.5, 1.2),
        (1.8, 2.0),
        (1.9, 2.8),
        (2.05, 2.2),
        (2.3, 1.5),
        (2.8, 0.8),
        (3.6, 0.2),
        (4.5, 0.0),
    ]);
    let poly = Polygon::simple(ring).unwrap();
    let f = funnel_from_polygon(&poly, None).unwrap();
    assert_eq!((f.k(), f.m()), (6, 6));
    assert_eq!(f.apex_index(), 5);
    assert_eq!(f.left_idx[0], 0);
    assert_eq!(f.right_idx[0], 10);
}

#[test]
fn triangle_and_pentagon() {
    let tri = Polygon::simple(pts(&[(0.0, 0.0), (4.0, 0.0), (1.0, 3.0)])).unwrap();
    let f = funnel_from_polygon(&tri, None).unwrap();
    assert_eq!((f.k(), f.m()), (2, 2));
    assert_eq!(guard_funnel_simple(&f).unwrap().len(), 1);
    assert_eq!(guard_funnel_optimal(&f).unwrap().len(), 1);
    let c = cf_color_funnel(&f).unwrap();
    assert_eq!(c.colors.values().copied().collect::<Vec<_>>(), vec![1]);

    let pent = random_convex_polygon(&mut rng(5), 5);
    match funnel_from_polygon(&pent, None) {
        Err(Error::NotAFunnel(msg)) => assert!(msg.contains("5 convex")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn tangent_figure_upseg() {
    // l1..l6, apex, r7..r1 as drawn.
    let ring = pts(&[
        (1.93, 4.71),
        (5.0, 5.0),
        (8.72, 6.76),
        (10.61, 8.21),
        (13.01, 10.71),
        (14.37, 12.5),
        (16.25, 16.99),
        (16.83, 14.37),
        (17.33, 13.05),
        (19.22, 10.8),
        (22.1, 8.49),
        (23.5, 7.58),
        (28.0, 5.1),
        (29.0, 4.71),
    ]);
    let poly = Polygon::simple(ring).unwrap();
    let f = funnel_from_polygon(&poly, Some((0, 13))).unwrap();
    assert_eq!((f.k(), f.m()), (7, 8));
    // upseg(l2) runs from l3 to a point p on the edge r5 r6.
    let s = upseg(&f, ChainVertex { side: Side::Left, index: 1 }).unwrap();
    assert_eq!(s.left.edge, 2);
    assert!(num_traits::Zero::is_zero(&s.left.t));
    assert_eq!(s.right.edge, 4);
    // upseg(r3) ends on the edge l6 apex (q in the drawing).
    let s = upseg(&f, ChainVertex { side: Side::Right, index: 2 }).unwrap();
    assert_eq!(s.right.edge, 3);
    assert_eq!(s.left.edge, 5);
    // The last tangent ends at the apex.
    let s = upseg(&f, ChainVertex { side: Side::Left, index: 5 }).unwrap();
    assert_eq!((s.left.edge, s.right.edge), (6, 7));
    assert!(upseg(&f, ChainVertex { side: Side::Left, index: 6 }).is_err());
}

#[test]
fn random_upsegs_stay_inside() {
    let mut r = rng(3);
    for _ in 0..40 {
        let n = r.gen_range(4..=16);
        let poly = random_funnel(&mut r, n);
        let f = funnel_from_polygon(&poly, Some((0, 1))).unwrap();
        let ring = f.ring();
        for side in [Side::Left, Side::Right] {
            for index in 0..f.chain(side).len() - 1 {
                let s = upseg(&f, ChainVertex { side, index }).unwrap();
                let p = f.frontier_points(&s);
                assert!(p[0] == p[1] || segment_in_ring(&p[0], &p[1], &ring));
                assert_ne!(point_in_polygon(&p[0].midpoint(&p[1]), &poly), Location::Exterior);
            }
        }
    }
}

#[test]
fn random_funnels_near_optimal_and_feasible() {
    let mut r = rng(17);
    for _ in 0..30 {
        let n = r.gen_range(5..=16);
        let poly = random_funnel(&mut r, n);
        let f = funnel_from_polygon(&poly, Some((0, 1))).unwrap();
        let s = guard_funnel_simple(&f).unwrap();
        let o = guard_funnel_optimal(&f).unwrap();
        let b = min_guard_set_bruteforce(&poly, 16).unwrap();
        assert_eq!(o.len(), b.len());
        assert!(s.len() == o.len() || s.len() == o.len() + 1);
        for g in [&s, &o] {
            let uniq: BTreeSet<_> = g.guards.iter().collect();
            assert_eq!(uniq.len(), g.len());
            assert!(coverage_check(&poly, &g.guards, Mode::Exact).unwrap().covered);
        }
        let c = cf_color_funnel(&f).unwrap();
        assert!(conflict_free_check(&poly, &c, Mode::Exact).unwrap().conflict_free);
    }
}

#[test]
fn ruler_prefix() {
    assert_eq!(ruler_color(8), vec![1, 2, 1, 3, 1, 2, 1, 4]);
    assert_eq!(ruler_color(1), vec![1]);
    assert_eq!(ruler_color(0), Vec::<u32>::new());
    assert_eq!(*ruler_color(16).last().unwrap(), 5);
}

#[test]
fn ruler_windows_have_unique_maximum() {
    let c = ruler_color(1024);
    for i in 0..c.len() {
        let mut max = 0;
        let mut count = 0;
        for &x in &c[i..] {
            if x > max {
                max = x;
                count = 1;
            } else if x == max {
                count += 1;
            }
            assert_eq!(count, 1);
        }
    }
}

proptest! {
    #[test]
    fn ruler_matches_definition(i in 1usize..100_000) {
        let c = ruler_color(i)[i - 1];
        prop_assert_eq!((2 * i) % (1 << c), 0);
        prop_assert_ne!((2 * i) % (1 << (c + 1)), 0);
    }
}
