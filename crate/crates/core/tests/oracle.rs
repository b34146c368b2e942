use std::collections::BTreeMap;

use polyguard::fixtures;
use polyguard::funnel::{cf_color_funnel, funnel_from_polygon, GuardColoring};
use polyguard::geom::{segment_between, Point, Polygon};
use polyguard::oracle::{
    cf_chromatic_number_bruteforce, chromatic_number_bruteforce, conflict_free_check, coverage_check, min_guard_set_bruteforce,
    v2v_assignment, v2v_cf_bruteforce, Method, Mode, CF_LIMIT, MIN_GUARD_LIMIT, V2V_LIMIT,
};
use polyguard::random::{random_convex_polygon, random_funnel, random_simple_polygon, rng};
use polyguard::visibility::{visibility_graph, Source, VisibilityGraph};
use polyguard::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn coloring(pairs: &[(usize, u32)]) -> GuardColoring {
    GuardColoring { colors: pairs.iter().copied().collect::<BTreeMap<_, _>>() }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> VisibilityGraph {
    VisibilityGraph::from_edges(n, edges, Source::Abstract)
}

// Input indices of the guarding funnel: l1..l9 are 0..8, r8..r1 are 9..16.
const L4: usize = 3;
const L8: usize = 7;
const R4: usize = 13;

#[test]
fn convex_polygons_need_one_guard() {
    let poly = random_convex_polygon(&mut rng(3), 8);
    for g in 0..8 {
        let rep = coverage_check(&poly, &[g], Mode::Exact).unwrap();
        assert!(rep.covered && rep.witness.is_none());
        assert!(matches!(rep.method, Method::ExactArrangement { .. }));
        assert!(coverage_check(&poly, &[g], Mode::sampled()).unwrap().covered);
    }
    assert_eq!(min_guard_set_bruteforce(&poly, MIN_GUARD_LIMIT).unwrap(), [0]);
    assert_eq!(cf_chromatic_number_bruteforce(&poly, 4, CF_LIMIT).unwrap(), Some(1));
    let tri = Polygon::simple(vec![Point::int(0, 0), Point::int(4, 0), Point::int(1, 3)]).unwrap();
    assert_eq!(cf_chromatic_number_bruteforce(&tri, 4, CF_LIMIT).unwrap(), Some(1));
}

#[test]
fn funnel_guards_and_a_witness() {
    let poly = fixtures::guarding_funnel();
    assert!(coverage_check(&poly, &[L4, R4, L8], Mode::Exact).unwrap().covered);
    let rep = coverage_check(&poly, &[L4, R4], Mode::Exact).unwrap();
    assert!(!rep.covered);
    let w = rep.witness.unwrap();
    assert!(!segment_between(poly.vertex(L4), &w, &poly) && !segment_between(poly.vertex(R4), &w, &poly));
    assert!(!coverage_check(&poly, &[L4, R4], Mode::sampled()).unwrap().covered);
    assert_eq!(min_guard_set_bruteforce(&poly, 17).unwrap().len(), 3);
    assert_eq!(min_guard_set_bruteforce(&poly, MIN_GUARD_LIMIT), Err(Error::LimitExceeded { n: 17, limit: 14 }));
}

#[test]
fn comb_needs_a_guard_per_prong() {
    // Flat valleys between the prongs keep the tips' sight cones disjoint.
    let comb = [(0.0, 0.0), (10.0, 0.0), (9.5, 10.0), (8.0, 1.0), (6.0, 1.0), (5.0, 10.0), (4.0, 1.0), (2.0, 1.0), (0.5, 10.0)];
    let poly = Polygon::simple(comb.iter().map(|&(x, y)| Point::f(x, y)).collect()).unwrap();
    let g = min_guard_set_bruteforce(&poly, MIN_GUARD_LIMIT).unwrap();
    assert_eq!(g.len(), 3);
    assert!(coverage_check(&poly, &g, Mode::Exact).unwrap().covered);
}

#[test]
fn small_funnels_stay_within_four_of_the_optimum() {
    let mut r = rng(61);
    for _ in 0..8 {
        let n = r.gen_range(5..=9);
        let poly = random_funnel(&mut r, n);
        let f = funnel_from_polygon(&poly, None).unwrap();
        let c = cf_color_funnel(&f).unwrap();
        let used = c.colors.values().max().copied().unwrap();
        let opt = cf_chromatic_number_bruteforce(&poly, 4, CF_LIMIT).unwrap().expect("at most 4 colours");
        assert!(opt <= used && used <= opt + 4, "opt {opt}, used {used}");
    }
}

#[test]
fn chromatic_numbers() {
    let k5: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    assert_eq!(chromatic_number_bruteforce(&graph(5, &k5), 4).unwrap(), None);
    assert_eq!(chromatic_number_bruteforce(&graph(5, &k5), 5).unwrap(), Some(5));
    let c5: Vec<_> = (0..5).map(|a| (a, (a + 1) % 5)).collect();
    assert_eq!(chromatic_number_bruteforce(&graph(5, &c5), 4).unwrap(), Some(3));
    assert_eq!(chromatic_number_bruteforce(&fixtures::nonplanar_graph(), 4).unwrap(), Some(4));
}

#[test]
fn vertex_to_vertex_lower_bounds() {
    assert_eq!(v2v_cf_bruteforce(&graph(2, &[(0, 1)]), 3, V2V_LIMIT).unwrap(), Some(1));
    for p in fixtures::v2v_two_color_polygons() {
        let g = visibility_graph(&p);
        assert_eq!(v2v_cf_bruteforce(&g, 3, V2V_LIMIT).unwrap(), Some(2));
        // No vertex sees every vertex.
        assert!((0..g.n()).all(|v| g.degree(v) < g.n() - 1));
    }
}

#[test]
fn bowl_is_guarded_from_its_opening() {
    let poly = fixtures::bowl();
    let g = visibility_graph(&poly);
    assert_eq!(g.n(), 20);
    let (p1, p2) = (fixtures::BOWL_P1, fixtures::BOWL_P2);
    assert_eq!((g.degree(p1), g.degree(p2)), (19, 19));
    assert_eq!(v2v_cf_bruteforce(&g, 2, V2V_LIMIT).unwrap(), Some(1));
    // Neither one nor two colours suffice once p1 and p2 are left out.
    assert_eq!(v2v_assignment(&g, 1, &[p1, p2]), None);
    assert_eq!(v2v_assignment(&g, 2, &[p1, p2]), None);
    // Every optimal assignment uses p1 or p2; each alone works.
    for v in [p1, p2] {
        let others: Vec<usize> = (0..20).filter(|&w| w != v).collect();
        let a = v2v_assignment(&g, 1, &others).expect("a single guard");
        assert_eq!(a.iter().filter(|&&c| c > 0).count(), 1);
    }
    assert_eq!(v2v_cf_bruteforce(&g, 2, 16), Err(Error::LimitExceeded { n: 20, limit: 16 }));
}

#[test]
fn exact_and_sampled_verdicts_agree() {
    let mut r = rng(62);
    for _ in 0..30 {
        let n = r.gen_range(5..=12);
        let poly = random_simple_polygon(&mut r, n);
        let mut guards: Vec<usize> = (0..n).collect();
        guards.shuffle(&mut r);
        guards.truncate(r.gen_range(1..=3));
        let exact = coverage_check(&poly, &guards, Mode::Exact).unwrap();
        let sampled = coverage_check(&poly, &guards, Mode::Sampled { samples: 4000, seed: 7 }).unwrap();
        if exact.covered {
            assert!(sampled.covered);
        }
        if let Some(w) = &sampled.witness {
            assert!(!exact.covered);
            assert!(guards.iter().all(|&g| !segment_between(poly.vertex(g), w, &poly)));
        }
        if let Some(w) = &exact.witness {
            assert!(guards.iter().all(|&g| !segment_between(poly.vertex(g), w, &poly)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn a_fresh_colour_never_breaks_a_guarding(seed in any::<u64>(), n in 4usize..10, extra in 0usize..10) {
        let mut r = rng(seed);
        let poly = random_simple_polygon(&mut r, n);
        let mut base: Vec<(usize, u32)> = Vec::new();
        for v in 0..n {
            if r.gen_bool(0.5) {
                base.push((v, r.gen_range(1..=3)));
            }
        }
        let before = conflict_free_check(&poly, &coloring(&base), Mode::Exact).unwrap();
        let v = extra % n;
        let mut more: Vec<(usize, u32)> = base.iter().copied().filter(|&(w, _)| w != v).collect();
        let replaced = more.len() < base.len();
        more.push((v, 99));
        let after = conflict_free_check(&poly, &coloring(&more), Mode::Exact).unwrap();
        if !replaced {
            prop_assert!(!before.covered || after.covered);
            prop_assert!(!before.conflict_free || after.conflict_free);
        }
    }
}
