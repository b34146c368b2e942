use num_traits::{Signed, Zero};
use polyguard::decompose::{cf_color_polygon, cf_color_polygon_with, decompose, Decomposition, NodeKind, NodeSide};
use polyguard::geom::{on_segment, orient_sign, Point, Polygon, Q};
use polyguard::oracle::{conflict_free_check, Mode};
use polyguard::random::{random_simple_polygon, rng};
use polyguard::weakvis::is_weakly_visible;
use rand::Rng;

const FIGURE: [(f64, f64); 27] = [
    (3.6, 4.0),
    (5.2, 4.2),
    (3.5, 4.7),
    (6.6, 4.4),
    (4.0, 5.0),
    (6.4, 5.0),
    (3.5, 6.0),
    (5.8, 5.8),
    (4.0, 7.0),
    (5.2, 6.6),
    (4.4, 7.6),
    (8.0, 4.0),
    (10.6, 6.8),
    (11.0, 5.0),
    (12.5, 7.5),
    (16.0, 7.0),
    (15.0, 8.0),
    (11.0, 9.0),
    (16.2, 8.0),
    (16.5, 4.0),
    (15.5, 6.5),
    (10.0, 4.0),
    (11.0, 3.8),
    (12.0, 4.0),
    (11.5, 3.5),
    (12.0, 3.0),
    (10.0, 3.6),
];

/// The figure polygon, counterclockwise, and its base edge e.
fn figure() -> (Polygon, (usize, usize)) {
    let pts: Vec<Point> = FIGURE.iter().map(|&(x, y)| Point::f(x, y)).collect();
    let poly = Polygon::simple(pts).unwrap();
    (poly, (18, 19))
}

fn check_structure(poly: &Polygon, d: &Decomposition) {
    let total: Q = d.nodes.iter().map(|n| n.region.area2()).fold(Q::zero(), |a, b| a + b);
    assert_eq!(total, poly.area2().abs(), "pieces partition the polygon");
    for (k, node) in d.nodes.iter().enumerate() {
        let r = &node.region;
        assert!(r.area2() > Q::zero(), "node {k} is counterclockwise with positive area");
        match node.kind {
            NodeKind::Ordinary => {
                assert!(r.origin[0].is_some() && r.origin[1].is_some(), "ordinary base joins vertices");
                assert!(is_weakly_visible(r), "node {k} is weakly visible from its base");
            }
            NodeKind::Forward => {
                let m = r.len();
                assert!((2..m).all(|i| r.origin[i].is_some()), "forward chain consists of vertices");
                for i in 2..m - 1 {
                    assert!(orient_sign(&r.pts[i - 1], &r.pts[i], &r.pts[i + 1]) <= 0 || i == 2, "forward chain is concave");
                }
                assert!(node.children.iter().all(|&c| d.nodes[c].side == node.side));
            }
        }
        if let Some(p) = node.parent {
            assert!(d.nodes[p].children.contains(&k));
            assert_ne!(node.side, NodeSide::Root);
            if d.nodes[p].kind == NodeKind::Forward {
                assert_eq!(node.kind, NodeKind::Ordinary);
            }
        } else {
            assert_eq!(k, 0);
        }
    }
}

fn labels(d: &Decomposition) -> Vec<String> {
    d.nodes
        .iter()
        .map(|n| {
            let pts: Vec<String> = n.region.origin.iter().map(|o| o.map_or("*".to_string(), |i| (i + 1).to_string())).collect();
            format!("{:?} {:?} {:?} [{}]", n.kind, n.side, n.parent, pts.join(" "))
        })
        .collect()
}

fn check_coloring(poly: &Polygon, e: (usize, usize), mode: Mode) {
    let res = cf_color_polygon_with(poly, e).unwrap();
    let d = &res.decomposition;
    check_structure(poly, d);
    // A node never shares its super-set with its nearest ordinary ancestor.
    for k in 1..d.len() {
        let g = d.ordinary_ancestor(k).unwrap();
        assert_ne!(res.sets[k], res.sets[g], "node {k}");
    }
    let used: std::collections::BTreeSet<u32> = res.coloring.colors.values().copied().collect();
    assert!(used.iter().all(|&c| c >= 1 && c <= res.bound()), "{used:?} within {}", res.bound());
    assert!(res.coloring.colors.keys().all(|&v| v < poly.n()));
    let rep = conflict_free_check(poly, &res.coloring, mode).unwrap();
    assert!(rep.conflict_free, "witness {:?}", rep.witness);
}

#[test]
fn figure_decomposition() {
    let (poly, e) = figure();
    let d = decompose(&poly, e).unwrap();
    let root = &d.nodes[0];
    assert_eq!(root.region.origin[..2], [Some(19), Some(18)]);
    // W, its green forward child on the left, and the two pink children on
    // the right (a forward piece and the triangle 12, 14, 13).
    let sides: Vec<(NodeKind, NodeSide)> = root.children.iter().map(|&c| (d.nodes[c].kind, d.nodes[c].side)).collect();
    assert_eq!(
        sides,
        [(NodeKind::Forward, NodeSide::Left), (NodeKind::Forward, NodeSide::Right), (NodeKind::Ordinary, NodeSide::Right)]
    );
    let expect = [
        "Ordinary Root None [20 19 18 17 16 15 14 12 * * 22 21]",
        "Forward Left Some(0) [22 * 27 23]",
        "Forward Right Some(0) [* 12 11 10 8 6 4 2 1]",
        "Ordinary Right Some(0) [12 14 13]",
        "Ordinary Left Some(1) [23 27 26 25 24]",
        "Ordinary Right Some(2) [2 4 3]",
        "Ordinary Right Some(2) [4 6 5]",
        "Ordinary Right Some(2) [6 8 7]",
        "Ordinary Right Some(2) [8 10 9]",
    ];
    assert_eq!(labels(&d), expect);
    // The window endpoints C and D both lie on the edge 27 -> 1.
    for k in [8, 9] {
        assert!(on_segment(&root.region.pts[k], poly.vertex(26), poly.vertex(0)));
    }
    check_structure(&poly, &d);
}

#[test]
fn figure_coloring() {
    let (poly, e) = figure();
    check_coloring(&poly, e, Mode::Exact);
}

#[test]
fn figure_from_every_edge() {
    let (poly, _) = figure();
    for i in 0..poly.n() {
        let e = (i, (i + 1) % poly.n());
        let d = decompose(&poly, e).unwrap();
        check_structure(&poly, &d);
        let res = cf_color_polygon_with(&poly, e).unwrap();
        assert!(res.coloring.colors.values().all(|&c| c <= res.bound()));
    }
}

#[test]
fn convex_polygon_is_one_piece() {
    let poly = polyguard::random::random_convex_polygon(&mut rng(5), 9);
    let res = cf_color_polygon_with(&poly, (0, 1)).unwrap();
    assert_eq!(res.decomposition.len(), 1);
    assert_eq!(cf_color_polygon(&poly).unwrap(), res.coloring);
    let rep = conflict_free_check(&poly, &res.coloring, Mode::Exact).unwrap();
    assert!(rep.conflict_free);
}

#[test]
fn reflex_base_endpoints_are_split_off() {
    // Both endpoints of the base 0 -> 1 are reflex.
    let pts = [(0, 0), (4, 0), (6, -3), (8, 2), (2, 6), (-3, 3), (-2, -3)];
    let poly = Polygon::simple(pts.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap();
    let d = decompose(&poly, (0, 1)).unwrap();
    check_structure(&poly, &d);
    let fans: Vec<_> = d.nodes[0].children.iter().map(|&c| (d.nodes[c].kind, d.nodes[c].side)).collect();
    assert_eq!(fans, [(NodeKind::Forward, NodeSide::Left), (NodeKind::Forward, NodeSide::Right)]);
    check_coloring(&poly, (0, 1), Mode::Exact);
}

#[test]
fn random_polygons_exact() {
    let mut r = rng(31);
    for _ in 0..40 {
        let n = r.gen_range(4..=12);
        let poly = random_simple_polygon(&mut r, n);
        check_coloring(&poly, (0, 1), Mode::Exact);
    }
}

#[test]
fn random_polygons_sampled() {
    let mut r = rng(32);
    for n in [20, 30, 45, 60] {
        let poly = random_simple_polygon(&mut r, n);
        check_coloring(&poly, (0, 1), Mode::sampled());
    }
}
