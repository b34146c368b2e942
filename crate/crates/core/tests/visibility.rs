use polyguard::geom::{locate_in_ring, point_in_polygon, proper_cross, segment_between, Location, Point, Polygon, Q};
use polyguard::random::{random_convex_polygon, random_simple_polygon, rng};
use polyguard::visibility::{
    vertex_visible, visibility_graph, visibility_polygon_of_edge, visibility_polygon_of_point, visible_from_segment_sampled,
    Region,
};
use rand::Rng;

fn pts(c: &[(i64, i64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::int(x, y)).collect()
}

/// Independent check: no proper crossing and a dense set of sample points
/// along the segment all lie in the closed polygon.
fn naive_visible(poly: &Polygon, a: &Point, b: &Point) -> bool {
    for (i, j) in poly.edges() {
        if proper_cross(a, b, poly.vertex(i), poly.vertex(j)) {
            return false;
        }
    }
    (0..=200).all(|k| point_in_polygon(&a.lerp(b, &Q::new(k.into(), 200.into())), poly) != Location::Exterior)
}

fn sample_point(r: &mut impl Rng, poly: &Polygon) -> Point {
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for p in poly.vertices() {
        let (x, y) = p.to_f64();
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    loop {
        let x = Q::new(((lo.0 + r.gen::<f64>() * (hi.0 - lo.0)) * 4096.0).round().to_string().parse().unwrap(), 4096.into());
        let y = Q::new(((lo.1 + r.gen::<f64>() * (hi.1 - lo.1)) * 4096.0).round().to_string().parse().unwrap(), 4096.into());
        let p = Point::new(x, y);
        if point_in_polygon(&p, poly) == Location::Interior {
            return p;
        }
    }
}

#[test]
fn hole_blocks_sight() {
    // Square room with a square pillar in the middle.
    let outer = pts(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
    let hole = pts(&[(4, 4), (4, 6), (6, 6), (6, 4)]);
    let poly = Polygon::new(outer, vec![hole]).unwrap();
    assert!(!vertex_visible(&poly, 0, 2).unwrap());
    assert!(vertex_visible(&poly, 0, 1).unwrap());
    assert!(vertex_visible(&poly, 0, 4).unwrap());
    assert!(!vertex_visible(&poly, 0, 6).unwrap());
    assert!(vertex_visible(&poly, 0, 0).is_err());
    assert!(vertex_visible(&poly, 0, 99).is_err());
}

#[test]
fn convex_graph_is_complete() {
    let mut r = rng(7);
    for n in 3..10 {
        let poly = random_convex_polygon(&mut r, n);
        let g = visibility_graph(&poly);
        assert_eq!(g.edge_count(), n * (n - 1) / 2);
    }
}

#[test]
fn graph_matches_naive_check() {
    let mut r = rng(11);
    for _ in 0..40 {
        let n = r.gen_range(4..=10);
        let poly = random_simple_polygon(&mut r, n);
        let g = visibility_graph(&poly);
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(g.has_edge(a, b), naive_visible(&poly, poly.vertex(a), poly.vertex(b)), "{a} {b}");
                assert_eq!(g.has_edge(a, b), g.has_edge(b, a));
            }
        }
        for (a, b) in poly.edges() {
            assert!(g.has_edge(a, b));
        }
    }
}

#[test]
fn grazing_a_vertex_does_not_block() {
    // Notch with its tip exactly on the sight line between 0 and 2.
    let poly = Polygon::simple(pts(&[(0, 0), (4, 0), (4, 4), (2, 2), (0, 4)])).unwrap();
    assert!(vertex_visible(&poly, 0, 2).unwrap());
    // 1 -> 4 runs along the notch edge (2,2)-(0,4).
    assert!(vertex_visible(&poly, 1, 4).unwrap());
}

#[test]
fn point_visibility_of_convex_is_whole() {
    let poly = Polygon::simple(pts(&[(0, 0), (6, 0), (7, 3), (2, 5)])).unwrap();
    let v = visibility_polygon_of_point(&poly, &Point::int(3, 2)).unwrap();
    assert_eq!(v.area2(), poly.area2());
    assert!(visibility_polygon_of_point(&poly, &Point::int(30, 2)).is_err());
}

#[test]
fn point_visibility_matches_sampling() {
    let mut r = rng(23);
    for _ in 0..25 {
        let n = r.gen_range(5..=14);
        let poly = random_simple_polygon(&mut r, n);
        let p = sample_point(&mut r, &poly);
        let vis = visibility_polygon_of_point(&poly, &p).unwrap();
        assert_ne!(point_in_polygon(&p, &vis), Location::Exterior);
        for _ in 0..200 {
            let x = sample_point(&mut r, &poly);
            let inside = point_in_polygon(&x, &vis);
            if inside == Location::Boundary {
                continue;
            }
            assert_eq!(inside == Location::Interior, segment_between(&p, &x, &poly));
        }
    }
}

#[test]
fn vertex_visibility_polygon_matches_sampling() {
    let mut r = rng(29);
    for _ in 0..25 {
        let n = r.gen_range(5..=12);
        let poly = random_simple_polygon(&mut r, n);
        let p = poly.vertex(r.gen_range(0..n)).clone();
        let vis = visibility_polygon_of_point(&poly, &p).unwrap();
        for _ in 0..200 {
            let x = sample_point(&mut r, &poly);
            let inside = point_in_polygon(&x, &vis);
            if inside == Location::Boundary {
                continue;
            }
            assert_eq!(inside == Location::Interior, segment_between(&p, &x, &poly));
        }
    }
}

#[test]
fn edge_visibility_matches_sampling() {
    let mut r = rng(31);
    for _ in 0..25 {
        let n = r.gen_range(5..=14);
        let poly = random_simple_polygon(&mut r, n);
        let ring = poly.outer_points();
        let k = r.gen_range(0..n);
        let (a, b) = (ring[k].clone(), ring[(k + 1) % n].clone());
        let vis = visibility_polygon_of_edge(&poly, &a, &b).unwrap();
        assert!(vis.area2() <= poly.area2());
        for _ in 0..150 {
            let x = sample_point(&mut r, &poly);
            let inside = locate_in_ring(&x, &vis.outer_points());
            if inside == Location::Boundary {
                continue;
            }
            let sees = visible_from_segment_sampled(&ring, &a, &b, &x, 64);
            if sees {
                assert_eq!(inside, Location::Interior);
            } else if inside == Location::Interior {
                // Discretisation may miss thin sight cones; refine.
                assert!(visible_from_segment_sampled(&ring, &a, &b, &x, 4096));
            }
        }
    }
}

#[test]
fn chord_visibility_matches_sampling() {
    let mut r = rng(37);
    let mut tried = 0;
    while tried < 20 {
        let n = r.gen_range(6..=14);
        let poly = random_simple_polygon(&mut r, n);
        let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
        let (ni, pi) = poly.neighbours(i);
        if i == j || j == ni || j == pi || !segment_between(poly.vertex(i), poly.vertex(j), &poly) {
            continue;
        }
        let (a, b) = (poly.vertex(i).clone(), poly.vertex(j).clone());
        if point_in_polygon(&a.midpoint(&b), &poly) != Location::Interior {
            continue;
        }
        tried += 1;
        let ring = poly.outer_points();
        let vis = visibility_polygon_of_edge(&poly, &a, &b).unwrap();
        for _ in 0..150 {
            let x = sample_point(&mut r, &poly);
            let inside = locate_in_ring(&x, &vis.outer_points());
            if inside == Location::Boundary {
                continue;
            }
            let sees = visible_from_segment_sampled(&ring, &a, &b, &x, 64);
            if sees {
                assert_eq!(inside, Location::Interior);
            } else if inside == Location::Interior {
                assert!(visible_from_segment_sampled(&ring, &a, &b, &x, 4096));
            }
        }
    }
}

#[test]
fn region_round_trip_keeps_origins() {
    let poly = Polygon::simple(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
    let reg = Region::from_polygon(&poly);
    assert_eq!(reg.origin, vec![Some(0), Some(1), Some(2), Some(3)]);
}

fn fpts(c: &[(f64, f64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::f(x, y)).collect()
}

#[test]
fn hole_figure_pairs() {
    let outer = fpts(&[(0.0, 0.0), (2.5, 3.0), (4.0, 5.0), (7.5, 1.25), (7.0, 0.5), (4.5, 1.0)]);
    let hole = fpts(&[(2.5, 2.0), (4.0, 3.5), (5.0, 2.5), (3.5, 2.0)]);
    let with = Polygon::new(outer.clone(), vec![hole]).unwrap();
    let without = Polygon::simple(outer).unwrap();
    // Vertices 2 and 5 of the figure: only the hole is in the way.
    assert!(!vertex_visible(&with, 1, 4).unwrap());
    assert!(vertex_visible(&without, 1, 4).unwrap());
    // Vertices 1 and 4 are separated by the reflex vertex 6 either way.
    assert!(!vertex_visible(&with, 0, 3).unwrap());
    assert!(!vertex_visible(&without, 0, 3).unwrap());
    let g = visibility_graph(&with);
    for (i, j) in with.edges() {
        assert!(g.has_edge(i, j));
    }
    assert!(!g.has_edge(6, 8), "h1 and h3 are on opposite sides of the hole");
}

#[test]
fn nonplanar_figure_polygon() {
    let poly = Polygon::simple(fpts(&[(-5.0, 0.0), (-5.0, 3.0), (2.0, 2.0), (9.0, 3.0), (9.0, 0.0), (2.0, 1.0)])).unwrap();
    assert_eq!(visibility_graph(&poly).edges(), polyguard::fixtures::nonplanar_graph().edges());
}

fn cameras_room() -> Polygon {
    Polygon::simple(fpts(&[(0.0, 0.0), (3.0, 1.8), (4.0, 0.0), (6.5, 0.5), (7.0, 5.0), (5.5, 4.0), (3.0, 5.0), (0.0, 2.0)])).unwrap()
}

#[test]
fn cameras_figure_regions() {
    let room = cameras_room();
    let v = |i: usize| room.vertex(i).clone();
    // X' continues the sight line 1 -> 2 onto edge 4 -> 5; Y' continues 5 -> 6 onto edge 8 -> 1.
    let (t, _) = polyguard::geom::line_params(&v(0), &v(1), &v(3), &v(4)).unwrap();
    let x_hit = v(0).lerp(&v(1), &t);
    assert_eq!(x_hit.to_f64().0.mul_add(1000.0, 0.0).round() / 1000.0, 6.905);
    let (t, _) = polyguard::geom::line_params(&v(4), &v(5), &v(7), &v(0)).unwrap();
    let y_hit = v(4).lerp(&v(5), &t);
    assert_eq!(y_hit, Point::new(Q::from_integer(0.into()), Q::new(1.into(), 3.into())));

    let x_drawn = Polygon::simple(vec![x_hit, v(4), v(5), v(6), v(7), v(0), v(1)]).unwrap();
    let y_drawn = Polygon::simple(vec![y_hit, v(0), v(1), v(2), v(3), v(4)]).unwrap();
    let x_vis = visibility_polygon_of_point(&room, &v(0)).unwrap();
    let y_vis = visibility_polygon_of_point(&room, &v(4)).unwrap();
    assert_eq!(x_vis.area2(), x_drawn.area2());
    assert_eq!(y_vis.area2(), y_drawn.area2());

    let mut r = rng(31);
    for _ in 0..1000 {
        let p = sample_point(&mut r, &room);
        let seen = |vis: &Polygon| point_in_polygon(&p, vis) != Location::Exterior;
        assert_eq!(seen(&x_vis), seen(&x_drawn));
        assert_eq!(seen(&y_vis), seen(&y_drawn));
        assert!(seen(&x_vis) || seen(&y_vis), "the two cameras guard the room");
    }
}

#[test]
fn weakvis_figure_is_its_own_edge_visibility_polygon() {
    let poly = polyguard::fixtures::weakvis_polygon();
    let (u, v) = polyguard::fixtures::WEAKVIS_BASE;
    let vis = visibility_polygon_of_edge(&poly, poly.vertex(u), poly.vertex(v)).unwrap();
    assert_eq!(vis.area2(), poly.area2());
}

#[test]
fn boundary_cycle_is_in_every_graph() {
    let mut r = rng(32);
    for _ in 0..30 {
        let n = r.gen_range(4..=14);
        let poly = random_simple_polygon(&mut r, n);
        let g = visibility_graph(&poly);
        for (i, j) in poly.edges() {
            assert!(g.has_edge(i, j));
        }
    }
}
