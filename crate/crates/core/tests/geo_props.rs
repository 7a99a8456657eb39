mod common;

use std::cmp::Ordering;

use common::{
    c4_1243_plain, eo_contains_naive, segments_cross, self_crossing_c4_oracle, PlainOrdered,
};
use ordex::geo::{
    break_self_crossing_c4, enumerate_self_crossing_c4, orientation, properly_cross,
    random_geometric_graph, shear_remove_vertical, slope_reduction, verify_slope_claim,
    GeometricGraph, Point,
};
use ordex::io::read_geometry;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn xy(p: Point) -> (i64, i64) {
    (p.x, p.y)
}

/// Points with few distinct x values (so vertical edges appear) and no
/// collinear triple.
fn narrow_drawing(n: usize, p: f64, seed: u64) -> GeometricGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < n {
        let q = Point::new(rng.gen_range(-4..5), rng.gen_range(-1000..1000));
        let ok = !pts.contains(&q)
            && (0..pts.len()).all(|i| {
                (i + 1..pts.len()).all(|j| orientation(pts[i], pts[j], q) != Ordering::Equal)
            });
        if ok {
            pts.push(q);
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    GeometricGraph::new(pts, &edges).unwrap()
}

/// Slope comparison of two edges oriented left to right, by cross-multiplication.
fn slope_cmp(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Ordering {
    let l = (b.1 - a.1) as i128 * (d.0 - c.0) as i128;
    let r = (d.1 - c.1) as i128 * (b.0 - a.0) as i128;
    l.cmp(&r)
}

fn oriented(g: &GeometricGraph, (u, v): (usize, usize)) -> ((i64, i64), (i64, i64)) {
    let (p, q) = (xy(g.point(u)), xy(g.point(v)));
    if p.0 < q.0 {
        (p, q)
    } else {
        (q, p)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn crossing_predicate_matches_oracle_and_is_symmetric(seed in any::<u64>()) {
        let g = random_geometric_graph(4, 0.0, 50, seed).unwrap();
        let [p, q, r, s] = [0, 1, 2, 3].map(|k| g.point(k));
        let c = properly_cross(p, q, r, s).unwrap();
        prop_assert_eq!(c, segments_cross(xy(p), xy(q), xy(r), xy(s)));
        prop_assert_eq!(c, properly_cross(r, s, p, q).unwrap());
        prop_assert_eq!(c, properly_cross(q, p, s, r).unwrap());
    }

    #[test]
    fn self_crossing_enumeration_matches_oracle(
        seed in any::<u64>(), n in 4usize..=9, p in 0.3f64..0.9,
    ) {
        let g = random_geometric_graph(n, p, 200, seed).unwrap();
        let pts: Vec<(i64, i64)> = g.points().iter().map(|&q| xy(q)).collect();
        let mut expected = self_crossing_c4_oracle(&pts, g.edges());
        expected.sort();
        let mut got: Vec<(Vec<usize>, usize)> = enumerate_self_crossing_c4(&g)
            .unwrap()
            .into_iter()
            .map(|x| {
                let mut s = x.cycle.to_vec();
                s.sort_unstable();
                let opposite = x.cycle[2];
                let arrangement = if opposite == s[2] { 0 } else if opposite == s[3] { 1 } else { 2 };
                (s, arrangement)
            })
            .collect();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn shear_preserves_crossings_and_slope_order(seed in any::<u64>(), n in 4usize..=8) {
        let g = narrow_drawing(n, 0.6, seed);
        let (h, _) = shear_remove_vertical(&g).unwrap();
        prop_assert!(h.vertical_edge().is_none());
        let edges = g.edges();
        for (a, &e) in edges.iter().enumerate() {
            for &f in &edges[a + 1..] {
                let shares = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
                if !shares {
                    let before = segments_cross(xy(g.point(e.0)), xy(g.point(e.1)), xy(g.point(f.0)), xy(g.point(f.1)));
                    let after = segments_cross(xy(h.point(e.0)), xy(h.point(e.1)), xy(h.point(f.0)), xy(h.point(f.1)));
                    prop_assert_eq!(before, after);
                }
                let vert = |x: (usize, usize)| g.point(x.0).x == g.point(x.1).x;
                let (he, hf) = (oriented(&h, e), oriented(&h, f));
                let after = slope_cmp(he.0, he.1, hf.0, hf.1);
                match (vert(e), vert(f)) {
                    (false, false) => {
                        let (ge, gf) = (oriented(&g, e), oriented(&g, f));
                        prop_assert_eq!(slope_cmp(ge.0, ge.1, gf.0, gf.1), after);
                    }
                    (true, false) => prop_assert_eq!(after, Ordering::Greater),
                    (false, true) => prop_assert_eq!(after, Ordering::Less),
                    (true, true) => prop_assert_eq!(after, Ordering::Equal),
                }
            }
        }
    }

    #[test]
    fn reduction_keeps_left_to_right_edges_in_slope_order(
        seed in any::<u64>(), n in 2usize..=12, p in 0.2f64..0.9,
    ) {
        let g = random_geometric_graph(n, p, 500, seed).unwrap();
        let red = slope_reduction(&g, seed ^ 1).unwrap();
        for &(l, r) in &red.kept {
            prop_assert!(red.left[l] && !red.left[r]);
            prop_assert!(g.point(l).x < g.point(r).x);
            prop_assert!(g.has_edge(l, r));
        }
        let expected = g
            .edges()
            .iter()
            .filter(|&&(u, v)| {
                let (l, r) = if g.point(u).x < g.point(v).x { (u, v) } else { (v, u) };
                red.left[l] && !red.left[r]
            })
            .count();
        prop_assert_eq!(red.kept.len(), expected);
        for w in red.kept.windows(2) {
            let (a, b) = (oriented(&g, w[0]), oriented(&g, w[1]));
            prop_assert_ne!(slope_cmp(a.0, a.1, b.0, b.1), Ordering::Greater);
        }
        let ranks: Vec<(usize, usize)> = red.graph.edges().collect();
        let kept_sorted: Vec<(usize, usize)> =
            red.kept.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        prop_assert_eq!(ranks, kept_sorted);
    }

    #[test]
    fn claim_holds_and_thinned_drawings_avoid_the_pattern(
        seed in any::<u64>(), n in 4usize..=10, p in 0.4f64..0.9,
    ) {
        let g = random_geometric_graph(n, p, 1000, seed).unwrap();
        let raw = slope_reduction(&g, seed).unwrap();
        prop_assert!(verify_slope_claim(&raw.graph, &g).unwrap().holds());

        let thin = break_self_crossing_c4(&g, seed).unwrap();
        let pts: Vec<(i64, i64)> = thin.points().iter().map(|&q| xy(q)).collect();
        prop_assert!(self_crossing_c4_oracle(&pts, thin.edges()).is_empty());
        let red = slope_reduction(&thin, seed).unwrap();
        let claim = verify_slope_claim(&red.graph, &thin).unwrap();
        prop_assert!(claim.holds());
        prop_assert!(!claim.contains_c4_1243);
        let plain = PlainOrdered { n, edges: red.graph.edges().collect() };
        prop_assert!(!eo_contains_naive(&plain, &c4_1243_plain(), true));
    }
}

#[test]
fn single_edge_survives_a_quarter_of_the_time() {
    let g = GeometricGraph::new(vec![Point::new(0, 0), Point::new(5, 3)], &[(0, 1)]).unwrap();
    let trials = 10_000u64;
    let kept: u64 = (0..trials)
        .map(|s| slope_reduction(&g, s).unwrap().kept.len() as u64)
        .sum();
    let mean = kept as f64 / trials as f64;
    let se = (0.25f64 * 0.75 / trials as f64).sqrt();
    assert!((mean - 0.25).abs() <= 3.0 * se, "mean {mean}, se {se}");
}

#[test]
fn fixture_drawings() {
    let d = |name: &str| read_geometry(&common::fixture(&format!("drawings/{name}.txt"))).unwrap();
    assert!(enumerate_self_crossing_c4(&d("convex4"))
        .unwrap()
        .is_empty());
    let bow = enumerate_self_crossing_c4(&d("bowtie")).unwrap();
    assert_eq!(bow.len(), 1);
    assert!(bow[0].recheck(&d("bowtie")).unwrap());
    let vertical = d("vertical");
    assert!(slope_reduction(&vertical, 0).is_err());
    let (sheared, _) = shear_remove_vertical(&vertical).unwrap();
    assert!(slope_reduction(&sheared, 0).is_ok());
}

#[test]
fn degenerate_inputs_are_rejected() {
    let p = Point::new(0, 0);
    assert!(properly_cross(p, Point::new(1, 1), p, Point::new(2, 0)).is_err());
    assert!(properly_cross(p, Point::new(2, 2), Point::new(1, 1), Point::new(3, 0)).is_err());
    assert!(GeometricGraph::new(vec![p, p], &[]).is_err());
    assert!(GeometricGraph::new(vec![p, Point::new(1 << 41, 0)], &[]).is_err());
}
