//! Straight-line drawings with integer coordinates and exact predicates.

mod slope;

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::edge_ordered::{four_cycles, EdgeOrderedGraph};
use crate::error::{Error, Result};

pub use slope::{slope_reduction, verify_slope_claim, SlopeClaim, SlopeReduction};

/// Coordinates must satisfy `|x|, |y| <= COORD_LIMIT`; orientation
/// determinants are then exact in `i128`.
pub const COORD_LIMIT: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// Sign of the turn `p → q → r`: positive for counter-clockwise.
pub fn orientation(p: Point, q: Point, r: Point) -> Ordering {
    let d = (q.x as i128 - p.x as i128) * (r.y as i128 - p.y as i128)
        - (q.y as i128 - p.y as i128) * (r.x as i128 - p.x as i128);
    d.cmp(&0)
}

/// Whether the open segments `pq` and `rs` cross at a single interior point.
///
/// Rejects segments sharing an endpoint and any collinear triple among the
/// four points.
pub fn properly_cross(p: Point, q: Point, r: Point, s: Point) -> Result<bool> {
    if [r, s].iter().any(|e| *e == p || *e == q) {
        return Err(Error::Degenerate(format!(
            "segments {p:?}-{q:?} and {r:?}-{s:?} share an endpoint"
        )));
    }
    let o = [
        orientation(p, q, r),
        orientation(p, q, s),
        orientation(r, s, p),
        orientation(r, s, q),
    ];
    if o.contains(&Ordering::Equal) {
        return Err(Error::Degenerate(format!(
            "collinear points among {p:?}, {q:?}, {r:?}, {s:?}"
        )));
    }
    Ok(o[0] != o[1] && o[2] != o[3])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricGraph {
    points: Vec<Point>,
    edges: Vec<(usize, usize)>,
}

impl GeometricGraph {
    /// Points must be distinct and within [`COORD_LIMIT`]; edges are stored as
    /// `(min, max)` in the given order.
    pub fn new(points: Vec<Point>, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(p) = points
            .iter()
            .find(|p| p.x.abs() > COORD_LIMIT || p.y.abs() > COORD_LIMIT)
        {
            return Err(Error::Degenerate(format!(
                "{p:?} exceeds the coordinate limit"
            )));
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Degenerate(format!("repeated point {:?}", w[0])));
        }
        // Reuses the simple-graph checks.
        let g = EdgeOrderedGraph::new(points.len(), edges)?;
        Ok(GeometricGraph {
            points,
            edges: g.edges().collect(),
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    pub fn vertical_edge(&self) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| self.points[u].x == self.points[v].x)
    }

    /// The abstract graph, edges ranked in stored order.
    pub fn abstract_graph(&self) -> EdgeOrderedGraph {
        EdgeOrderedGraph::new(self.points.len(), &self.edges).expect("validated on construction")
    }

    /// Whether any three points are collinear.
    pub fn has_collinear_triple(&self) -> bool {
        let p = &self.points;
        (0..p.len()).any(|i| {
            (i + 1..p.len())
                .any(|j| (j + 1..p.len()).any(|k| orientation(p[i], p[j], p[k]) == Ordering::Equal))
        })
    }
}

/// A drawn 4-cycle two of whose opposite edges properly cross.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCrossingC4 {
    pub cycle: [usize; 4],
    pub crossing: [(usize, usize); 2],
}

impl SelfCrossingC4 {
    pub fn recheck(&self, g: &GeometricGraph) -> Result<bool> {
        let c = &self.cycle;
        let edges_exist = (0..4).all(|k| g.has_edge(c[k], c[(k + 1) % 4]));
        let [(a, b), (u, v)] = self.crossing;
        Ok(edges_exist && properly_cross(g.point(a), g.point(b), g.point(u), g.point(v))?)
    }
}

/// The crossing opposite pair of the drawn cycle `c`, if any.
pub fn cycle_crossing(g: &GeometricGraph, c: &[usize; 4]) -> Result<Option<[(usize, usize); 2]>> {
    for pair in [[(c[0], c[1]), (c[2], c[3])], [(c[1], c[2]), (c[3], c[0])]] {
        let [(a, b), (u, v)] = pair;
        if properly_cross(g.point(a), g.point(b), g.point(u), g.point(v))? {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

/// Every 4-cycle with a properly crossing pair of opposite edges, in the
/// order of [`four_cycles`].
pub fn enumerate_self_crossing_c4(g: &GeometricGraph) -> Result<Vec<SelfCrossingC4>> {
    let mut out = Vec::new();
    for cycle in four_cycles(&g.abstract_graph()) {
        if let Some(crossing) = cycle_crossing(g, &cycle)? {
            out.push(SelfCrossingC4 { cycle, crossing });
        }
    }
    Ok(out)
}

/// Applies `(x, y) → (N·x + y, y)` with `N` one more than the largest `|Δy|`
/// over the edges.
///
/// The map is linear with positive determinant, so orientations, crossings
/// and collinearity are unchanged. An edge with `Δx > 0` keeps `Δx > 0` and
/// its slope `s` becomes `s / (N + s)`, which is increasing in `s` on
/// `|s| < N`; formerly vertical edges get slope 1, steeper than every other.
pub fn shear_remove_vertical(g: &GeometricGraph) -> Result<(GeometricGraph, i64)> {
    let n = g
        .edges()
        .iter()
        .map(|&(u, v)| (g.point(u).y - g.point(v).y).abs())
        .max()
        .unwrap_or(0)
        + 1;
    let points = g
        .points()
        .iter()
        .map(|p| {
            p.x.checked_mul(n)
                .and_then(|x| x.checked_add(p.y))
                .map(|x| Point::new(x, p.y))
                .ok_or_else(|| Error::Degenerate(format!("shear by {n} overflows at {p:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((GeometricGraph::new(points, g.edges())?, n))
}

/// Random drawing on `n` points in general position (no three collinear,
/// distinct x-coordinates) with coordinates in `[0, span)`, each pair joined
/// with probability `p`.
pub fn random_geometric_graph(n: usize, p: f64, span: i64, seed: u64) -> Result<GeometricGraph> {
    if span < 1 || n as i64 > span {
        return Err(Error::Degenerate(format!(
            "cannot place {n} points in a {span}x{span} box"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut attempts = 0usize;
    while points.len() < n {
        attempts += 1;
        if attempts > 10_000 * (n + 1) {
            return Err(Error::Degenerate("could not reach general position".into()));
        }
        let q = Point::new(rng.gen_range(0..span), rng.gen_range(0..span));
        let ok = points.iter().all(|a| a.x != q.x)
            && (0..points.len()).all(|i| {
                (i + 1..points.len())
                    .all(|j| orientation(points[i], points[j], q) != Ordering::Equal)
            });
        if ok {
            points.push(q);
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    GeometricGraph::new(points, &edges)
}

/// Deletes edges until no 4-cycle crosses itself: while one exists, one of
/// its two crossing edges, picked by a seeded coin, is removed.
pub fn break_self_crossing_c4(g: &GeometricGraph, seed: u64) -> Result<GeometricGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = g.clone();
    while let Some(x) = enumerate_self_crossing_c4(&cur)?.into_iter().next() {
        let drop = x.crossing[rng.gen_range(0..2)];
        let drop = (drop.0.min(drop.1), drop.0.max(drop.1));
        cur.edges.retain(|&e| e != drop);
    }
    Ok(cur)
}
