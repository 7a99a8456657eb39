//! Random left/right split of a drawing, edges ordered by slope.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{cycle_crossing, GeometricGraph, Point};
use crate::edge_ordered::{c4_1243, contains, four_cycles, EdgeOrderedGraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SlopeReduction {
    pub graph: EdgeOrderedGraph,
    /// Coin flip per vertex: true for the left class.
    pub left: Vec<bool>,
    /// Kept edges as (left endpoint, right endpoint), in slope order.
    pub kept: Vec<(usize, usize)>,
}

/// Compares slopes of `a→b` and `c→d`, both with positive `Δx`.
fn cmp_slope(a: Point, b: Point, c: Point, d: Point) -> Ordering {
    let (dx1, dy1) = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
    let (dx2, dy2) = (d.x as i128 - c.x as i128, d.y as i128 - c.y as i128);
    (dy1 * dx2).cmp(&(dy2 * dx1))
}

/// Splits the vertices by seeded fair coins into left and right classes,
/// keeps the edges from a left vertex to a right vertex lying strictly to its
/// right, and orders them by slope; equal slopes fall back to the endpoints.
pub fn slope_reduction(g: &GeometricGraph, seed: u64) -> Result<SlopeReduction> {
    if let Some((u, v)) = g.vertical_edge() {
        return Err(Error::VerticalEdge(u, v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left: Vec<bool> = (0..g.num_vertices()).map(|_| rng.gen_bool(0.5)).collect();
    let mut kept: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if g.point(u).x < g.point(v).x {
                (u, v)
            } else {
                (v, u)
            }
        })
        .filter(|&(l, r)| left[l] && !left[r])
        .collect();
    kept.sort_by(|&(a, b), &(c, d)| {
        cmp_slope(g.point(a), g.point(b), g.point(c), g.point(d)).then((a, b).cmp(&(c, d)))
    });
    let graph = EdgeOrderedGraph::new(g.num_vertices(), &kept)?;
    Ok(SlopeReduction { graph, left, kept })
}

#[derive(Clone, Debug, Serialize)]
pub struct SlopeClaim {
    pub cycles: usize,
    /// Cycles with a crossing pair of opposite edges, to which the claim does not apply.
    pub exempt: usize,
    /// Non-crossing cycles whose smallest and largest edges are opposite.
    pub violations: Vec<[usize; 4]>,
    pub contains_c4_1243: bool,
}

impl SlopeClaim {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every non-self-crossing 4-cycle of `gprime` has its smallest
/// and largest edges adjacent, and records whether `gprime` contains
/// `C_4^{1243}`.
pub fn verify_slope_claim(
    gprime: &EdgeOrderedGraph,
    geometry: &GeometricGraph,
) -> Result<SlopeClaim> {
    if gprime.num_vertices() != geometry.num_vertices() {
        return Err(Error::Mismatch(format!(
            "{} vertices in the ordered graph, {} in the drawing",
            gprime.num_vertices(),
            geometry.num_vertices()
        )));
    }
    let oriented: Vec<(Point, Point)> = gprime
        .edges()
        .map(|(u, v)| {
            if !geometry.has_edge(u, v) {
                return Err(Error::Mismatch(format!(
                    "edge ({u}, {v}) is not in the drawing"
                )));
            }
            let (p, q) = (geometry.point(u), geometry.point(v));
            match p.x.cmp(&q.x) {
                Ordering::Less => Ok((p, q)),
                Ordering::Greater => Ok((q, p)),
                Ordering::Equal => Err(Error::VerticalEdge(u, v)),
            }
        })
        .collect::<Result<_>>()?;
    if let Some(r) = oriented
        .windows(2)
        .position(|w| cmp_slope(w[0].0, w[0].1, w[1].0, w[1].1) == Ordering::Greater)
    {
        return Err(Error::Mismatch(format!(
            "edges of rank {r} and {} are not in slope order",
            r + 1
        )));
    }

    let cycles = four_cycles(gprime);
    let mut exempt = 0;
    let mut violations = Vec::new();
    for c in &cycles {
        if cycle_crossing(geometry, c)?.is_some() {
            exempt += 1;
            continue;
        }
        let ranks: Vec<usize> = (0..4)
            .map(|k| gprime.rank(c[k], c[(k + 1) % 4]).expect("cycle edge"))
            .collect();
        let lo = (0..4).min_by_key(|&k| ranks[k]).expect("four edges");
        let hi = (0..4).max_by_key(|&k| ranks[k]).expect("four edges");
        if (lo + 2) % 4 == hi {
            violations.push(*c);
        }
    }
    Ok(SlopeClaim {
        cycles: cycles.len(),
        exempt,
        violations,
        contains_c4_1243: contains(gprime, &c4_1243()).is_some(),
    })
}
