//! Instance generators: polarity graphs, families from C4-free graphs, and
//! seeded random valid families.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::edge_ordered::EdgeOrderedGraph;
use crate::error::{Error, Result};
use crate::orders::{
    is_cyclic_intersection_reverse, CyclicFamily, CyclicOrder, LinearOrder, OrderFamily, Symbol,
};

/// Largest field size accepted by [`polarity_graph`].
pub const MAX_POLARITY_Q: u64 = 31;

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// The polarity graph of the projective plane over `Z_q`.
#[derive(Clone, Debug)]
pub struct PolarityGraph {
    pub q: u64,
    /// Normalized homogeneous coordinates, one point per vertex.
    pub points: Vec<[u64; 3]>,
    /// Simple graph; its edge order (lexicographic) carries no meaning.
    pub graph: EdgeOrderedGraph,
}

impl PolarityGraph {
    /// Points orthogonal to themselves; these have degree `q`.
    pub fn absolute_points(&self) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&v| dot(self.points[v], self.points[v], self.q) == 0)
            .collect()
    }
}

fn dot(u: [u64; 3], v: [u64; 3], q: u64) -> u64 {
    (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q
}

/// Vertices are the `q² + q + 1` points of PG(2, q); `u ~ v` iff `u·v ≡ 0`
/// and `u ≠ v`.
pub fn polarity_graph(q: u64) -> Result<PolarityGraph> {
    if !is_prime(q) || q > MAX_POLARITY_Q {
        return Err(Error::NotPrime(q));
    }
    let mut points = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            points.push([1, a, b]);
        }
    }
    for b in 0..q {
        points.push([0, 1, b]);
    }
    points.push([0, 0, 1]);
    let n = points.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| dot(points[u], points[v], q) == 0)
        .collect();
    let graph = EdgeOrderedGraph::new(n, &edges)?;
    Ok(PolarityGraph { q, points, graph })
}

/// Two vertices with two common neighbours, if any.
pub fn find_c4_witness(g: &EdgeOrderedGraph) -> Option<(usize, usize)> {
    let n = g.num_vertices();
    let mut seen = vec![false; n * n];
    for w in 0..n {
        let nb: Vec<usize> = g.neighbors(w).collect();
        for (k, &u) in nb.iter().enumerate() {
            for &v in &nb[k + 1..] {
                let (a, b) = (u.min(v), u.max(v));
                if std::mem::replace(&mut seen[a * n + b], true) {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

pub fn is_c4_free(g: &EdgeOrderedGraph) -> bool {
    find_c4_witness(g).is_none()
}

/// One order per vertex listing its neighbourhood in seeded random order.
/// Two neighbourhoods of a C4-free graph share at most one vertex, so the
/// result is valid and even pairwise intersection-reverse.
pub fn family_from_c4_free(g: &EdgeOrderedGraph, seed: u64) -> Result<OrderFamily> {
    if let Some((u, v)) = find_c4_witness(g) {
        return Err(Error::NotC4Free(u, v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let orders = (0..g.num_vertices())
        .map(|u| {
            let mut nb: Vec<u32> = g.neighbors(u).map(|w| w as u32).collect();
            nb.sort_unstable();
            nb.shuffle(&mut rng);
            LinearOrder::from_ids(nb)
        })
        .collect::<Result<Vec<_>>>()?;
    OrderFamily::new(g.num_vertices(), orders)
}

/// Parameters of a seeded random family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySeedSpec {
    /// Number of orders.
    pub n: usize,
    /// Number of symbols.
    pub universe: usize,
    /// Requested lengths are uniform in `min_len..=max_len`, capped by the universe.
    pub min_len: usize,
    pub max_len: usize,
    pub seed: u64,
}

fn random_orders(spec: &FamilySeedSpec, rng: &mut ChaCha8Rng) -> Vec<Vec<u32>> {
    let hi = spec.max_len.min(spec.universe);
    let lo = spec.min_len.min(hi);
    (0..spec.n)
        .map(|_| {
            let len = rng.gen_range(lo..=hi);
            index::sample(rng, spec.universe, len)
                .into_iter()
                .map(|s| s as u32)
                .collect()
        })
        .collect()
}

/// Random orders, then repeatedly truncates the later order of a violating
/// pair just before the last symbol of its same-order triple, until the
/// family is valid.
pub fn random_valid_family(spec: &FamilySeedSpec) -> Result<OrderFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut family = OrderFamily::from_ids(spec.universe, random_orders(spec, &mut rng))?;
    while let Some(w) = family.first_violation() {
        let mut orders = family.orders().to_vec();
        let cut = orders[w.j].position(w.c).expect("witness symbol occurs");
        orders[w.j] = orders[w.j].prefix(cut);
        family = OrderFamily::new(spec.universe, orders)?;
    }
    debug_assert!(family.is_valid());
    Ok(family)
}

/// Random cyclic orders kept greedily whenever they are intersection-reverse
/// with every order kept so far; at most `spec.n` orders, and at least one
/// attempt per requested order.
pub fn random_intersection_reverse_cyclic(spec: &FamilySeedSpec) -> Result<CyclicFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut kept: Vec<CyclicOrder> = Vec::new();
    for _ in 0..4 * spec.n {
        if kept.len() == spec.n {
            break;
        }
        let ids = random_orders(
            &FamilySeedSpec {
                n: 1,
                ..spec.clone()
            },
            &mut rng,
        )
        .pop()
        .unwrap_or_default();
        let c = CyclicOrder::new(ids.into_iter().map(Symbol).collect())?;
        if kept.iter().all(|k| is_cyclic_intersection_reverse(k, &c)) {
            kept.push(c);
        }
    }
    CyclicFamily::new(spec.universe, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{cyclic_family_to_linear, is_intersection_reverse};

    #[test]
    fn polarity_sizes() {
        let p2 = polarity_graph(2).unwrap();
        assert_eq!(p2.graph.num_vertices(), 7);
        let p7 = polarity_graph(7).unwrap();
        assert_eq!(p7.graph.num_vertices(), 57);
        let d = p7.graph.degree_sequence();
        assert_eq!((d[0], d[56]), (7, 8));
        assert_eq!(p7.absolute_points().len(), 8);
        assert!(p7
            .absolute_points()
            .iter()
            .all(|&v| p7.graph.degree(v) == 7));
        assert!(is_c4_free(&p7.graph));
        assert!(matches!(polarity_graph(9), Err(Error::NotPrime(9))));
        assert!(polarity_graph(37).is_err());
    }

    #[test]
    fn c4_free_check() {
        let c4 = EdgeOrderedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(find_c4_witness(&c4), Some((1, 3)));
        assert!(matches!(
            family_from_c4_free(&c4, 0),
            Err(Error::NotC4Free(..))
        ));
    }

    #[test]
    fn star_family() {
        let star = EdgeOrderedGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let f = family_from_c4_free(&star, 3).unwrap();
        let lens: Vec<usize> = f.orders().iter().map(LinearOrder::len).collect();
        assert_eq!(lens, vec![4, 1, 1, 1, 1]);
        assert!(f.is_valid());
    }

    #[test]
    fn polarity_family_is_valid_and_pairwise_reversed() {
        let p = polarity_graph(7).unwrap();
        let f = family_from_c4_free(&p.graph, 1).unwrap();
        assert!(f.validate().is_empty());
        assert_eq!(f.total_weight(), 2 * p.graph.edge_count() as u64);
        let o = f.orders();
        for i in 0..o.len() {
            for j in i + 1..o.len() {
                assert!(o[i].common_count(&o[j]) <= 1);
                assert!(is_intersection_reverse(&o[i], &o[j]));
            }
        }
    }

    #[test]
    fn random_families_are_valid_and_reproducible() {
        for seed in 0..30 {
            let spec = FamilySeedSpec {
                n: 8,
                universe: 10,
                min_len: 3,
                max_len: 8,
                seed,
            };
            let f = random_valid_family(&spec).unwrap();
            assert!(f.is_valid());
            assert_eq!(f.len(), 8);
            assert_eq!(f.to_ids(), random_valid_family(&spec).unwrap().to_ids());
        }
        let one = FamilySeedSpec {
            n: 1,
            universe: 5,
            min_len: 5,
            max_len: 5,
            seed: 0,
        };
        assert_eq!(random_valid_family(&one).unwrap().total_weight(), 5);
    }

    #[test]
    fn random_cyclic_families_linearize_to_valid() {
        for seed in 0..30 {
            let spec = FamilySeedSpec {
                n: 6,
                universe: 7,
                min_len: 2,
                max_len: 5,
                seed,
            };
            let c = random_intersection_reverse_cyclic(&spec).unwrap();
            assert!(c.is_pairwise_intersection_reverse());
            assert!(cyclic_family_to_linear(&c).is_valid());
        }
    }
}
