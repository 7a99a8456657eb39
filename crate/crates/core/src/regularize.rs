//! Order/symbol incidence graphs and a multi-scale peeling heuristic that
//! extracts a `K`-almost-regular subgraph (`Δ ≤ K·δ`).

use std::collections::BTreeSet;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::{LinearOrder, OrderFamily, Symbol};

/// Bipartite graph between order indices `[0, n)` and symbols `[0, n')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteIncidence {
    num_orders: usize,
    universe: usize,
    edges: BTreeSet<(usize, Symbol)>,
}

impl BipartiteIncidence {
    pub fn new(
        num_orders: usize,
        universe: usize,
        edges: BTreeSet<(usize, Symbol)>,
    ) -> Result<Self> {
        if let Some(&(i, s)) = edges
            .iter()
            .find(|&&(i, s)| i >= num_orders || s.index() >= universe)
        {
            return Err(Error::NotASubgraph {
                order: i,
                symbol: s,
            });
        }
        Ok(BipartiteIncidence {
            num_orders,
            universe,
            edges,
        })
    }

    pub fn num_orders(&self) -> usize {
        self.num_orders
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn edges(&self) -> &BTreeSet<(usize, Symbol)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, order: usize, symbol: Symbol) -> bool {
        self.edges.contains(&(order, symbol))
    }

    pub fn order_degrees(&self) -> Vec<u64> {
        let mut d = vec![0; self.num_orders];
        for &(i, _) in &self.edges {
            d[i] += 1;
        }
        d
    }

    pub fn symbol_degrees(&self) -> Vec<u64> {
        let mut d = vec![0; self.universe];
        for &(_, s) in &self.edges {
            d[s.index()] += 1;
        }
        d
    }

    /// `(δ, Δ)` over non-isolated vertices of both sides; `None` without edges.
    pub fn degree_range(&self) -> Option<(u64, u64)> {
        self.order_degrees()
            .into_iter()
            .chain(self.symbol_degrees())
            .filter(|&d| d > 0)
            .fold(None, |acc, d| match acc {
                None => Some((d, d)),
                Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
            })
    }

    pub fn is_subgraph_of(&self, other: &BipartiteIncidence) -> bool {
        self.edges.is_subset(&other.edges)
    }
}

/// Incidence graph: order `i` is joined to symbol `a` iff `a` occurs in `A^i`.
pub fn build_incidence(family: &OrderFamily) -> BipartiteIncidence {
    let edges = family
        .orders()
        .iter()
        .enumerate()
        .flat_map(|(i, o)| o.as_slice().iter().map(move |&s| (i, s)))
        .collect();
    BipartiteIncidence {
        num_orders: family.len(),
        universe: family.universe(),
        edges,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub k_target: String,
    pub min_degree: u64,
    pub max_degree: u64,
    /// `Δ/δ` in lowest terms.
    pub k_achieved: String,
    pub retained_edges: u64,
    pub total_edges: u64,
    /// `retained_edges / total_edges` in lowest terms.
    pub retained_fraction: String,
    /// Degree scale that produced the subgraph (`0` for the single-edge fallback).
    pub scale: u64,
}

impl RegularityReport {
    pub fn retained_fraction_approx(&self) -> f64 {
        if self.total_edges == 0 {
            return 0.0;
        }
        self.retained_edges as f64 / self.total_edges as f64
    }
}

fn ratio_string(num: u64, den: u64) -> String {
    if den == 0 {
        return "0/1".to_string();
    }
    let r = Ratio::new(num, den);
    format!("{}/{}", r.numer(), r.denom())
}

/// `Δ ≤ k·δ`, exactly.
pub fn is_almost_regular(g: &BipartiteIncidence, k: Ratio<u64>) -> bool {
    match g.degree_range() {
        None => true,
        Some((lo, hi)) => hi as u128 * *k.denom() as u128 <= *k.numer() as u128 * lo as u128,
    }
}

/// Tries every degree scale `d = 1, …, Δ`: each vertex above degree `d`
/// sheds edges down to `d`, preferring edges to its highest-degree
/// neighbours, then vertices of degree below `d/k` are removed until none
/// remain. Every survivor then satisfies `d/k ≤ deg ≤ d`. The candidate with
/// most edges wins (ties: smaller `Δ`, then smaller scale); a single edge is
/// the fallback. No bound on the retained size is claimed.
pub fn extract_almost_regular(
    g: &BipartiteIncidence,
    k_target: Ratio<u64>,
) -> Result<(BipartiteIncidence, RegularityReport)> {
    if k_target < Ratio::from_integer(1) {
        return Err(Error::BadRegularity(format!(
            "{}/{}",
            k_target.numer(),
            k_target.denom()
        )));
    }
    let total = g.edge_count() as u64;
    let max_deg = g.degree_range().map_or(0, |(_, hi)| hi);

    let scales: Vec<u64> = (1..=max_deg).collect();
    let candidates: Vec<(u64, BTreeSet<(usize, Symbol)>)> = scales
        .par_iter()
        .map(|&d| (d, peel(g, d, k_target)))
        .collect();

    let mut best: Option<(u64, BTreeSet<(usize, Symbol)>, u64)> = None;
    for (scale, edges) in candidates {
        if edges.is_empty() {
            continue;
        }
        let sub = BipartiteIncidence {
            num_orders: g.num_orders,
            universe: g.universe,
            edges,
        };
        let hi = sub.degree_range().map_or(0, |(_, hi)| hi);
        let better = match &best {
            None => true,
            Some((_, e, bhi)) => {
                sub.edges.len() > e.len() || (sub.edges.len() == e.len() && hi < *bhi)
            }
        };
        if better {
            best = Some((scale, sub.edges, hi));
        }
    }
    let (scale, edges) = match best {
        Some((scale, edges, _)) => (scale, edges),
        None => (0, g.edges.iter().take(1).copied().collect()),
    };

    let sub = BipartiteIncidence {
        num_orders: g.num_orders,
        universe: g.universe,
        edges,
    };
    let (lo, hi) = sub.degree_range().unwrap_or((0, 0));
    debug_assert!(is_almost_regular(&sub, k_target));
    let report = RegularityReport {
        k_target: ratio_string(*k_target.numer(), *k_target.denom()),
        min_degree: lo,
        max_degree: hi,
        k_achieved: ratio_string(hi, lo),
        retained_edges: sub.edge_count() as u64,
        total_edges: total,
        retained_fraction: ratio_string(sub.edge_count() as u64, total),
        scale,
    };
    Ok((sub, report))
}

fn peel(g: &BipartiteIncidence, scale: u64, k: Ratio<u64>) -> BTreeSet<(usize, Symbol)> {
    let (num, den) = (*k.numer() as u128, *k.denom() as u128);
    let n = g.num_orders;
    // Vertices 0..n are orders, n.. are symbols.
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + g.universe];
    for &(i, s) in &g.edges {
        adj[i].insert(n + s.index());
        adj[n + s.index()].insert(i);
    }
    let cap = scale as usize;
    let mut heavy: Vec<usize> = (0..adj.len()).filter(|&v| adj[v].len() > cap).collect();
    heavy.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    for v in heavy {
        while adj[v].len() > cap {
            let w = *adj[v]
                .iter()
                .max_by_key(|&&w| (adj[w].len(), std::cmp::Reverse(w)))
                .expect("nonempty");
            adj[v].remove(&w);
            adj[w].remove(&v);
        }
    }
    // Removing edges never raises a degree, so only the lower bound remains.
    let too_low = |d: usize| d > 0 && (d as u128) * num < (scale as u128) * den;
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&v| too_low(adj[v].len())).collect();
    while let Some(v) = stack.pop() {
        if !too_low(adj[v].len()) {
            continue;
        }
        for w in std::mem::take(&mut adj[v]) {
            adj[w].remove(&v);
            if too_low(adj[w].len()) {
                stack.push(w);
            }
        }
    }
    g.edges
        .iter()
        .filter(|&&(i, s)| adj[i].contains(&(n + s.index())))
        .copied()
        .collect()
}

/// A family restricted to a subgraph, with dense re-indexing recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedFamily {
    pub family: OrderFamily,
    /// `symbol_map[new] = old`.
    pub symbol_map: Vec<Symbol>,
    /// `order_map[new] = old`.
    pub order_map: Vec<usize>,
}

/// Keeps in each order only the symbols adjacent to it in `sub`, drops orders
/// that become empty and re-indexes the surviving symbols densely.
pub fn restrict_family(family: &OrderFamily, sub: &BipartiteIncidence) -> Result<RestrictedFamily> {
    for &(i, s) in sub.edges() {
        if i >= family.len() || !family.orders()[i].contains(s) {
            return Err(Error::NotASubgraph {
                order: i,
                symbol: s,
            });
        }
    }
    let used: BTreeSet<Symbol> = sub.edges().iter().map(|&(_, s)| s).collect();
    let symbol_map: Vec<Symbol> = used.iter().copied().collect();
    let mut new_id = vec![u32::MAX; family.universe()];
    for (k, s) in symbol_map.iter().enumerate() {
        new_id[s.index()] = k as u32;
    }
    let mut orders = Vec::new();
    let mut order_map = Vec::new();
    for (i, o) in family.orders().iter().enumerate() {
        let kept: Vec<Symbol> = o
            .as_slice()
            .iter()
            .filter(|&&s| sub.contains_edge(i, s))
            .map(|s| Symbol(new_id[s.index()]))
            .collect();
        if !kept.is_empty() {
            orders.push(LinearOrder::from_valid(kept));
            order_map.push(i);
        }
    }
    Ok(RestrictedFamily {
        family: OrderFamily::new(symbol_map.len(), orders)?,
        symbol_map,
        order_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(universe: usize, orders: &[&[u32]]) -> OrderFamily {
        OrderFamily::from_ids(universe, orders.iter().map(|o| o.to_vec()).collect()).unwrap()
    }

    #[test]
    fn incidence_examples() {
        let g = build_incidence(&fam(2, &[&[0, 1], &[1]]));
        let e: Vec<_> = g.edges().iter().map(|&(i, s)| (i, s.0)).collect();
        assert_eq!(e, vec![(0, 0), (0, 1), (1, 1)]);
        assert_eq!(build_incidence(&OrderFamily::empty(0)).edge_count(), 0);
    }

    #[test]
    fn regular_graph_is_fixed_point() {
        // K_{3,3}
        let f = fam(3, &[&[0, 1, 2], &[2, 0, 1], &[1, 2, 0]]);
        let g = build_incidence(&f);
        for k in [
            Ratio::from_integer(1),
            Ratio::new(3, 2),
            Ratio::from_integer(5),
        ] {
            let (sub, rep) = extract_almost_regular(&g, k).unwrap();
            assert_eq!(sub, g);
            assert_eq!(rep.retained_fraction, "1/1");
        }
    }

    #[test]
    fn star_keeps_regular_piece() {
        let f = fam(5, &[&[0, 1, 2, 3, 4]]);
        let g = build_incidence(&f);
        let (sub, rep) = extract_almost_regular(&g, Ratio::from_integer(2)).unwrap();
        assert!(sub.edge_count() >= 1);
        assert!(rep.max_degree <= 2 * rep.min_degree);
        assert!(rep.retained_fraction_approx() >= 0.2);
    }

    #[test]
    fn rejects_small_k() {
        let g = build_incidence(&fam(1, &[&[0]]));
        assert!(matches!(
            extract_almost_regular(&g, Ratio::new(1, 2)),
            Err(Error::BadRegularity(_))
        ));
    }

    #[test]
    fn restrict_examples() {
        let f = fam(4, &[&[3, 1, 2], &[2, 3]]);
        let g = build_incidence(&f);
        let r = restrict_family(&f, &g).unwrap();
        assert_eq!(r.family.to_ids(), vec![vec![2, 0, 1], vec![1, 2]]);
        assert_eq!(r.symbol_map, vec![Symbol(1), Symbol(2), Symbol(3)]);

        let empty = BipartiteIncidence::new(2, 4, BTreeSet::new()).unwrap();
        assert!(restrict_family(&f, &empty).unwrap().family.is_empty());

        let mut edges = g.edges().clone();
        edges.remove(&(0, Symbol(1)));
        let sub = BipartiteIncidence::new(2, 4, edges).unwrap();
        let r = restrict_family(&f, &sub).unwrap();
        assert_eq!(r.family.orders()[0].len(), 2);
        assert_eq!(r.family.orders()[1].len(), 2);

        let bogus = BipartiteIncidence::new(2, 4, [(1, Symbol(1))].into()).unwrap();
        assert!(matches!(
            restrict_family(&f, &bogus),
            Err(Error::NotASubgraph { .. })
        ));
    }
}
