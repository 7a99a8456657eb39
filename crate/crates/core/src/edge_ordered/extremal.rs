//! Exact small-`n` extremal numbers `ex_<(n, H)` by exhaustive search.
//!
//! An edge-ordered graph is grown one edge at a time, each new edge becoming
//! the largest. Since containment is inherited by supergraphs that only add
//! larger edges, a branch dies as soon as a copy of `H` appears, and that copy
//! must use the new edge as the image of `H`'s largest edge. Isomorphic
//! duplicates are cut by labelling vertices in order of first appearance:
//! rank is preserved by every isomorphism, so the labelling is canonical up to
//! swapping the two fresh endpoints of an edge.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{contains_unordered, contains_with_last_edge, EdgeOrderedGraph};
use crate::error::{Error, Result};

/// Largest `n` accepted by the exact searches.
pub const EX_ORDERED_CAP: usize = 6;

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    pub time: Option<Duration>,
    pub max_nodes: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn with_time(time: Duration) -> Self {
        SearchBudget {
            time: Some(time),
            max_nodes: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExSearch {
    pub n: usize,
    pub value: usize,
    /// False when the budget ran out; `value` is then only a lower bound.
    pub exact: bool,
    pub nodes: u64,
    /// Edges of an extremal avoiding graph, in increasing order.
    pub witness: Vec<(usize, usize)>,
}

struct Dfs<'a> {
    pattern: &'a EdgeOrderedGraph,
    n: usize,
    max_edges: usize,
    best: usize,
    best_edges: Vec<(usize, usize)>,
    nodes: u64,
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    exhausted: bool,
}

impl Dfs<'_> {
    fn out_of_budget(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        if self.max_nodes.is_some_and(|m| self.nodes >= m)
            || (self.nodes % 4096 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d))
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    fn record(&mut self, g: &EdgeOrderedGraph) {
        if g.edge_count() > self.best {
            self.best = g.edge_count();
            self.best_edges = g.edges().collect();
        }
    }

    fn run(&mut self, g: &mut EdgeOrderedGraph, used: usize) {
        self.nodes += 1;
        self.record(g);
        if self.best == self.max_edges || self.out_of_budget() {
            return;
        }
        for (u, v) in next_edges(g, used, self.n) {
            g.push_edge(u, v);
            let last = g.edge_count() - 1;
            if contains_with_last_edge(g, self.pattern, last).is_none() {
                let used_next = used.max(v + 1);
                self.run(g, used_next);
            }
            g.pop_edge();
            if self.exhausted || self.best == self.max_edges {
                return;
            }
        }
    }
}

/// Candidate next edges: among the `used` labelled vertices, or introducing
/// the next one or two fresh labels.
fn next_edges(g: &EdgeOrderedGraph, used: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n.min(used + 2) {
        for u in 0..v {
            let allowed = if v < used {
                true
            } else if v == used {
                u < used
            } else {
                u == used
            };
            if allowed && g.rank(u, v).is_none() {
                out.push((u, v));
            }
        }
    }
    out
}

/// Exact `ex_<(n, pattern)` within `budget`; `n ≤ 6`.
pub fn ex_ordered_search(
    n: usize,
    pattern: &EdgeOrderedGraph,
    budget: SearchBudget,
) -> Result<ExSearch> {
    if n > EX_ORDERED_CAP {
        return Err(Error::SearchTooLarge {
            n,
            cap: EX_ORDERED_CAP,
        });
    }
    if pattern.edge_count() == 0 {
        return Err(Error::InvalidGraph("pattern has no edges".into()));
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    if n < 2 {
        return Ok(ExSearch {
            n,
            value: 0,
            exact: true,
            nodes: 1,
            witness: Vec::new(),
        });
    }
    let deadline = budget.time.map(|t| Instant::now() + t);

    // Root: the first edge is always {0, 1}. Its children are searched in
    // parallel, each with an independent bound so the result is deterministic.
    let mut root = EdgeOrderedGraph::empty(n);
    root.push_edge(0, 1);
    if contains_with_last_edge(&root, pattern, 0).is_some() {
        return Ok(ExSearch {
            n,
            value: 0,
            exact: true,
            nodes: 1,
            witness: Vec::new(),
        });
    }
    let children = next_edges(&root, 2, n);
    let results: Vec<Dfs> = children
        .par_iter()
        .map(|&(u, v)| {
            let mut dfs = Dfs {
                pattern,
                n,
                max_edges,
                best: 1,
                best_edges: vec![(0, 1)],
                nodes: 0,
                deadline,
                max_nodes: budget.max_nodes,
                exhausted: false,
            };
            let mut g = root.clone();
            g.push_edge(u, v);
            if contains_with_last_edge(&g, pattern, 1).is_none() {
                dfs.run(&mut g, 2.max(v + 1));
            }
            dfs
        })
        .collect();

    let mut out = ExSearch {
        n,
        value: 1,
        exact: true,
        nodes: 1,
        witness: vec![(0, 1)],
    };
    for d in results {
        out.nodes += d.nodes;
        out.exact &= !d.exhausted;
        if d.best > out.value {
            out.value = d.best;
            out.witness = d.best_edges;
        }
    }
    Ok(out)
}

/// `ex_<(n, pattern)`, exact; `n ≤ 6` (`n ≤ 5` completes quickly).
pub fn brute_force_ex_ordered(n: usize, pattern: &EdgeOrderedGraph) -> Result<usize> {
    Ok(ex_ordered_search(n, pattern, SearchBudget::unlimited())?.value)
}

/// `ex(n, H)` for the underlying unordered pattern, over all `2^{C(n,2)}` graphs.
pub fn brute_force_ex_unordered(n: usize, pattern: &EdgeOrderedGraph) -> Result<usize> {
    if n > EX_ORDERED_CAP {
        return Err(Error::SearchTooLarge {
            n,
            cap: EX_ORDERED_CAP,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let best = (0u32..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = EdgeOrderedGraph::new(n, &edges).expect("distinct pairs");
            contains_unordered(&g, pattern)
                .is_none()
                .then_some(edges.len())
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}
