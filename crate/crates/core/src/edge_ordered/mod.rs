//! Edge-ordered graphs: simple graphs with a total order on their edges.
//!
//! Containment must respect the relative order of edges. The edge order is the
//! listing order: `edges()[r]` has rank `r`.

mod c4;
mod extremal;
mod matcher;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use c4::{
    c4_embedding_from_cycle, find_c4_fast, four_cycles, is_c4_1243_cycle, neighbor_orders,
};
pub use extremal::{
    brute_force_ex_ordered, brute_force_ex_unordered, ex_ordered_search, ExSearch, SearchBudget,
    EX_ORDERED_CAP,
};

const NO_EDGE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct EdgeOrderedGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    // n×n rank table, NO_EDGE where absent
    rank: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

impl EdgeOrderedGraph {
    /// Builds a graph whose edge order is the order of `edges`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.rank(u, v).is_some() {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            g.push_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        EdgeOrderedGraph {
            n,
            edges: Vec::new(),
            rank: vec![NO_EDGE; n * n],
            adj: vec![Vec::new(); n],
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing order, each as `(min, max)`.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn edge(&self, rank: usize) -> (usize, usize) {
        let (u, v) = self.edges[rank];
        (u as usize, v as usize)
    }

    #[inline]
    pub fn rank(&self, u: usize, v: usize) -> Option<usize> {
        match self.rank[u * self.n + v] {
            NO_EDGE => None,
            r => Some(r as usize),
        }
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&w| w as usize)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Appends `{u, v}` as the new largest edge. Caller checks validity.
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) {
        let r = self.edges.len() as u32;
        let (a, b) = (u.min(v), u.max(v));
        self.edges.push((a as u32, b as u32));
        self.rank[a * self.n + b] = r;
        self.rank[b * self.n + a] = r;
        self.adj[a].push(b as u32);
        self.adj[b].push(a as u32);
    }

    /// Removes the largest edge.
    pub(crate) fn pop_edge(&mut self) {
        if let Some((a, b)) = self.edges.pop() {
            let (a, b) = (a as usize, b as usize);
            self.rank[a * self.n + b] = NO_EDGE;
            self.rank[b * self.n + a] = NO_EDGE;
            self.adj[a].pop();
            self.adj[b].pop();
        }
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Debug for EdgeOrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeOrderedGraph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub vertex_map: Vec<usize>,
}

impl Embedding {
    /// Injective, maps edges to edges, and preserves the relative edge order.
    pub fn is_valid(&self, host: &EdgeOrderedGraph, pattern: &EdgeOrderedGraph) -> bool {
        if self.vertex_map.len() != pattern.num_vertices() {
            return false;
        }
        let mut seen = vec![false; host.num_vertices()];
        for &h in &self.vertex_map {
            if h >= host.num_vertices() || std::mem::replace(&mut seen[h], true) {
                return false;
            }
        }
        let mut images = Vec::with_capacity(pattern.edge_count());
        for (u, v) in pattern.edges() {
            match host.rank(self.vertex_map[u], self.vertex_map[v]) {
                Some(r) => images.push(r),
                None => return false,
            }
        }
        images.windows(2).all(|w| w[0] < w[1])
    }
}

/// `C_4^{1243}`: the cycle `abcd` with `ab < bc < da < cd`; `a, b, c, d = 0, 1, 2, 3`.
pub fn c4_1243() -> EdgeOrderedGraph {
    EdgeOrderedGraph::new(4, &[(0, 1), (1, 2), (0, 3), (2, 3)]).expect("fixed pattern")
}

/// Finds an order-preserving copy of `pattern` in `host`.
pub fn contains(host: &EdgeOrderedGraph, pattern: &EdgeOrderedGraph) -> Option<Embedding> {
    matcher::Matcher::new(host, pattern, true).find(&[])
}

/// Subgraph containment ignoring edge order.
pub fn contains_unordered(
    host: &EdgeOrderedGraph,
    pattern: &EdgeOrderedGraph,
) -> Option<Embedding> {
    matcher::Matcher::new(host, pattern, false).find(&[])
}

/// Order-preserving copies in which the pattern's largest edge maps to the
/// host's edge of rank `host_rank`.
pub fn contains_with_last_edge(
    host: &EdgeOrderedGraph,
    pattern: &EdgeOrderedGraph,
    host_rank: usize,
) -> Option<Embedding> {
    let m = pattern.edge_count();
    if m == 0 {
        return None;
    }
    let (pu, pv) = pattern.edge(m - 1);
    let (hu, hv) = host.edge(host_rank);
    let matcher = matcher::Matcher::new(host, pattern, true);
    matcher
        .find(&[(pu, hu), (pv, hv)])
        .or_else(|| matcher.find(&[(pu, hv), (pv, hu)]))
}

/// Rank-preserving isomorphism test.
pub fn edge_ordered_isomorphic(g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> bool {
    g.num_vertices() == h.num_vertices()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        // An injective vertex map between equal-size graphs with equally many
        // edges is a bijection on both.
        && contains(g, h).is_some()
}
