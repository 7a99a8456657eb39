use super::{EdgeOrderedGraph, Embedding};
use crate::orders::{common_triple_same_order, LinearOrder, Symbol};

/// Every 4-cycle once, as `[v0, v1, v2, v3]` with `v0` the smallest vertex and
/// `v1 < v3` its two cycle neighbours.
pub fn four_cycles(g: &EdgeOrderedGraph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for v0 in 0..g.num_vertices() {
        let mut nb: Vec<usize> = g.neighbors(v0).filter(|&w| w > v0).collect();
        nb.sort_unstable();
        for (k, &v1) in nb.iter().enumerate() {
            for &v3 in &nb[k + 1..] {
                let mut opposite: Vec<usize> = g
                    .neighbors(v1)
                    .filter(|&v2| v2 > v0 && v2 != v3 && g.rank(v2, v3).is_some())
                    .collect();
                opposite.sort_unstable();
                out.extend(opposite.into_iter().map(|v2| [v0, v1, v2, v3]));
            }
        }
    }
    out
}

fn cycle_ranks(g: &EdgeOrderedGraph, c: &[usize; 4]) -> Option<[usize; 4]> {
    let mut r = [0; 4];
    for k in 0..4 {
        r[k] = g.rank(c[k], c[(k + 1) % 4])?;
    }
    Some(r)
}

/// A 4-cycle is a copy of `C_4^{1243}` exactly when its smallest and largest
/// edges are opposite (share no vertex).
pub fn is_c4_1243_cycle(g: &EdgeOrderedGraph, cycle: &[usize; 4]) -> bool {
    let Some(r) = cycle_ranks(g, cycle) else {
        return false;
    };
    let lo = (0..4).min_by_key(|&k| r[k]).unwrap();
    let hi = (0..4).max_by_key(|&k| r[k]).unwrap();
    (lo + 2) % 4 == hi
}

/// Maps `C_4^{1243}` (`a, b, c, d`) onto a host 4-cycle whose extreme edges are opposite.
pub fn c4_embedding_from_cycle(g: &EdgeOrderedGraph, cycle: &[usize; 4]) -> Option<Embedding> {
    if !is_c4_1243_cycle(g, cycle) {
        return None;
    }
    let r = cycle_ranks(g, cycle)?;
    let lo = (0..4).min_by_key(|&k| r[k]).unwrap();
    // Rotate so the smallest edge is c0c1 and the largest is c2c3.
    let c: Vec<usize> = (0..4).map(|k| cycle[(lo + k) % 4]).collect();
    let middle_first = g.rank(c[1], c[2])? < g.rank(c[3], c[0])?;
    let vertex_map = if middle_first {
        vec![c[0], c[1], c[2], c[3]]
    } else {
        vec![c[1], c[0], c[3], c[2]]
    };
    Some(Embedding { vertex_map })
}

/// For each vertex `u`, its neighbours ordered by the rank of the edge to `u`.
pub fn neighbor_orders(g: &EdgeOrderedGraph) -> Vec<LinearOrder> {
    (0..g.num_vertices())
        .map(|u| {
            let mut nb: Vec<usize> = g.neighbors(u).collect();
            nb.sort_unstable_by_key(|&x| g.rank(u, x));
            LinearOrder::from_ids(nb.into_iter().map(|x| x as u32)).expect("simple graph")
        })
        .collect()
}

/// Sound but incomplete detector for `C_4^{1243}`.
///
/// Looks for vertices `u ≠ v` whose neighbour orders share three vertices
/// `x1, x2, x3` in the same order. Among the three comparisons of `ux_k`
/// against `vx_k` two agree; for the first such `(i, j)` the cycle
/// `u x_i v x_j` has its smallest and largest edges opposite.
pub fn find_c4_fast(host: &EdgeOrderedGraph) -> Option<Embedding> {
    let orders = neighbor_orders(host);
    let n = host.num_vertices();
    for u in 0..n {
        if orders[u].len() < 3 {
            continue;
        }
        for v in u + 1..n {
            let Some((x1, x2, x3)) = common_triple_same_order(&orders[u], &orders[v]) else {
                continue;
            };
            let xs = [x1, x2, x3].map(|Symbol(x)| x as usize);
            let u_later = xs.map(|x| host.rank(u, x) > host.rank(v, x));
            let (i, j) = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .find(|&(i, j)| u_later[i] == u_later[j])
                .expect("pigeonhole over three comparisons");
            let emb = c4_embedding_from_cycle(host, &[u, xs[i], v, xs[j]]);
            debug_assert!(emb.is_some());
            if emb.is_some() {
                return emb;
            }
        }
    }
    None
}
