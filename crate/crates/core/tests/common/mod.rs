//! Independent brute-force oracles. None of these call into the library's
//! algorithms; they work from the raw definitions on plain vectors.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(rel)
}

/// Sign of `a` before `b` in `seq`, zero if either is missing.
pub fn f(seq: &[u32], a: u32, b: u32) -> i64 {
    let pa = seq.iter().position(|&x| x == a);
    let pb = seq.iter().position(|&x| x == b);
    match (pa, pb) {
        (Some(x), Some(y)) if x < y => 1,
        (Some(_), Some(_)) => -1,
        _ => 0,
    }
}

pub fn halves(seq: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let cut = seq.len().div_ceil(2);
    (seq[..cut].to_vec(), seq[cut..].to_vec())
}

/// The definitional quadruple loop over `i ≠ j`, `ε`, `a ≠ b`.
pub fn s_quadruple_loop(orders: &[Vec<u32>], universe: u32) -> i64 {
    let split: Vec<(Vec<u32>, Vec<u32>)> = orders.iter().map(|o| halves(o)).collect();
    let mut s = 0;
    for i in 0..orders.len() {
        for j in 0..orders.len() {
            if i == j {
                continue;
            }
            for eps in 0..2 {
                let (bi, bj) = if eps == 0 {
                    (&split[i].0, &split[j].0)
                } else {
                    (&split[i].1, &split[j].1)
                };
                for a in 0..universe {
                    for b in 0..universe {
                        if a != b {
                            s += f(bi, a, b) * f(bj, a, b);
                        }
                    }
                }
            }
        }
    }
    s
}

pub fn common(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().copied().filter(|s| y.contains(s)).collect()
}

pub fn f_sum_naive(x: &[u32], y: &[u32], universe: u32) -> i64 {
    let mut s = 0;
    for a in 0..universe {
        for b in 0..universe {
            if a != b {
                s += f(x, a, b) * f(y, a, b);
            }
        }
    }
    s
}

pub fn int_rev_naive(x: &[u32], y: &[u32]) -> bool {
    let c = common(x, y);
    c.iter()
        .all(|&a| c.iter().all(|&b| a == b || f(x, a, b) * f(y, a, b) == -1))
}

/// Some three common symbols in the same order in both sequences.
pub fn same_order_triple_naive(x: &[u32], y: &[u32]) -> bool {
    let c = common(x, y);
    for &a in &c {
        for &b in &c {
            for &d in &c {
                if f(x, a, b) == 1 && f(x, b, d) == 1 && f(y, a, b) == 1 && f(y, b, d) == 1 {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether the common symbols can be 2-coloured with every colour class
/// pairwise reversed between the two sequences.
pub fn two_coloring_exists(x: &[u32], y: &[u32]) -> bool {
    let c = common(x, y);
    let k = c.len();
    (0u32..1 << k).any(|mask| {
        (0..k).all(|p| {
            (p + 1..k).all(|q| {
                (mask >> p & 1) != (mask >> q & 1) || f(x, c[p], c[q]) * f(y, c[p], c[q]) == -1
            })
        })
    })
}

pub fn is_valid_naive(orders: &[Vec<u32>]) -> bool {
    (0..orders.len())
        .all(|i| (i + 1..orders.len()).all(|j| !same_order_triple_naive(&orders[i], &orders[j])))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Matrix containment by trying every row subset and column subset.
pub fn matrix_contains_naive(host: &[Vec<u8>], pattern: &[Vec<u8>]) -> bool {
    let (hr, pr) = (host.len(), pattern.len());
    let hc = host.first().map_or(0, Vec::len);
    let pc = pattern.first().map_or(0, Vec::len);
    if pr > hr || pc > hc {
        return false;
    }
    let col_sets = subsets(hc, pc);
    subsets(hr, pr).iter().any(|rs| {
        col_sets.iter().any(|cs| {
            (0..pr).all(|i| (0..pc).all(|j| pattern[i][j] == 0 || host[rs[i]][cs[j]] == 1))
        })
    })
}

/// Edge-ordered graph as `n` plus edges listed in increasing order.
#[derive(Clone, Debug)]
pub struct PlainOrdered {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl PlainOrdered {
    fn rank(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }
}

fn injections(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                if go(n, k, cur, used, f) {
                    return true;
                }
                cur.pop();
                used[v] = false;
            }
        }
        false
    }
    go(n, k, &mut Vec::new(), &mut vec![false; n], f)
}

/// Tries every injective vertex map; `ordered` also demands increasing ranks.
pub fn eo_contains_naive(host: &PlainOrdered, pattern: &PlainOrdered, ordered: bool) -> bool {
    if pattern.n > host.n {
        return false;
    }
    injections(host.n, pattern.n, &mut |map| {
        let mut prev = None;
        for &(u, v) in &pattern.edges {
            let Some(r) = host.rank(map[u], map[v]) else {
                return false;
            };
            if ordered {
                if prev.is_some_and(|p| p >= r) {
                    return false;
                }
                prev = Some(r);
            }
        }
        true
    })
}

pub fn c4_1243_plain() -> PlainOrdered {
    PlainOrdered {
        n: 4,
        edges: vec![(0, 1), (1, 2), (0, 3), (2, 3)],
    }
}

/// Exact ex_< by enumerating every edge set and every ordering of it.
pub fn ex_ordered_oracle(n: usize, pattern: &PlainOrdered) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut best = 0;
    for mask in 0u32..1 << pairs.len() {
        let set: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        if set.len() <= best {
            continue;
        }
        if any_permutation(&set, &mut |edges| {
            !eo_contains_naive(
                &PlainOrdered {
                    n,
                    edges: edges.to_vec(),
                },
                pattern,
                true,
            )
        }) {
            best = set.len();
        }
    }
    best
}

/// Calls `f` on permutations of `items` until it returns true.
pub fn any_permutation<T: Clone>(items: &[T], f: &mut dyn FnMut(&[T]) -> bool) -> bool {
    injections(items.len(), items.len(), &mut |p| {
        let perm: Vec<T> = p.iter().map(|&k| items[k].clone()).collect();
        f(&perm)
    })
}

/// Unordered ex(n, C4) by enumerating edge sets.
pub fn ex_c4_unordered_oracle(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let c4 = c4_1243_plain();
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| pairs[k])
                .collect();
            let g = PlainOrdered {
                n,
                edges: edges.clone(),
            };
            (!eo_contains_naive(&g, &c4, false)).then_some(edges.len())
        })
        .max()
        .unwrap_or(0)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Segments `pq` and `rs` meet at a single interior point of both.
pub fn segments_cross(p: (i64, i64), q: (i64, i64), r: (i64, i64), s: (i64, i64)) -> bool {
    let d1 = cross(p, q, r);
    let d2 = cross(p, q, s);
    let d3 = cross(r, s, p);
    let d4 = cross(r, s, q);
    d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 && (d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0)
}

/// Self-crossing 4-cycles by trying every 4-subset of vertices and each of
/// its three cyclic arrangements; returned as sorted vertex sets with the
/// arrangement index.
pub fn self_crossing_c4_oracle(
    points: &[(i64, i64)],
    edges: &[(usize, usize)],
) -> Vec<(Vec<usize>, usize)> {
    let has = |u: usize, v: usize| edges.contains(&(u, v)) || edges.contains(&(v, u));
    let mut out = Vec::new();
    for s in subsets(points.len(), 4) {
        let arrangements = [
            [s[0], s[1], s[2], s[3]],
            [s[0], s[1], s[3], s[2]],
            [s[0], s[2], s[1], s[3]],
        ];
        for (k, c) in arrangements.iter().enumerate() {
            if !(0..4).all(|t| has(c[t], c[(t + 1) % 4])) {
                continue;
            }
            let seg = |t: usize| (points[c[t]], points[c[(t + 1) % 4]]);
            let crosses = |a: usize, b: usize| {
                let (p, q) = seg(a);
                let (r, s) = seg(b);
                segments_cross(p, q, r, s)
            };
            if crosses(0, 2) || crosses(1, 3) {
                out.push((s.clone(), k));
            }
        }
    }
    out
}

/// Common neighbours of every vertex pair, from an adjacency matrix.
pub fn max_common_neighbours(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut best = 0;
    for u in 0..n {
        for v in u + 1..n {
            best = best.max((0..n).filter(|&w| adj[u][w] && adj[v][w]).count());
        }
    }
    best
}

fn cyclic_orientation(seq: &[u32], a: u32, b: u32, c: u32) -> bool {
    let p = |s| seq.iter().position(|&x| x == s).unwrap();
    let (x, y, z) = (p(a), p(b), p(c));
    (x < y && y < z) || (y < z && z < x) || (z < x && x < y)
}

/// Every common triple is oriented oppositely in the two cyclic sequences.
pub fn cyclic_int_rev_naive(x: &[u32], y: &[u32]) -> bool {
    let c = common(x, y);
    for &a in &c {
        for &b in &c {
            for &d in &c {
                if a != b
                    && b != d
                    && a != d
                    && cyclic_orientation(x, a, b, d) == cyclic_orientation(y, a, b, d)
                {
                    return false;
                }
            }
        }
    }
    true
}
