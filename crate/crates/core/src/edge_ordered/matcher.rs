use super::{EdgeOrderedGraph, Embedding};

const UNSET: usize = usize::MAX;

/// Backtracking subgraph matcher. Pattern vertices are placed one at a time in
/// a connectivity-first order; every completed pattern edge is checked for
/// existence in the host and, when `ordered`, for rank consistency against all
/// previously completed edges.
pub(super) struct Matcher<'a> {
    host: &'a EdgeOrderedGraph,
    pattern: &'a EdgeOrderedGraph,
    ordered: bool,
}

struct State {
    assign: Vec<usize>,
    used: Vec<bool>,
    // (pattern rank, host rank) of every completed edge
    mapped: Vec<(usize, usize)>,
}

impl<'a> Matcher<'a> {
    pub(super) fn new(
        host: &'a EdgeOrderedGraph,
        pattern: &'a EdgeOrderedGraph,
        ordered: bool,
    ) -> Self {
        Matcher {
            host,
            pattern,
            ordered,
        }
    }

    /// Searches for an embedding extending the forced assignments `pre`.
    pub(super) fn find(&self, pre: &[(usize, usize)]) -> Option<Embedding> {
        let (p, h) = (self.pattern, self.host);
        if p.num_vertices() > h.num_vertices() || p.edge_count() > h.edge_count() {
            return None;
        }
        let order = self.placement_order(pre);
        let mut state = State {
            assign: vec![UNSET; p.num_vertices()],
            used: vec![false; h.num_vertices()],
            mapped: Vec::with_capacity(p.edge_count()),
        };
        if self.extend(&order, 0, pre, &mut state) {
            Some(Embedding {
                vertex_map: state.assign,
            })
        } else {
            None
        }
    }

    fn placement_order(&self, pre: &[(usize, usize)]) -> Vec<usize> {
        let p = self.pattern;
        let n = p.num_vertices();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &(pv, _) in pre {
            if !placed[pv] {
                placed[pv] = true;
                order.push(pv);
            }
        }
        let mut links = vec![0usize; n];
        for &v in &order {
            for w in p.neighbors(v) {
                links[w] += 1;
            }
        }
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (links[v], p.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            placed[next] = true;
            order.push(next);
            for w in p.neighbors(next) {
                links[w] += 1;
            }
        }
        order
    }

    fn extend(&self, order: &[usize], t: usize, pre: &[(usize, usize)], st: &mut State) -> bool {
        if t == order.len() {
            return true;
        }
        let (p, h) = (self.pattern, self.host);
        let pv = order[t];
        let anchor = p.neighbors(pv).find(|&w| st.assign[w] != UNSET);
        let forced = pre.iter().find(|&&(v, _)| v == pv).map(|&(_, hv)| hv);

        let candidates: Box<dyn Iterator<Item = usize>> = match (forced, anchor) {
            (Some(hv), _) => Box::new(std::iter::once(hv)),
            (None, Some(w)) => Box::new(h.neighbors(st.assign[w])),
            (None, None) => Box::new(0..h.num_vertices()),
        };

        for hv in candidates {
            if hv >= h.num_vertices() || st.used[hv] || h.degree(hv) < p.degree(pv) {
                continue;
            }
            let mark = st.mapped.len();
            if self.try_place(pv, hv, st) {
                st.assign[pv] = hv;
                st.used[hv] = true;
                if self.extend(order, t + 1, pre, st) {
                    return true;
                }
                st.assign[pv] = UNSET;
                st.used[hv] = false;
            }
            st.mapped.truncate(mark);
        }
        false
    }

    /// Records the edges completed by `pv ↦ hv`; false on any inconsistency.
    fn try_place(&self, pv: usize, hv: usize, st: &mut State) -> bool {
        let (p, h) = (self.pattern, self.host);
        for w in p.neighbors(pv) {
            let hw = st.assign[w];
            if hw == UNSET {
                continue;
            }
            let Some(hr) = h.rank(hv, hw) else {
                return false;
            };
            let pr = p.rank(pv, w).expect("pattern edge");
            if self.ordered && st.mapped.iter().any(|&(pr2, hr2)| (pr < pr2) != (hr < hr2)) {
                return false;
            }
            st.mapped.push((pr, hr));
        }
        true
    }
}
