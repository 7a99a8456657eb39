//! Pairwise primitives on linear orders: the sign functions `f`, the
//! intersection-reverse test, same-order triple detection and the two-chain
//! split of a common symbol set.

use serde::{Deserialize, Serialize};

use super::{LinearOrder, Symbol};
use crate::error::{Error, Result};

/// `+1` if `a` precedes `b` in `order`, `-1` if `b` precedes `a`, `0` if either is absent.
pub fn f_single(order: &LinearOrder, a: Symbol, b: Symbol) -> Result<i8> {
    if a == b {
        return Err(Error::EqualSymbols(a));
    }
    Ok(sign_of(order, a, b))
}

/// Product of the two single-order signs.
pub fn f_pair(b1: &LinearOrder, b2: &LinearOrder, a: Symbol, b: Symbol) -> Result<i8> {
    if a == b {
        return Err(Error::EqualSymbols(a));
    }
    Ok(sign_of(b1, a, b) * sign_of(b2, a, b))
}

fn sign_of(order: &LinearOrder, a: Symbol, b: Symbol) -> i8 {
    match (order.position(a), order.position(b)) {
        (Some(pa), Some(pb)) if pa < pb => 1,
        (Some(_), Some(_)) => -1,
        _ => 0,
    }
}

/// Common symbols listed in `b2` order, paired with their `b1` positions.
fn positions_in_second_order(b1: &LinearOrder, b2: &LinearOrder) -> Vec<(Symbol, u32)> {
    let mut common = b1.common_positions(b2);
    common.sort_unstable_by_key(|&(_, _, q)| q);
    common.into_iter().map(|(s, p, _)| (s, p)).collect()
}

/// A pair `(a, b)` of common symbols with `a` before `b` in both orders, or
/// `None` when the orders are intersection-reverse.
pub fn intersection_reverse_witness(
    b1: &LinearOrder,
    b2: &LinearOrder,
) -> Option<(Symbol, Symbol)> {
    // Intersection-reverse iff the b1 positions, read in b2 order, strictly
    // decrease; any ascent between neighbours is a same-order pair.
    positions_in_second_order(b1, b2)
        .windows(2)
        .find(|w| w[0].1 < w[1].1)
        .map(|w| (w[0].0, w[1].0))
}

pub fn is_intersection_reverse(b1: &LinearOrder, b2: &LinearOrder) -> bool {
    intersection_reverse_witness(b1, b2).is_none()
}

/// Three common symbols appearing in the same relative order in both orders.
///
/// Reads the `b1` positions of the common symbols in `b2` order and looks for an
/// increasing subsequence of length three with prefix minima and suffix maxima.
pub fn common_triple_same_order(
    b1: &LinearOrder,
    b2: &LinearOrder,
) -> Option<(Symbol, Symbol, Symbol)> {
    let seq = positions_in_second_order(b1, b2);
    let m = seq.len();
    if m < 3 {
        return None;
    }
    let mut suffix_max = vec![0usize; m];
    suffix_max[m - 1] = m - 1;
    for k in (0..m - 1).rev() {
        let best = suffix_max[k + 1];
        suffix_max[k] = if seq[k].1 > seq[best].1 { k } else { best };
    }
    let mut prefix_min = 0usize;
    for mid in 1..m - 1 {
        let hi = suffix_max[mid + 1];
        if seq[prefix_min].1 < seq[mid].1 && seq[mid].1 < seq[hi].1 {
            return Some((seq[prefix_min].0, seq[mid].0, seq[hi].0));
        }
        if seq[mid].1 < seq[prefix_min].1 {
            prefix_min = mid;
        }
    }
    None
}

/// Partition of the common symbols of two orders into two sets, each of which
/// is fully reversed between the orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoChainDecomposition {
    pub t1: Vec<Symbol>,
    pub t2: Vec<Symbol>,
}

impl TwoChainDecomposition {
    /// Checks the partition and reversal invariants against the source orders.
    pub fn is_valid_for(&self, b1: &LinearOrder, b2: &LinearOrder) -> bool {
        let mut all: Vec<Symbol> = self.t1.iter().chain(&self.t2).copied().collect();
        all.sort_unstable();
        let mut common: Vec<Symbol> = b1.common_positions(b2).iter().map(|c| c.0).collect();
        common.sort_unstable();
        if all != common {
            return false;
        }
        let reversed = |set: &[Symbol]| {
            set.iter().enumerate().all(|(k, &x)| {
                set[k + 1..]
                    .iter()
                    .all(|&y| sign_of(b1, x, y) * sign_of(b2, x, y) == -1)
            })
        };
        reversed(&self.t1) && reversed(&self.t2)
    }
}

/// Splits the common symbols into the minimal elements of the "same order in
/// both" poset and the rest. Without a same-order triple the poset has height
/// at most two, so both parts are antichains.
pub fn two_chain_decomposition(
    b1: &LinearOrder,
    b2: &LinearOrder,
) -> Result<TwoChainDecomposition> {
    if let Some(t) = common_triple_same_order(b1, b2) {
        return Err(Error::SameOrderTriple(t));
    }
    let mut common = b1.common_positions(b2);
    common.sort_unstable_by_key(|&(_, p, _)| p);
    let (mut t1, mut t2) = (Vec::new(), Vec::new());
    let mut min_q = u32::MAX;
    for &(s, _, q) in &common {
        if q < min_q {
            t1.push(s);
            min_q = q;
        } else {
            t2.push(s);
        }
    }
    t1.sort_unstable();
    t2.sort_unstable();
    Ok(TwoChainDecomposition { t1, t2 })
}

/// Number of common symbol pairs appearing in opposite order in the two orders.
pub fn discordant_pairs(b1: &LinearOrder, b2: &LinearOrder) -> u64 {
    let mut seq: Vec<u32> = positions_in_second_order(b1, b2)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    // Pairs read in b2 order that are decreasing in b1 position.
    let mut buf = vec![0u32; seq.len()];
    count_inversions(&mut seq, &mut buf)
}

fn count_inversions(v: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = {
        let (l, r) = v.split_at_mut(mid);
        count_inversions(l, &mut buf[..mid]) + count_inversions(r, &mut buf[mid..])
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if v[i] <= v[j] {
            buf[k] = v[i];
            i += 1;
        } else {
            buf[k] = v[j];
            inv += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&buf[..n]);
    inv
}
