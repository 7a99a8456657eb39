use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense symbol id into the universe `[0, n')` of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub u32);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Symbol {
    fn from(id: u32) -> Self {
        Symbol(id)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A non-repeating sequence of symbols.
///
/// Alongside the sequence we keep a symbol-sorted `(symbol, position)` index so
/// that position lookups are logarithmic and intersections of two orders are a
/// linear merge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    seq: Vec<Symbol>,
    index: Vec<(Symbol, u32)>,
}

impl LinearOrder {
    pub fn new(seq: Vec<Symbol>) -> Result<Self> {
        let mut index: Vec<(Symbol, u32)> = seq
            .iter()
            .enumerate()
            .map(|(pos, &s)| (s, pos as u32))
            .collect();
        index.sort_unstable();
        if let Some(w) = index.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::RepeatedSymbol(w[0].0));
        }
        Ok(LinearOrder { seq, index })
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Result<Self> {
        Self::new(ids.into_iter().map(Symbol).collect())
    }

    pub fn empty() -> Self {
        LinearOrder {
            seq: Vec::new(),
            index: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.seq
    }

    pub fn ids(&self) -> Vec<u32> {
        self.seq.iter().map(|s| s.0).collect()
    }

    pub fn position(&self, s: Symbol) -> Option<usize> {
        self.index
            .binary_search_by_key(&s, |&(sym, _)| sym)
            .ok()
            .map(|k| self.index[k].1 as usize)
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.position(s).is_some()
    }

    /// Largest symbol id present, if any.
    pub fn max_symbol(&self) -> Option<Symbol> {
        self.index.last().map(|&(s, _)| s)
    }

    /// Symbols in increasing id order.
    pub fn sorted_symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.index.iter().map(|&(s, _)| s)
    }

    /// Common symbols with their positions in `self` and `other`, sorted by symbol.
    pub fn common_positions(&self, other: &LinearOrder) -> Vec<(Symbol, u32, u32)> {
        let (mut p, mut q) = (0, 0);
        let mut out = Vec::new();
        while p < self.index.len() && q < other.index.len() {
            let (a, pa) = self.index[p];
            let (b, pb) = other.index[q];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    out.push((a, pa, pb));
                    p += 1;
                    q += 1;
                }
            }
        }
        out
    }

    /// `|self ∩ other|` as symbol sets.
    pub fn common_count(&self, other: &LinearOrder) -> usize {
        let (mut p, mut q, mut k) = (0, 0, 0);
        while p < self.index.len() && q < other.index.len() {
            match self.index[p].0.cmp(&other.index[q].0) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    k += 1;
                    p += 1;
                    q += 1;
                }
            }
        }
        k
    }

    /// Splits into the leading `⌈L/2⌉` and trailing `⌊L/2⌋` entries.
    pub fn split(&self) -> HalfSplit {
        let cut = self.seq.len().div_ceil(2);
        HalfSplit {
            first: Self::from_valid(self.seq[..cut].to_vec()),
            second: Self::from_valid(self.seq[cut..].to_vec()),
        }
    }

    /// Subsequence keeping only symbols accepted by `keep`.
    pub fn retain<F: FnMut(Symbol) -> bool>(&self, mut keep: F) -> LinearOrder {
        Self::from_valid(self.seq.iter().copied().filter(|&s| keep(s)).collect())
    }

    /// First `len` entries.
    pub fn prefix(&self, len: usize) -> LinearOrder {
        Self::from_valid(self.seq[..len.min(self.seq.len())].to_vec())
    }

    pub fn reversed(&self) -> LinearOrder {
        Self::from_valid(self.seq.iter().rev().copied().collect())
    }

    /// Applies a symbol relabeling; the map must be injective on the support.
    pub fn relabel<F: FnMut(Symbol) -> Symbol>(&self, f: F) -> Result<LinearOrder> {
        Self::new(self.seq.iter().copied().map(f).collect())
    }

    // Caller guarantees distinct entries (a subsequence of a valid order).
    pub(crate) fn from_valid(seq: Vec<Symbol>) -> Self {
        let mut index: Vec<(Symbol, u32)> = seq
            .iter()
            .enumerate()
            .map(|(pos, &s)| (s, pos as u32))
            .collect();
        index.sort_unstable();
        debug_assert!(index.windows(2).all(|w| w[0].0 != w[1].0));
        LinearOrder { seq, index }
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.seq.iter().map(|s| s.0))
            .finish()
    }
}

/// The two halves of an order; their concatenation is the source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSplit {
    pub first: LinearOrder,
    pub second: LinearOrder,
}

impl HalfSplit {
    /// Half `0` is `first`, half `1` is `second`.
    pub fn half(&self, eps: usize) -> &LinearOrder {
        if eps == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn concat(&self) -> LinearOrder {
        let mut seq = self.first.as_slice().to_vec();
        seq.extend_from_slice(self.second.as_slice());
        LinearOrder::from_valid(seq)
    }
}
