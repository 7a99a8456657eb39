use std::fmt;

use super::{LinearOrder, OrderFamily, Symbol};
use crate::error::{Error, Result};

/// A cyclic order on distinct symbols, stored in its lexicographically minimal
/// rotation (which, for distinct entries, is the rotation starting at the
/// smallest symbol).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrder {
    seq: Vec<Symbol>,
}

impl CyclicOrder {
    pub fn new(seq: Vec<Symbol>) -> Result<Self> {
        // Reuse the linear validation for the distinctness check.
        LinearOrder::new(seq.clone())?;
        let start = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, s)| *s)
            .map_or(0, |(k, _)| k);
        let mut seq = seq;
        seq.rotate_left(start);
        Ok(CyclicOrder { seq })
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Result<Self> {
        Self::new(ids.into_iter().map(Symbol).collect())
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

    /// The rotation beginning at `start`.
    pub fn linearize(&self, start: Symbol) -> Result<LinearOrder> {
        let k = self
            .seq
            .iter()
            .position(|&s| s == start)
            .ok_or(Error::MissingStart(start))?;
        let mut seq = self.seq.clone();
        seq.rotate_left(k);
        Ok(LinearOrder::from_valid(seq))
    }

    /// The canonical linearization: start at the smallest symbol.
    pub fn canonical_linear(&self) -> LinearOrder {
        LinearOrder::from_valid(self.seq.clone())
    }

    /// Restriction to the symbols accepted by `keep`, still cyclic.
    fn restrict<F: FnMut(&Symbol) -> bool>(&self, keep: F) -> Vec<Symbol> {
        self.seq.iter().copied().filter(keep).collect()
    }
}

impl fmt::Debug for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.seq.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Common elements of the two cyclic orders appear in reverse cyclic order.
pub fn is_cyclic_intersection_reverse(c1: &CyclicOrder, c2: &CyclicOrder) -> bool {
    let l1 = c1.canonical_linear();
    let l2 = c2.canonical_linear();
    let r1 = c1.restrict(|s| l2.contains(*s));
    let mut r2 = c2.restrict(|s| l1.contains(*s));
    if r1.len() <= 2 {
        return true;
    }
    r2.reverse();
    // Compare as cyclic sequences: rotate r2 to start where r1 starts.
    let k = r2.iter().position(|&s| s == r1[0]).expect("same support");
    r2.rotate_left(k);
    r1 == r2
}

/// A family of cyclic orders over a symbol universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFamily {
    universe: usize,
    orders: Vec<CyclicOrder>,
}

impl CyclicFamily {
    pub fn new(universe: usize, orders: Vec<CyclicOrder>) -> Result<Self> {
        for o in &orders {
            if let Some(&s) = o.seq.iter().find(|s| s.index() >= universe) {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    universe,
                });
            }
        }
        Ok(CyclicFamily { universe, orders })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn orders(&self) -> &[CyclicOrder] {
        &self.orders
    }

    pub fn is_pairwise_intersection_reverse(&self) -> bool {
        let n = self.orders.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| is_cyclic_intersection_reverse(&self.orders[i], &self.orders[j]))
        })
    }
}

/// Linearizes every cyclic order at its smallest symbol.
pub fn cyclic_family_to_linear(family: &CyclicFamily) -> OrderFamily {
    OrderFamily::from_valid_parts(
        family.universe,
        family
            .orders
            .iter()
            .map(CyclicOrder::canonical_linear)
            .collect(),
    )
}
