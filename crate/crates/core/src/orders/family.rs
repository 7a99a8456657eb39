use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{common_triple_same_order, HalfSplit, LinearOrder, Symbol};
use crate::error::{Error, Result};

/// Witness that orders `i` and `j` share the triple `a, b, c` in the same order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleWitness {
    pub i: usize,
    pub j: usize,
    pub a: Symbol,
    pub b: Symbol,
    pub c: Symbol,
}

impl fmt::Display for TripleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "orders {} and {} both contain {}, {}, {} in this order",
            self.i, self.j, self.a, self.b, self.c
        )
    }
}

/// A collection of linear orders over the symbol universe `[0, n')`.
///
/// The number of orders `n` and the universe size `n'` are tracked
/// independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFamily {
    universe: usize,
    orders: Vec<LinearOrder>,
}

impl OrderFamily {
    pub fn new(universe: usize, orders: Vec<LinearOrder>) -> Result<Self> {
        for o in &orders {
            if let Some(s) = o.max_symbol().filter(|s| s.index() >= universe) {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    universe,
                });
            }
        }
        Ok(OrderFamily { universe, orders })
    }

    pub fn from_ids(universe: usize, orders: Vec<Vec<u32>>) -> Result<Self> {
        let orders = orders
            .into_iter()
            .map(LinearOrder::from_ids)
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, orders)
    }

    pub(crate) fn from_valid_parts(universe: usize, orders: Vec<LinearOrder>) -> Self {
        debug_assert!(orders
            .iter()
            .all(|o| o.max_symbol().map_or(true, |s| s.index() < universe)));
        OrderFamily { universe, orders }
    }

    pub fn empty(universe: usize) -> Self {
        OrderFamily {
            universe,
            orders: Vec::new(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    /// Number of orders `n`.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn to_ids(&self) -> Vec<Vec<u32>> {
        self.orders.iter().map(LinearOrder::ids).collect()
    }

    /// `Σ |A^i|`.
    pub fn total_weight(&self) -> u64 {
        self.orders.iter().map(|o| o.len() as u64).sum()
    }

    pub fn splits(&self) -> Vec<HalfSplit> {
        self.orders.iter().map(LinearOrder::split).collect()
    }

    /// `d_a`: the number of orders containing each symbol.
    pub fn symbol_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.universe];
        for s in self.orders.iter().flat_map(|o| o.as_slice()) {
            deg[s.index()] += 1;
        }
        deg
    }

    /// One witness per unordered pair `{i, j}` that shares a same-order triple.
    /// Empty iff the family is valid.
    pub fn validate(&self) -> Vec<TripleWitness> {
        let n = self.orders.len();
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..n).filter_map(move |j| {
                    common_triple_same_order(&self.orders[i], &self.orders[j])
                        .map(|(a, b, c)| TripleWitness { i, j, a, b, c })
                })
            })
            .collect()
    }

    /// First violating pair, if any; cheaper than a full scan for valid checks.
    pub fn first_violation(&self) -> Option<TripleWitness> {
        let n = self.orders.len();
        (0..n).find_map(|i| {
            (i + 1..n).find_map(|j| {
                common_triple_same_order(&self.orders[i], &self.orders[j])
                    .map(|(a, b, c)| TripleWitness { i, j, a, b, c })
            })
        })
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn weight_ratio(&self) -> WeightRatio {
        WeightRatio {
            total: self.total_weight(),
            n: self.orders.len() as u64,
        }
    }
}

/// `Σ|A^i|` against `n^{3/2}`, compared exactly through squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRatio {
    pub total: u64,
    pub n: u64,
}

impl WeightRatio {
    /// Compares `Σ|A^i|` with `c · n^{3/2}` via `Σ² · den²` vs `num² · n³`.
    pub fn cmp_scaled(&self, c: Ratio<u64>) -> Ordering {
        let lhs = (self.total as u128).pow(2) * (*c.denom() as u128).pow(2);
        let rhs = (*c.numer() as u128).pow(2) * (self.n as u128).pow(3);
        lhs.cmp(&rhs)
    }

    /// `lo · n^{3/2} ≤ Σ|A^i| ≤ hi · n^{3/2}`, exactly.
    pub fn within(&self, lo: Ratio<u64>, hi: Ratio<u64>) -> bool {
        self.cmp_scaled(lo) != Ordering::Less && self.cmp_scaled(hi) != Ordering::Greater
    }

    /// Display-only floating value of `Σ|A^i| / n^{3/2}`.
    pub fn approx(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        self.total as f64 / (self.n as f64).powf(1.5)
    }
}
