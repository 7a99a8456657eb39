//! `Ex(n, A)`: the largest weight of an `n×n` matrix avoiding `A`.
//!
//! Cells are decided in row-major order. A copy of `A` first appearing when a
//! cell is set to 1 must map the last 1-entry of `A` to that cell, so only the
//! pinned containment test is needed. The bound on a branch uses exact values
//! for fewer rows: the rows still to be filled avoid `A` on their own.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{contains_pattern, contains_pattern_at, ZeroOneMatrix};
use crate::edge_ordered::SearchBudget;
use crate::error::{Error, Result};

/// Largest `n` for which [`brute_force_ex`] is guaranteed to finish.
pub const MATRIX_EX_EXACT_CAP: usize = 5;
/// Largest `n` accepted by [`ex_search`].
pub const MATRIX_EX_CAP: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct MatrixExSearch {
    pub n: usize,
    pub value: usize,
    /// False for heuristic runs and for exact runs that hit their budget; the
    /// value is then a lower bound.
    pub exact: bool,
    pub witness: Vec<String>,
}

struct Shared<'a> {
    a: &'a ZeroOneMatrix,
    rows: usize,
    n: usize,
    // rect[j]: upper bound on the weight of j avoiding rows, j < rows
    rect: &'a [usize],
    best: AtomicUsize,
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    exhausted: AtomicBool,
}

struct Shard {
    m: ZeroOneMatrix,
    best: usize,
    best_m: ZeroOneMatrix,
    nodes: u64,
}

impl Shared<'_> {
    fn bound(&self, r: usize, c: usize, w: usize, w_row_start: usize) -> usize {
        let below = self.rect[self.rows - 1 - r];
        let from_row = if r == 0 {
            usize::MAX
        } else {
            w_row_start + self.rect[self.rows - r]
        };
        (w + (self.n - c) + below).min(from_row)
    }

    fn out_of_budget(&self, sh: &Shard) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return true;
        }
        let hit = self.max_nodes.is_some_and(|m| sh.nodes >= m)
            || (sh.nodes % 4096 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d));
        if hit {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        hit
    }

    fn dfs(&self, sh: &mut Shard, k: usize, w: usize, w_row_start: usize) {
        sh.nodes += 1;
        if w > sh.best {
            sh.best = w;
            sh.best_m = sh.m.clone();
            self.best.fetch_max(w, Ordering::Relaxed);
        }
        if k == self.rows * self.n || self.out_of_budget(sh) {
            return;
        }
        let (r, c) = (k / self.n, k % self.n);
        let w_row_start = if c == 0 { w } else { w_row_start };
        let bound = self.bound(r, c, w, w_row_start);
        // Strict against the shared value so each shard still finds its own
        // optimum whenever that optimum is the global one.
        if bound <= sh.best || bound < self.best.load(Ordering::Relaxed) {
            return;
        }
        sh.m.set(r, c, true);
        if contains_pattern_at(&sh.m, self.a, (r, c)).is_none() {
            self.dfs(sh, k + 1, w + 1, w_row_start);
        }
        sh.m.set(r, c, false);
        self.dfs(sh, k + 1, w, w_row_start);
    }
}

/// Exact maximum weight of a `rows×n` matrix avoiding `a`, sharded over the
/// first row. Returns (value, witness, finished).
fn rect_search(
    a: &ZeroOneMatrix,
    rows: usize,
    n: usize,
    rect: &[usize],
    budget: SearchBudget,
) -> (usize, ZeroOneMatrix, bool) {
    let shared = Shared {
        a,
        rows,
        n,
        rect,
        best: AtomicUsize::new(0),
        deadline: budget.time.map(|t| Instant::now() + t),
        max_nodes: budget.max_nodes,
        exhausted: AtomicBool::new(false),
    };
    let shards: Vec<Shard> = (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let mut m = ZeroOneMatrix::zeros(rows, n);
            for j in 0..n {
                m.set(0, j, mask >> j & 1 == 1);
            }
            if contains_pattern(&m, a).is_some() {
                return None;
            }
            let w = mask.count_ones() as usize;
            let mut sh = Shard {
                best_m: m.clone(),
                m,
                best: w,
                nodes: 0,
            };
            shared.best.fetch_max(w, Ordering::Relaxed);
            if rows > 1 {
                shared.dfs(&mut sh, n, w, w);
            }
            Some(sh)
        })
        .collect();
    // Shards come back in mask order; the first one reaching the maximum wins.
    let best = shards.iter().map(|s| s.best).max().unwrap_or(0);
    let witness = shards
        .into_iter()
        .find(|s| s.best == best)
        .map_or_else(|| ZeroOneMatrix::zeros(rows, n), |s| s.best_m);
    (best, witness, !shared.exhausted.load(Ordering::Relaxed))
}

fn witness_rows(m: &ZeroOneMatrix) -> Vec<String> {
    m.to_string().lines().map(str::to_owned).collect()
}

/// Branch-and-bound `Ex(n, a)` for `n ≤ 6` within `budget`.
pub fn ex_search(n: usize, a: &ZeroOneMatrix, budget: SearchBudget) -> Result<MatrixExSearch> {
    if n > MATRIX_EX_CAP {
        return Err(Error::SearchTooLarge {
            n,
            cap: MATRIX_EX_CAP,
        });
    }
    if a.weight() == 0 {
        // Every large enough matrix contains an all-zero pattern.
        let value = if a.rows() <= n && a.cols() <= n {
            0
        } else {
            n * n
        };
        let mut m = ZeroOneMatrix::zeros(n, n);
        if value > 0 {
            (0..n).for_each(|i| (0..n).for_each(|j| m.set(i, j, true)));
        }
        return Ok(MatrixExSearch {
            n,
            value,
            exact: true,
            witness: witness_rows(&m),
        });
    }
    if n == 0 {
        return Ok(MatrixExSearch {
            n,
            value: 0,
            exact: true,
            witness: Vec::new(),
        });
    }
    let mut rect = vec![0usize];
    let mut exact = true;
    let mut last = (0, ZeroOneMatrix::zeros(0, n));
    for rows in 1..=n {
        let (value, witness, finished) = rect_search(a, rows, n, &rect, budget);
        exact &= finished;
        // An unfinished value is only a lower bound; fall back to the trivial bound.
        rect.push(if finished { value } else { rows * n });
        last = (value, witness);
    }
    Ok(MatrixExSearch {
        n,
        value: last.0,
        exact,
        witness: witness_rows(&last.1),
    })
}

/// Exact `Ex(n, a)` for `n ≤ 5`.
pub fn brute_force_ex(n: usize, a: &ZeroOneMatrix) -> Result<usize> {
    if n > MATRIX_EX_EXACT_CAP {
        return Err(Error::SearchTooLarge {
            n,
            cap: MATRIX_EX_EXACT_CAP,
        });
    }
    Ok(ex_search(n, a, SearchBudget::unlimited())?.value)
}

/// Lower bound on `Ex(n, a)` from randomized greedy fills: cells are tried in
/// a shuffled order and kept whenever the pattern stays absent.
pub fn ex_heuristic(n: usize, a: &ZeroOneMatrix, restarts: usize, seed: u64) -> MatrixExSearch {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut best = ZeroOneMatrix::zeros(n, n);
    for _ in 0..restarts.max(1) {
        cells.shuffle(&mut rng);
        let mut m = ZeroOneMatrix::zeros(n, n);
        for &(i, j) in &cells {
            m.set(i, j, true);
            if contains_pattern(&m, a).is_some() {
                m.set(i, j, false);
            }
        }
        if m.weight() > best.weight() {
            best = m;
        }
    }
    MatrixExSearch {
        n,
        value: best.weight(),
        exact: false,
        witness: witness_rows(&best),
    }
}

/// A random `rows×cols` matrix avoiding `a`: cells are visited in shuffled
/// order and each is tried with probability `density`, kept if `a` stays absent.
pub fn random_avoider(
    rows: usize,
    cols: usize,
    a: &ZeroOneMatrix,
    density: f64,
    seed: u64,
) -> ZeroOneMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .collect();
    cells.shuffle(&mut rng);
    let mut m = ZeroOneMatrix::zeros(rows, cols);
    for (i, j) in cells {
        if rng.gen_bool(density) {
            m.set(i, j, true);
            if contains_pattern(&m, a).is_some() {
                m.set(i, j, false);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::super::{hat, s_t};
    use super::*;

    /// Max weight over all n×n matrices, using the unpinned containment test.
    fn exhaustive(n: usize, a: &ZeroOneMatrix) -> usize {
        (0u32..1 << (n * n))
            .filter_map(|mask| {
                let mut m = ZeroOneMatrix::zeros(n, n);
                for k in 0..n * n {
                    m.set(k / n, k % n, mask >> k & 1 == 1);
                }
                contains_pattern(&m, a).is_none().then_some(m.weight())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn matches_exhaustive_up_to_4() {
        let patterns = [
            hat(),
            s_t(1).unwrap(),
            s_t(2).unwrap(),
            ZeroOneMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap(),
            ZeroOneMatrix::from_rows(&[[1, 0], [0, 1]]).unwrap(),
            ZeroOneMatrix::from_rows(&[[1]]).unwrap(),
        ];
        for a in &patterns {
            for n in 0..=4 {
                assert_eq!(
                    brute_force_ex(n, a).unwrap(),
                    exhaustive(n, a),
                    "n = {n}, {a:?}"
                );
            }
        }
    }

    #[test]
    fn witness_avoids_and_has_the_weight() {
        let a = hat();
        let r = ex_search(4, &a, SearchBudget::unlimited()).unwrap();
        let rows: Vec<Vec<u8>> = r
            .witness
            .iter()
            .map(|s| s.bytes().map(|b| b - b'0').collect())
            .collect();
        let m = ZeroOneMatrix::from_rows(&rows).unwrap();
        assert!(r.exact);
        assert_eq!(m.weight(), r.value);
        assert!(contains_pattern(&m, &a).is_none());
    }

    #[test]
    fn cap_and_degenerate_patterns() {
        assert!(matches!(
            brute_force_ex(6, &hat()),
            Err(Error::SearchTooLarge { .. })
        ));
        assert!(matches!(
            ex_search(7, &hat(), SearchBudget::unlimited()),
            Err(Error::SearchTooLarge { .. })
        ));
        assert_eq!(brute_force_ex(1, &hat()).unwrap(), 1);
        assert_eq!(brute_force_ex(3, &ZeroOneMatrix::zeros(2, 2)).unwrap(), 0);
        assert_eq!(brute_force_ex(1, &ZeroOneMatrix::zeros(2, 2)).unwrap(), 1);
    }

    #[test]
    fn heuristic_is_a_lower_bound() {
        let a = hat();
        for n in 2..=4 {
            let h = ex_heuristic(n, &a, 8, 7);
            assert!(!h.exact);
            assert!(h.value <= brute_force_ex(n, &a).unwrap());
        }
        assert_eq!(
            ex_heuristic(4, &a, 5, 1).witness,
            ex_heuristic(4, &a, 5, 1).witness
        );
    }

    #[test]
    fn random_avoiders_avoid() {
        let a = s_t(2).unwrap();
        for seed in 0..20 {
            let m = random_avoider(6, 6, &a, 0.8, seed);
            assert!(contains_pattern(&m, &a).is_none());
            assert_eq!(m, random_avoider(6, 6, &a, 0.8, seed));
        }
    }
}
