//! Zero-one matrices and forbidden-submatrix containment.
//!
//! `M` contains `A` when deleting rows and columns of `M` and turning some
//! 1-entries into 0-entries yields `A`. Indices are 0-based internally;
//! [`MatrixEmbedding::one_based`] gives the 1-based form used in reports.

mod connect;
mod extremal;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edge_ordered::EdgeOrderedGraph;
use crate::error::{Error, Result};

pub use connect::{connect_hypotheses, verify_connect, ConnectHypotheses, ConnectVerdict};
pub use extremal::{
    brute_force_ex, ex_heuristic, ex_search, random_avoider, MatrixExSearch, MATRIX_EX_CAP,
    MATRIX_EX_EXACT_CAP,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZeroOneMatrix {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    /// Builds a matrix from rows of 0/1 values; rows must have equal length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => {
                        return Err(Error::InvalidMatrix(format!(
                            "entry ({}, {}) is {b}",
                            i + 1,
                            j + 1
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.cols + j] = v;
    }

    /// Number of 1-entries.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// 1-entries in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| {
            (0..self.cols)
                .filter(move |&j| self.get(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j) in self.ones() {
            t.set(j, i, true);
        }
        t
    }

    /// The submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                s.set(a, b, self.get(i, j));
            }
        }
        s
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZeroOneMatrix({}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str(if i == 0 { ": " } else { "/" })?;
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        write!(f, ")")
    }
}

/// Selected host rows and columns, both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEmbedding {
    pub row_idx: Vec<usize>,
    pub col_idx: Vec<usize>,
}

impl MatrixEmbedding {
    pub fn is_valid(&self, host: &ZeroOneMatrix, pattern: &ZeroOneMatrix) -> bool {
        let increasing = |v: &[usize], bound: usize| {
            v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| x < bound)
        };
        self.row_idx.len() == pattern.rows()
            && self.col_idx.len() == pattern.cols()
            && increasing(&self.row_idx, host.rows())
            && increasing(&self.col_idx, host.cols())
            && pattern
                .ones()
                .all(|(i, j)| host.get(self.row_idx[i], self.col_idx[j]))
    }

    pub fn one_based(&self) -> MatrixEmbedding {
        MatrixEmbedding {
            row_idx: self.row_idx.iter().map(|i| i + 1).collect(),
            col_idx: self.col_idx.iter().map(|j| j + 1).collect(),
        }
    }
}

/// Leftmost columns for pattern columns `from..to`, each strictly after
/// `after`, given the host rows chosen for pattern rows `0..rows.len()`.
/// Greedy leftmost placement is optimal, so `None` means no placement exists.
fn place_columns(
    m: &ZeroOneMatrix,
    a: &ZeroOneMatrix,
    rows: &[usize],
    from: usize,
    to: usize,
    mut after: Option<usize>,
    out: &mut Vec<usize>,
) -> bool {
    for pj in from..to {
        let start = after.map_or(0, |c| c + 1);
        let found = (start..m.cols()).find(|&hj| {
            rows.iter()
                .enumerate()
                .all(|(pi, &hi)| !a.get(pi, pj) || m.get(hi, hj))
        });
        match found {
            Some(hj) => {
                out.push(hj);
                after = Some(hj);
            }
            None => return false,
        }
    }
    true
}

/// Containment search, optionally with one pattern cell pinned to a host cell.
struct RowSearch<'a> {
    m: &'a ZeroOneMatrix,
    a: &'a ZeroOneMatrix,
    pin: Option<((usize, usize), (usize, usize))>,
}

impl RowSearch<'_> {
    fn columns(&self, rows: &[usize]) -> Option<Vec<usize>> {
        let mut cols = Vec::with_capacity(self.a.cols());
        match self.pin {
            None => place_columns(self.m, self.a, rows, 0, self.a.cols(), None, &mut cols)
                .then_some(cols),
            Some(((pi, pj), (hi, hj))) => {
                if rows.get(pi).is_some_and(|&r| r != hi) {
                    return None;
                }
                if !place_columns(self.m, self.a, rows, 0, pj, None, &mut cols) {
                    return None;
                }
                if cols.last().is_some_and(|&c| c >= hj) {
                    return None;
                }
                let ok = rows
                    .iter()
                    .enumerate()
                    .all(|(r, &h)| !self.a.get(r, pj) || self.m.get(h, hj));
                if !ok {
                    return None;
                }
                cols.push(hj);
                place_columns(
                    self.m,
                    self.a,
                    rows,
                    pj + 1,
                    self.a.cols(),
                    Some(hj),
                    &mut cols,
                )
                .then_some(cols)
            }
        }
    }

    fn extend(&self, rows: &mut Vec<usize>) -> Option<MatrixEmbedding> {
        // The greedy placement for a prefix of pattern rows is a relaxation.
        let cols = self.columns(rows)?;
        let t = rows.len();
        if t == self.a.rows() {
            return Some(MatrixEmbedding {
                row_idx: rows.clone(),
                col_idx: cols,
            });
        }
        let lo = rows.last().map_or(0, |&r| r + 1);
        let hi = self.m.rows() - (self.a.rows() - t - 1);
        let candidates: Vec<usize> = match self.pin {
            Some(((pi, _), (hr, _))) if pi == t => (lo..hi).filter(|&r| r == hr).collect(),
            Some(((pi, _), (hr, _))) if t < pi => (lo..hi.min(hr)).collect(),
            Some(((_, _), (hr, _))) => (lo.max(hr + 1)..hi).collect(),
            None => (lo..hi).collect(),
        };
        for r in candidates {
            rows.push(r);
            if let Some(e) = self.extend(rows) {
                return Some(e);
            }
            rows.pop();
        }
        None
    }
}

/// Finds an occurrence of `a` in `m`.
pub fn contains_pattern(m: &ZeroOneMatrix, a: &ZeroOneMatrix) -> Option<MatrixEmbedding> {
    if a.rows() > m.rows() || a.cols() > m.cols() {
        return None;
    }
    RowSearch { m, a, pin: None }.extend(&mut Vec::with_capacity(a.rows()))
}

/// Occurrences of `a` in `m` that map the last 1-entry of `a` (row-major) to
/// the host cell `cell`.
pub fn contains_pattern_at(
    m: &ZeroOneMatrix,
    a: &ZeroOneMatrix,
    cell: (usize, usize),
) -> Option<MatrixEmbedding> {
    let last = a.ones().last()?;
    if a.rows() > m.rows() || a.cols() > m.cols() || !m.get(cell.0, cell.1) {
        return None;
    }
    // Enough room around the pinned cell for the remaining rows and columns.
    if cell.0 < last.0
        || m.rows() - cell.0 < a.rows() - last.0
        || cell.1 < last.1
        || m.cols() - cell.1 < a.cols() - last.1
    {
        return None;
    }
    RowSearch {
        m,
        a,
        pin: Some((last, cell)),
    }
    .extend(&mut Vec::with_capacity(a.rows()))
}

/// The 2×3 hat pattern.
pub fn hat() -> ZeroOneMatrix {
    ZeroOneMatrix::from_rows(&[[0, 1, 0], [1, 0, 1]]).expect("fixed pattern")
}

/// The 3×2t matrix `S_t`: alternating top and bottom rows, middle row supported
/// on the first and last columns.
pub fn s_t(t: usize) -> Result<ZeroOneMatrix> {
    if t < 1 {
        return Err(Error::InvalidMatrix("S_t needs t >= 1".into()));
    }
    let mut m = ZeroOneMatrix::zeros(3, 2 * t);
    for j in 0..2 * t {
        m.set(0, j, j % 2 == 0);
        m.set(2, j, j % 2 == 1);
    }
    m.set(1, 0, true);
    m.set(1, 2 * t - 1, true);
    Ok(m)
}

/// The matrices `Z` and `Z'`, whose graphs are isomorphic as edge-ordered graphs.
pub fn z_examples() -> (ZeroOneMatrix, ZeroOneMatrix) {
    let z = ZeroOneMatrix::from_rows(&[[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1]])
        .expect("fixed pattern");
    let z2 = ZeroOneMatrix::from_rows(&[[0, 1, 0, 1], [1, 0, 1, 0], [1, 0, 0, 1]])
        .expect("fixed pattern");
    (z, z2)
}

/// The bipartite graph of `a` with edges ordered by column, then by row.
/// Row `i` is vertex `i` and column `j` is vertex `rows + j`; zero rows and
/// columns stay as isolated vertices.
pub fn g_of(a: &ZeroOneMatrix) -> EdgeOrderedGraph {
    let r = a.rows();
    let edges: Vec<(usize, usize)> = (0..a.cols())
        .flat_map(|j| {
            (0..r)
                .filter(move |&i| a.get(i, j))
                .map(move |i| (i, r + j))
        })
        .collect();
    EdgeOrderedGraph::new(r + a.cols(), &edges).expect("distinct matrix cells")
}
