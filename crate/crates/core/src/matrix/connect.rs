use serde::Serialize;

use super::{contains_pattern, g_of, hat, ZeroOneMatrix};
use crate::edge_ordered::contains;
use crate::error::{Error, Result};

/// The three conditions under which avoiding `A` transfers to avoiding `G(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectHypotheses {
    pub no_zero_column: bool,
    pub contains_hat: bool,
    pub consecutive_rows_share: bool,
    pub reasons: Vec<String>,
}

impl ConnectHypotheses {
    pub fn passed(&self) -> bool {
        self.no_zero_column && self.contains_hat && self.consecutive_rows_share
    }
}

pub fn connect_hypotheses(a: &ZeroOneMatrix) -> ConnectHypotheses {
    let mut reasons = Vec::new();
    let zero_cols: Vec<usize> = (0..a.cols())
        .filter(|&j| (0..a.rows()).all(|i| !a.get(i, j)))
        .collect();
    if let Some(j) = zero_cols.first() {
        reasons.push(format!("column {} is all zero", j + 1));
    }
    let contains_hat = contains_pattern(a, &hat()).is_some();
    if !contains_hat {
        reasons.push("does not contain the hat pattern".into());
    }
    let lonely: Vec<usize> = (1..a.rows())
        .filter(|&i| !(0..a.cols()).any(|j| a.get(i - 1, j) && a.get(i, j)))
        .collect();
    if let Some(i) = lonely.first() {
        reasons.push(format!("rows {} and {} share no 1-column", i, i + 1));
    }
    ConnectHypotheses {
        no_zero_column: zero_cols.is_empty(),
        contains_hat,
        consecutive_rows_share: lonely.is_empty(),
        reasons,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectVerdict {
    pub matrix_contains: bool,
    pub graph_contains: bool,
}

impl ConnectVerdict {
    /// Avoiding the matrix pattern implies avoiding its graph.
    pub fn holds(&self) -> bool {
        self.matrix_contains || !self.graph_contains
    }

    pub fn vacuous(&self) -> bool {
        self.matrix_contains
    }
}

/// Checks on one host that `M` avoiding `A` forces `G(M)` to avoid `G(A)`.
pub fn verify_connect(m: &ZeroOneMatrix, a: &ZeroOneMatrix) -> Result<ConnectVerdict> {
    let hyp = connect_hypotheses(a);
    if !hyp.passed() {
        return Err(Error::HypothesesFailed(hyp.reasons.join("; ")));
    }
    Ok(ConnectVerdict {
        matrix_contains: contains_pattern(m, a).is_some(),
        graph_contains: contains(&g_of(m), &g_of(a)).is_some(),
    })
}
