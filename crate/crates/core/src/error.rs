use std::path::PathBuf;

use thiserror::Error;

use crate::orders::{Symbol, TripleWitness};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol pair must be distinct, got {0} twice")]
    EqualSymbols(Symbol),

    #[error("order contains repeated symbol {0}")]
    RepeatedSymbol(Symbol),

    #[error("symbol {symbol} is outside the universe of size {universe}")]
    SymbolOutOfRange { symbol: Symbol, universe: usize },

    #[error("symbol {0} does not occur in the cyclic order")]
    MissingStart(Symbol),

    #[error("orders share the same-order triple {0:?}")]
    SameOrderTriple((Symbol, Symbol, Symbol)),

    #[error("family is not valid: {0}")]
    InvalidFamily(TripleWitness),

    #[error("regularity parameter must be at least 1, got {0}")]
    BadRegularity(String),

    #[error("subgraph edge ({order}, {symbol}) is not an incidence of the family")]
    NotASubgraph { order: usize, symbol: Symbol },

    #[error("invalid edge-ordered graph: {0}")]
    InvalidGraph(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("exact search is capped at n = {cap}, got n = {n}")]
    SearchTooLarge { n: usize, cap: usize },

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("edge ({0}, {1}) is vertical")]
    VerticalEdge(usize, usize),

    #[error("pattern fails the connect hypotheses: {0}")]
    HypothesesFailed(String),

    #[error("graph is not C4-free: vertices {0} and {1} share two neighbours")]
    NotC4Free(usize, usize),

    #[error("{0} is not a prime in the supported range")]
    NotPrime(u64),

    #[error("mismatched inputs: {0}")]
    Mismatch(String),

    #[error("parse error in {what}: {msg}")]
    Parse { what: String, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error on {path:?}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(what: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            what: what.into(),
            msg: msg.into(),
        }
    }
}
