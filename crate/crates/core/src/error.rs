use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("node id {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("clustering covers {got} nodes but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("{what} exceeds the configured cap ({count} > {cap})")]
    ResourceLimit {
        what: &'static str,
        count: u64,
        cap: u64,
    },

    #[error("invalid pivot instance: node {node} has positive charged weight but zero budget")]
    InvalidInstance { node: usize },

    #[error("fractional solution is missing a value for edge ({u}, {v})")]
    MissingValue { u: String, v: String },

    #[error("fractional solution violates a constraint: {0}")]
    InfeasibleSolution(String),

    #[error("clustering is infeasible for cluster deletion (a cluster is not a clique)")]
    InfeasibleClustering,

    #[error("lower bound is zero but the clustering has cost {cost}")]
    ZeroLowerBound { cost: u64 },

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("algorithm `{0}` requires a fractional solution")]
    MissingFractionalSolution(String),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
