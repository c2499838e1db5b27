//! Disagreement counting for cluster editing and cluster deletion.

use std::fmt;
use std::str::FromStr;

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    /// Edges cut plus non-adjacent pairs placed together.
    ClusterEditing,
    /// Edges cut; non-adjacent pairs may never share a cluster.
    ClusterDeletion,
}

/// Penalty for placing a pair in the same cluster.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Repulsion {
    Finite(f64),
    /// Co-clustering is forbidden (cluster deletion non-edges).
    Forbidden,
}

impl Repulsion {
    pub fn is_zero(self) -> bool {
        matches!(self, Repulsion::Finite(w) if w == 0.0)
    }
}

/// `(w+, w-)` for one node pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairWeight {
    pub attract: f64,
    pub repel: Repulsion,
}

impl ObjectiveKind {
    /// Weight pattern of the unweighted objective for pair `{u, v}`.
    #[inline]
    pub fn weight(self, g: &Graph, u: usize, v: usize) -> PairWeight {
        self.weight_for(g.has_edge(u, v))
    }

    #[inline]
    pub fn weight_for(self, is_edge: bool) -> PairWeight {
        match (self, is_edge) {
            (_, true) => PairWeight {
                attract: 1.0,
                repel: Repulsion::Finite(0.0),
            },
            (ObjectiveKind::ClusterEditing, false) => PairWeight {
                attract: 0.0,
                repel: Repulsion::Finite(1.0),
            },
            (ObjectiveKind::ClusterDeletion, false) => PairWeight {
                attract: 0.0,
                repel: Repulsion::Forbidden,
            },
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            ObjectiveKind::ClusterEditing => "ce",
            ObjectiveKind::ClusterDeletion => "cd",
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for ObjectiveKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ce" | "editing" | "cluster-editing" => Ok(ObjectiveKind::ClusterEditing),
            "cd" | "deletion" | "cluster-deletion" => Ok(ObjectiveKind::ClusterDeletion),
            other => Err(format!("unknown objective `{other}` (expected ce or cd)")),
        }
    }
}

/// Per-clustering tallies, computed in O(n + m).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Disagreements {
    /// Edges whose endpoints are in different clusters.
    pub cut_edges: u64,
    /// Non-adjacent pairs sharing a cluster.
    pub missing_pairs: u64,
}

pub fn disagreements(g: &Graph, c: &Clustering) -> Result<Disagreements> {
    if c.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: c.len(),
        });
    }
    let mut internal = vec![0u64; c.num_clusters()];
    let mut cut_edges = 0;
    for &(u, v) in g.edges() {
        let cu = c.cluster_of(u);
        if cu == c.cluster_of(v) {
            internal[cu] += 1;
        } else {
            cut_edges += 1;
        }
    }
    let missing_pairs = c
        .sizes()
        .iter()
        .zip(&internal)
        .map(|(&s, &e)| (s as u64) * (s as u64).saturating_sub(1) / 2 - e)
        .sum();
    Ok(Disagreements {
        cut_edges,
        missing_pairs,
    })
}

/// Objective value of `c`, or `None` when `c` is infeasible for cluster deletion.
pub fn eval_objective(g: &Graph, c: &Clustering, kind: ObjectiveKind) -> Result<Option<u64>> {
    let d = disagreements(g, c)?;
    Ok(match kind {
        ObjectiveKind::ClusterEditing => Some(d.cut_edges + d.missing_pairs),
        ObjectiveKind::ClusterDeletion if d.missing_pairs == 0 => Some(d.cut_edges),
        ObjectiveKind::ClusterDeletion => None,
    })
}
