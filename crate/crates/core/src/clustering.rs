use crate::error::{Error, Result};

/// A partition of `0..n` with cluster ids `0..k`, numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clustering {
    assignment: Vec<usize>,
    k: usize,
}

impl Clustering {
    /// Normalizes arbitrary cluster labels into `0..k` in first-appearance order.
    pub fn from_assignment<I>(labels: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut remap = std::collections::HashMap::new();
        let assignment = labels
            .into_iter()
            .map(|l| {
                let next = remap.len();
                *remap.entry(l).or_insert(next)
            })
            .collect();
        Clustering {
            assignment,
            k: remap.len(),
        }
    }

    /// Builds a clustering from explicit clusters; every node must appear exactly once.
    pub fn from_clusters(n: usize, clusters: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, members) in clusters.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::NodeOutOfRange { node: v, n });
                }
                if labels[v] != usize::MAX {
                    return Err(Error::parse(0, format!("node {v} appears in two clusters")));
                }
                labels[v] = c;
            }
        }
        let got = labels.iter().filter(|&&l| l != usize::MAX).count();
        if got != n {
            return Err(Error::SizeMismatch { expected: n, got });
        }
        Ok(Self::from_assignment(labels))
    }

    pub fn singletons(n: usize) -> Self {
        Clustering {
            assignment: (0..n).collect(),
            k: n,
        }
    }

    pub fn single_cluster(n: usize) -> Self {
        Clustering {
            assignment: vec![0; n],
            k: usize::from(n > 0),
        }
    }

    /// Number of nodes covered.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn num_clusters(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn cluster_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Members of each cluster, ascending within a cluster.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.k];
        for &c in &self.assignment {
            out[c] += 1;
        }
        out
    }
}
