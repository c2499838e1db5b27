//! Immutable simple undirected graphs in compressed sparse row form.
//!
//! Every undirected edge `{u, v}` gets a stable id: its index in the
//! lexicographically sorted list of canonical pairs `(min, max)`. Each
//! adjacency slot carries the id of the edge it belongs to, so wedge
//! enumeration can mark edges as covered without hashing.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    slot_edge: Vec<usize>,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
}

/// Orders a pair so that the smaller id comes first.
#[inline]
pub fn canonical(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph on nodes `0..n`, dropping self-loops and duplicate
    /// edges. Node labels default to the decimal ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    /// Like [`Graph::from_edges`] but with an explicit label per node.
    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            if u != v {
                pairs.push(canonical(u, v));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }

        // Edges are sorted by (u, v), so pushing in edge order yields sorted
        // lists for the forward direction; the backward entries (v <- u) also
        // arrive in ascending u. Interleaving both breaks the order, so each
        // list is sorted afterwards.
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; pairs.len() * 2];
        let mut slot_edge = vec![0usize; pairs.len() * 2];
        for (id, &(u, v)) in pairs.iter().enumerate() {
            targets[cursor[u]] = v;
            slot_edge[cursor[u]] = id;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            slot_edge[cursor[v]] = id;
            cursor[v] += 1;
        }
        let mut scratch = Vec::new();
        for u in 0..n {
            let (lo, hi) = (offsets[u], offsets[u + 1]);
            scratch.clear();
            scratch.extend(targets[lo..hi].iter().copied().zip(slot_edge[lo..hi].iter().copied()));
            scratch.sort_unstable();
            for (k, &(t, e)) in scratch.iter().enumerate() {
                targets[lo + k] = t;
                slot_edge[lo + k] = e;
            }
        }

        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(Graph {
            offsets,
            targets,
            slot_edge,
            edges: pairs,
            labels,
            label_index,
        })
    }

    /// Node count.
    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Edge count.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbors of `u`.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    /// Edge ids parallel to [`Graph::neighbors`].
    #[inline]
    pub fn neighbor_edge_ids(&self, u: usize) -> &[usize] {
        &self.slot_edge[self.offsets[u]..self.offsets[u + 1]]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// Membership test without range checks; binary search on the shorter list.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Checked membership test. `is_edge(u, u)` is always false.
    pub fn is_edge(&self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for node in [u, v] {
            if node >= n {
                return Err(Error::NodeOutOfRange { node, n });
            }
        }
        Ok(self.has_edge(u, v))
    }

    /// Id of edge `{u, v}` if present.
    #[inline]
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let lo = self.offsets[a];
        self.neighbors(a)
            .binary_search(&b)
            .ok()
            .map(|k| self.slot_edge[lo + k])
    }

    /// All edges as canonical pairs, indexed by edge id.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn node_of_label(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Connected component ids, numbered in order of their smallest node.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// Subgraph induced by `nodes` (ascending ids keep their relative order).
    pub fn induced(&self, nodes: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.n()];
        for (new, &old) in nodes.iter().enumerate() {
            map[old] = new;
        }
        let labels = nodes.iter().map(|&u| self.labels[u].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]));
        Graph::with_labels(labels, edges).expect("induced ids are in range")
    }

    /// Largest connected component; ties go to the component with the smallest node.
    pub fn largest_component(&self) -> Graph {
        let (count, comp) = self.components();
        let mut sizes = vec![0usize; count];
        for &c in &comp {
            sizes[c] += 1;
        }
        let best = (0..count)
            .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
            .unwrap_or(0);
        let nodes: Vec<usize> = (0..self.n()).filter(|&u| comp[u] == best).collect();
        self.induced(&nodes)
    }

    /// Same node set and edge set (labels are not compared).
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges == other.edges
    }
}
