//! Open wedges `(i, j; k)`: `k` adjacent to both `i` and `j`, `i` and `j`
//! not adjacent, canonical `i < j`.
//!
//! The matching code consumes wedges as a stream. [`GallaiGraph`] and
//! [`WedgeHypergraph`] materialize the two auxiliary structures whose vertex
//! covers are STC and STC+ labelings; they are meant for small instances.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical, Graph};

/// Default cap on materialized wedges.
pub const DEFAULT_WEDGE_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpenWedge {
    pub i: usize,
    pub j: usize,
    /// Center, adjacent to both `i` and `j`.
    pub k: usize,
}

impl OpenWedge {
    /// The three node pairs `(i, j)`, `(i, k)`, `(j, k)` in canonical form.
    pub fn pairs(&self) -> [(usize, usize); 3] {
        [
            (self.i, self.j),
            canonical(self.i, self.k),
            canonical(self.j, self.k),
        ]
    }
}

/// A wedge together with the ids of its two edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WedgeEdges {
    pub wedge: OpenWedge,
    /// Id of edge `{i, k}`.
    pub ik: usize,
    /// Id of edge `{j, k}`.
    pub jk: usize,
}

/// Visits the wedges centered at `k` in lexicographic `(i, j)` order.
#[inline]
pub fn for_each_wedge_at<F>(g: &Graph, k: usize, mut visit: F)
where
    F: FnMut(WedgeEdges),
{
    let nbrs = g.neighbors(k);
    let eids = g.neighbor_edge_ids(k);
    for a in 0..nbrs.len() {
        for b in a + 1..nbrs.len() {
            let (i, j) = (nbrs[a], nbrs[b]);
            if !g.has_edge(i, j) {
                visit(WedgeEdges {
                    wedge: OpenWedge { i, j, k },
                    ik: eids[a],
                    jk: eids[b],
                });
            }
        }
    }
}

/// Visits every open wedge once: centers ascending, then `(i, j)`
/// lexicographically. Returns the number of wedges.
pub fn enumerate_wedges<F>(g: &Graph, mut visit: F) -> u64
where
    F: FnMut(OpenWedge),
{
    let mut count = 0;
    for k in 0..g.n() {
        for_each_wedge_at(g, k, |w| {
            count += 1;
            visit(w.wedge);
        });
    }
    count
}

/// Parallel variant of [`enumerate_wedges`]: same wedge set, unspecified order.
pub fn par_enumerate_wedges<F>(g: &Graph, visit: F) -> u64
where
    F: Fn(OpenWedge) + Sync,
{
    (0..g.n())
        .into_par_iter()
        .map(|k| {
            let mut c = 0u64;
            for_each_wedge_at(g, k, |w| {
                c += 1;
                visit(w.wedge);
            });
            c
        })
        .sum()
}

/// Number of wedges centered at `k`.
pub fn wedge_count_at(g: &Graph, k: usize) -> u64 {
    let nbrs = g.neighbors(k);
    let d = nbrs.len() as u64;
    // Closed pairs are triangles through k; the rest are open wedges.
    let mut closed = 0u64;
    for (a, &i) in nbrs.iter().enumerate() {
        for &j in &nbrs[a + 1..] {
            if g.has_edge(i, j) {
                closed += 1;
            }
        }
    }
    d * d.saturating_sub(1) / 2 - closed
}

/// Total number of open wedges, computed in parallel without materializing them.
pub fn wedge_count(g: &Graph) -> u64 {
    (0..g.n()).into_par_iter().map(|k| wedge_count_at(g, k)).sum()
}

/// Graph with one node per edge of `G` and one edge per open wedge.
#[derive(Clone, Debug)]
pub struct GallaiGraph {
    /// Node `e` stands for edge `e` of the source graph.
    pub nodes: Vec<(usize, usize)>,
    /// Pairs of edge ids, one per wedge, in wedge enumeration order.
    pub edges: Vec<(usize, usize)>,
}

pub fn build_gallai(g: &Graph) -> Result<GallaiGraph> {
    build_gallai_capped(g, DEFAULT_WEDGE_CAP)
}

pub fn build_gallai_capped(g: &Graph, cap: u64) -> Result<GallaiGraph> {
    let count = wedge_count(g);
    if count > cap {
        return Err(Error::ResourceLimit {
            what: "open wedge count",
            count,
            cap,
        });
    }
    let mut edges = Vec::with_capacity(count as usize);
    for k in 0..g.n() {
        for_each_wedge_at(g, k, |w| edges.push((w.ik, w.jk)));
    }
    Ok(GallaiGraph {
        nodes: g.edges().to_vec(),
        edges,
    })
}

/// 3-uniform hypergraph on all node pairs with one hyperedge per open wedge.
///
/// Pair nodes are not stored; [`WedgeHypergraph::pair_id`] maps a pair to its
/// index in the row-major upper triangle.
#[derive(Clone, Debug)]
pub struct WedgeHypergraph {
    pub n: usize,
    pub hyperedges: Vec<[usize; 3]>,
}

impl WedgeHypergraph {
    pub fn node_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn pair_id(&self, u: usize, v: usize) -> usize {
        let (u, v) = canonical(u, v);
        // Pairs (0,1)..(0,n-1), (1,2).. in order.
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn pair_of(&self, id: usize) -> (usize, usize) {
        let mut u = 0;
        let mut base = 0;
        loop {
            let row = self.n - u - 1;
            if id < base + row {
                return (u, u + 1 + (id - base));
            }
            base += row;
            u += 1;
        }
    }
}

pub fn build_wedge_hypergraph(g: &Graph) -> Result<WedgeHypergraph> {
    build_wedge_hypergraph_capped(g, DEFAULT_WEDGE_CAP)
}

pub fn build_wedge_hypergraph_capped(g: &Graph, cap: u64) -> Result<WedgeHypergraph> {
    let count = wedge_count(g);
    if count > cap {
        return Err(Error::ResourceLimit {
            what: "open wedge count",
            count,
            cap,
        });
    }
    let mut h = WedgeHypergraph {
        n: g.n(),
        hyperedges: Vec::with_capacity(count as usize),
    };
    let mut edges = Vec::with_capacity(count as usize);
    enumerate_wedges(g, |w| edges.push(w));
    h.hyperedges = edges
        .iter()
        .map(|w| w.pairs().map(|(a, b)| h.pair_id(a, b)))
        .collect();
    Ok(h)
}
