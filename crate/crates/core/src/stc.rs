//! Greedy wedge matchings and the STC / STC+ labelings they induce.
//!
//! A maximal set of edge-disjoint wedges lower-bounds cluster deletion, a
//! maximal set of pair-disjoint wedges lower-bounds cluster editing. The
//! pairs touched by the matched wedges form a vertex cover of the Gallai
//! graph (resp. the wedge hypergraph), i.e. a feasible labeling.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{canonical, Graph};
use crate::wedge::{for_each_wedge_at, OpenWedge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Weak edges only.
    Stc,
    /// Weak edges plus added weak non-edges.
    StcPlus,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Stc => "STC",
            Flavor::StcPlus => "STC+",
        })
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "STC" => Ok(Flavor::Stc),
            "STC+" | "STCPLUS" => Ok(Flavor::StcPlus),
            other => Err(format!("unknown flavor `{other}` (expected STC or STC+)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StcLabeling {
    pub flavor: Flavor,
    /// Number of matched wedges; the lower bound.
    pub matching_size: u64,
    /// Weak edges `E_W`, canonical and sorted.
    pub weak_edges: Vec<(usize, usize)>,
    /// Added weak non-edges `E'`, canonical and sorted. Empty for [`Flavor::Stc`].
    pub added_pairs: Vec<(usize, usize)>,
    /// Matched wedges in the order they were taken.
    pub matching: Vec<OpenWedge>,
}

impl StcLabeling {
    /// A labeling with no matching attached, e.g. read from a file or built by hand.
    pub fn from_pairs(
        flavor: Flavor,
        weak_edges: impl IntoIterator<Item = (usize, usize)>,
        added_pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let sorted = |it: &mut dyn Iterator<Item = (usize, usize)>| {
            let mut v: Vec<_> = it.map(|(a, b)| canonical(a, b)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        StcLabeling {
            flavor,
            matching_size: 0,
            weak_edges: sorted(&mut weak_edges.into_iter()),
            added_pairs: sorted(&mut added_pairs.into_iter()),
            matching: Vec::new(),
        }
    }

    /// `|E_W| + |E'|`.
    pub fn cover_size(&self) -> usize {
        self.weak_edges.len() + self.added_pairs.len()
    }

    /// Per-edge-id flag for membership in `E_W`. Pairs that are not edges of `g` are ignored.
    pub fn weak_mask(&self, g: &Graph) -> Vec<bool> {
        let mut mask = vec![false; g.m()];
        for &(u, v) in &self.weak_edges {
            if let Some(e) = g.edge_index(u, v) {
                mask[e] = true;
            }
        }
        mask
    }
}

fn center_order(n: usize, order_seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    if order_seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(order_seed));
    }
    order
}

/// Greedy maximal matching of edge-disjoint wedges (maximal matching in the
/// Gallai graph). `order_seed = 0` walks centers in natural order; any other
/// seed shuffles the center order.
pub fn match_cd(g: &Graph, order_seed: u64) -> StcLabeling {
    let mut covered = vec![false; g.m()];
    let mut matching = Vec::new();
    let mut lists: Vec<&[usize]> = Vec::new();
    for k in center_order(g.n(), order_seed) {
        let nbrs = g.neighbors(k);
        let eids = g.neighbor_edge_ids(k);
        // Independent loads up front so the misses overlap, instead of one
        // dependent chain per partner test.
        lists.clear();
        lists.extend(nbrs.iter().map(|&v| g.neighbors(v)));
        // Once (i,k) is matched no later wedge at k may use it, so each
        // outer neighbor pairs with at most one partner.
        'outer: for a in 0..nbrs.len() {
            if covered[eids[a]] {
                continue;
            }
            for b in a + 1..nbrs.len() {
                if covered[eids[b]] || lists[a].binary_search(&nbrs[b]).is_ok() {
                    continue;
                }
                covered[eids[a]] = true;
                covered[eids[b]] = true;
                matching.push(OpenWedge {
                    i: nbrs[a],
                    j: nbrs[b],
                    k,
                });
                continue 'outer;
            }
        }
    }
    let weak_edges = covered
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c)
        .map(|(e, _)| g.edge(e))
        .collect();
    StcLabeling {
        flavor: Flavor::Stc,
        matching_size: matching.len() as u64,
        weak_edges,
        added_pairs: Vec::new(),
        matching,
    }
}

/// Greedy maximal matching of pair-disjoint wedges (maximal matching in the
/// wedge hypergraph). Covered non-edges become the added pairs `E'`.
pub fn match_ce(g: &Graph, order_seed: u64) -> StcLabeling {
    let mut covered = vec![false; g.m()];
    let mut added: HashSet<(usize, usize)> = HashSet::new();
    let mut matching = Vec::new();
    for k in center_order(g.n(), order_seed) {
        let nbrs = g.neighbors(k);
        let eids = g.neighbor_edge_ids(k);
        'outer: for a in 0..nbrs.len() {
            if covered[eids[a]] {
                continue;
            }
            for b in a + 1..nbrs.len() {
                if covered[eids[b]] {
                    continue;
                }
                let (i, j) = (nbrs[a], nbrs[b]);
                if g.has_edge(i, j) || added.contains(&(i, j)) {
                    continue;
                }
                covered[eids[a]] = true;
                covered[eids[b]] = true;
                added.insert((i, j));
                matching.push(OpenWedge { i, j, k });
                continue 'outer;
            }
        }
    }
    let weak_edges = covered
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c)
        .map(|(e, _)| g.edge(e))
        .collect();
    let mut added_pairs: Vec<_> = added.into_iter().collect();
    added_pairs.sort_unstable();
    StcLabeling {
        flavor: Flavor::StcPlus,
        matching_size: matching.len() as u64,
        weak_edges,
        added_pairs,
        matching,
    }
}

/// Full wedge scan of the flavor's covering condition. Weak pairs that are
/// not edges of `g` (or added pairs that are edges) make the labeling invalid.
pub fn check_stc_feasible(g: &Graph, lab: &StcLabeling) -> bool {
    if lab.weak_edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    if lab.added_pairs.iter().any(|&(u, v)| g.has_edge(u, v)) {
        return false;
    }
    if lab.flavor == Flavor::Stc && !lab.added_pairs.is_empty() {
        return false;
    }
    let weak = lab.weak_mask(g);
    let added: HashSet<(usize, usize)> = lab.added_pairs.iter().copied().collect();
    (0..g.n()).all(|k| {
        let mut ok = true;
        for_each_wedge_at(g, k, |w| {
            if !(weak[w.ik] || weak[w.jk] || added.contains(&(w.wedge.i, w.wedge.j))) {
                ok = false;
            }
        });
        ok
    })
}
