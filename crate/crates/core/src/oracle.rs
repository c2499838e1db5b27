//! Exact optima for tiny graphs, used as ground truth by the test suites.
//!
//! Clusterings are enumerated as restricted-growth strings (node `i` joins one
//! of the clusters opened by nodes `< i`, or opens the next one) depth-first,
//! pruning any prefix whose partial cost already reaches the best complete
//! cost. The first optimum in enumeration order is returned.
//!
//! Labelings are found as minimum hitting sets over *candidate* pairs by
//! iterative deepening on the set size, so the first feasible set is optimal.
//!
//! **Lemma (candidate restriction).** A pair that lies in no open wedge can
//! be dropped from any feasible labeling without breaking feasibility: the
//! covering condition of a wedge only mentions the wedge's own pairs. Hence
//! some optimal labeling uses candidate pairs only — edges `(i,k)`, `(j,k)` of
//! some wedge for STC, plus the open pairs `(i,j)` for STC+.

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::objective::{eval_objective, ObjectiveKind};
use crate::stc::{check_stc_feasible, Flavor, StcLabeling};
use crate::wedge::enumerate_wedges;

pub const DEFAULT_MAX_NODES: usize = 10;
pub const DEFAULT_MAX_CANDIDATES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    ClusterEditing,
    ClusterDeletion,
    Stc,
    StcPlus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Clustering(Clustering),
    /// `matching_size` is 0 and `matching` empty: no matching is involved.
    Labeling(StcLabeling),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub problem: Problem,
    pub opt_value: u64,
    pub witness: Witness,
}

pub fn opt_clustering(g: &Graph, kind: ObjectiveKind) -> Result<OracleResult> {
    opt_clustering_capped(g, kind, DEFAULT_MAX_NODES)
}

pub fn opt_clustering_capped(g: &Graph, kind: ObjectiveKind, max_nodes: usize) -> Result<OracleResult> {
    let n = g.n();
    if n > max_nodes.min(64) {
        return Err(Error::ResourceLimit {
            what: "oracle node count",
            count: n as u64,
            cap: max_nodes.min(64) as u64,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut search = Search {
        adj,
        deletion: kind == ObjectiveKind::ClusterDeletion,
        members: Vec::with_capacity(n),
        assignment: vec![0; n],
        // Singletons are always feasible and cost m.
        best: g.m() as u64 + 1,
        best_assignment: (0..n).collect(),
    };
    search.descend(0, 0);
    let clustering = Clustering::from_assignment(search.best_assignment);
    let opt_value = eval_objective(g, &clustering, kind)?.expect("search only keeps feasible partitions");
    Ok(OracleResult {
        problem: match kind {
            ObjectiveKind::ClusterEditing => Problem::ClusterEditing,
            ObjectiveKind::ClusterDeletion => Problem::ClusterDeletion,
        },
        opt_value,
        witness: Witness::Clustering(clustering),
    })
}

struct Search {
    adj: Vec<u64>,
    deletion: bool,
    /// Node masks of the clusters opened so far.
    members: Vec<u64>,
    assignment: Vec<usize>,
    best: u64,
    best_assignment: Vec<usize>,
}

impl Search {
    fn descend(&mut self, i: usize, cost: u64) {
        if cost >= self.best {
            return;
        }
        let n = self.adj.len();
        if i == n {
            self.best = cost;
            self.best_assignment.clone_from(&self.assignment);
            return;
        }
        let earlier = (1u64 << i) - 1;
        let adj = self.adj[i];
        for c in 0..=self.members.len() {
            let inside = self.members.get(c).copied().unwrap_or(0);
            let missing = (inside & !adj).count_ones() as u64;
            if self.deletion && missing > 0 {
                continue;
            }
            let cut = (earlier & adj & !inside).count_ones() as u64;
            if c == self.members.len() {
                self.members.push(0);
            }
            self.members[c] |= 1 << i;
            self.assignment[i] = c;
            self.descend(i + 1, cost + missing + cut);
            self.members[c] &= !(1 << i);
            if self.members[c] == 0 {
                self.members.pop();
            }
        }
    }
}

/// Pairs that occur in some open wedge, with each wedge's candidate bitmask.
fn candidates(g: &Graph, flavor: Flavor) -> (Vec<(usize, usize)>, Vec<Vec<(usize, usize)>>) {
    let mut wedges = Vec::new();
    enumerate_wedges(g, |w| {
        let [open, a, b] = w.pairs();
        wedges.push(match flavor {
            Flavor::Stc => vec![a, b],
            Flavor::StcPlus => vec![a, b, open],
        });
    });
    let mut pairs: Vec<_> = wedges.iter().flatten().copied().collect();
    pairs.sort_unstable();
    pairs.dedup();
    (pairs, wedges)
}

/// Smallest set of bits hitting every mask: iterative deepening on the set
/// size, branching on the bits of the first unhit mask. A greedy packing of
/// pairwise disjoint unhit masks bounds the remaining budget from below.
fn min_hitting_set(masks: &[u64]) -> u64 {
    (0..=64)
        .find_map(|budget| branch(masks, 0, budget))
        .expect("the full candidate set hits every wedge")
}

fn branch(masks: &[u64], chosen: u64, budget: u32) -> Option<u64> {
    let mut packed = 0u64;
    let mut need = 0;
    let mut first = None;
    for &m in masks {
        if m & chosen == 0 && m & packed == 0 {
            first.get_or_insert(m);
            packed |= m;
            need += 1;
            if need > budget {
                return None;
            }
        }
    }
    let Some(m) = first else {
        return Some(chosen);
    };
    let mut bits = m;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits ^= b;
        if let Some(s) = branch(masks, chosen | b, budget - 1) {
            return Some(s);
        }
    }
    None
}

pub fn opt_labeling(g: &Graph, flavor: Flavor) -> Result<OracleResult> {
    opt_labeling_capped(g, flavor, DEFAULT_MAX_CANDIDATES)
}

/// `max_candidates` bounds the number of wedge-participating pairs (at most 63).
pub fn opt_labeling_capped(g: &Graph, flavor: Flavor, max_candidates: usize) -> Result<OracleResult> {
    let (pairs, wedges) = candidates(g, flavor);
    let cap = max_candidates.min(63);
    if pairs.len() > cap {
        return Err(Error::ResourceLimit {
            what: "oracle candidate pair count",
            count: pairs.len() as u64,
            cap: cap as u64,
        });
    }
    let bit = |p: &(usize, usize)| 1u64 << pairs.binary_search(p).expect("candidate");
    let masks: Vec<u64> = wedges.iter().map(|w| w.iter().map(bit).fold(0, |a, b| a | b)).collect();
    let chosen = min_hitting_set(&masks);
    let picked = pairs
        .iter()
        .enumerate()
        .filter(|&(b, _)| chosen >> b & 1 == 1)
        .map(|(_, &p)| p);
    let (weak, added): (Vec<_>, Vec<_>) = picked.partition(|&(u, v)| g.has_edge(u, v));
    let lab = StcLabeling::from_pairs(flavor, weak, added);
    debug_assert!(check_stc_feasible(g, &lab));
    Ok(OracleResult {
        problem: match flavor {
            Flavor::Stc => Problem::Stc,
            Flavor::StcPlus => Problem::StcPlus,
        },
        opt_value: chosen.count_ones() as u64,
        witness: Witness::Labeling(lab),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// Plain restricted-growth enumeration without pruning.
    fn brute(g: &Graph, kind: ObjectiveKind) -> (u64, usize) {
        let n = g.n();
        let mut a = vec![0usize; n];
        let mut best = u64::MAX;
        let mut count = 0;
        loop {
            count += 1;
            if let Some(c) = eval_objective(g, &Clustering::from_assignment(a.clone()), kind).unwrap() {
                best = best.min(c);
            }
            // Advance to the next restricted-growth string.
            let mut i = n - 1;
            loop {
                let max_prefix = a[..i].iter().copied().max().unwrap_or(0);
                if i > 0 && a[i] <= max_prefix {
                    a[i] += 1;
                    a[i + 1..].iter_mut().for_each(|x| *x = 0);
                    break;
                }
                if i <= 1 {
                    return (best, count);
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(opt_clustering(&path3(), ObjectiveKind::ClusterEditing).unwrap().opt_value, 1);
        assert_eq!(opt_clustering(&star3(), ObjectiveKind::ClusterDeletion).unwrap().opt_value, 2);
        for kind in [ObjectiveKind::ClusterEditing, ObjectiveKind::ClusterDeletion] {
            assert_eq!(opt_clustering(&triangle(), kind).unwrap().opt_value, 0);
        }
    }

    #[test]
    fn brute_force_counts_bell_numbers() {
        assert_eq!(brute(&path3(), ObjectiveKind::ClusterEditing), (1, 5));
        assert_eq!(brute(&star3(), ObjectiveKind::ClusterDeletion), (2, 15));
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        let g = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (1, 4)],
        )
        .unwrap();
        for kind in [ObjectiveKind::ClusterEditing, ObjectiveKind::ClusterDeletion] {
            let r = opt_clustering(&g, kind).unwrap();
            assert_eq!(r.opt_value, brute(&g, kind).0);
            let Witness::Clustering(c) = r.witness else { panic!() };
            assert_eq!(eval_objective(&g, &c, kind).unwrap(), Some(r.opt_value));
        }
    }

    #[test]
    fn labeling_examples() {
        assert_eq!(opt_labeling(&star3(), Flavor::Stc).unwrap().opt_value, 2);
        assert_eq!(opt_labeling(&path3(), Flavor::StcPlus).unwrap().opt_value, 1);
        for f in [Flavor::Stc, Flavor::StcPlus] {
            assert_eq!(opt_labeling(&triangle(), f).unwrap().opt_value, 0);
        }
    }

    /// Subsets by increasing popcount (Gosper's hack); first hit wins.
    fn gosper_hitting_set(items: usize, masks: &[u64]) -> u32 {
        for size in 0..=items {
            let mut s: u64 = (1u64 << size) - 1;
            while s < 1u64 << items {
                if masks.iter().all(|&m| m & s != 0) {
                    return size as u32;
                }
                if s == 0 {
                    break;
                }
                let c = s & s.wrapping_neg();
                let r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        unreachable!()
    }

    #[test]
    fn hitting_set_matches_subset_enumeration() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let n = 4 + (next() % 4) as usize;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| next() % 2 == 0)
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            for flavor in [Flavor::Stc, Flavor::StcPlus] {
                let (pairs, wedges) = candidates(&g, flavor);
                if pairs.len() > 16 {
                    continue;
                }
                let bit = |p: &(usize, usize)| 1u64 << pairs.binary_search(p).unwrap();
                let masks: Vec<u64> = wedges.iter().map(|w| w.iter().map(bit).fold(0, |a, b| a | b)).collect();
                let fast = opt_labeling(&g, flavor).unwrap().opt_value;
                assert_eq!(fast, gosper_hitting_set(pairs.len(), &masks) as u64);
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let big = Graph::from_edges(11, []).unwrap();
        assert!(matches!(
            opt_clustering(&big, ObjectiveKind::ClusterEditing),
            Err(Error::ResourceLimit { .. })
        ));
        let star = Graph::from_edges(9, (1..9).map(|l| (0, l))).unwrap();
        assert!(opt_labeling_capped(&star, Flavor::Stc, 7).is_err());
        assert_eq!(opt_labeling_capped(&star, Flavor::Stc, 8).unwrap().opt_value, 7);
    }
}
