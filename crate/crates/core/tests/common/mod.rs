#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stc_cluster::Graph;

/// G(n, p) with a fixed seed.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// G(n, m) by rejection sampling of distinct pairs.
pub fn erdos_renyi_m(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set = std::collections::HashSet::with_capacity(m);
    while set.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            set.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, set).unwrap()
}

/// Every labeled graph on `n` nodes, as an edge bitmask over the pairs in
/// row-major order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn is_connected(g: &Graph) -> bool {
    g.components().0 == 1
}

/// Brute-force open wedges over all triples, in (k, i, j) order.
pub fn brute_wedges(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                if i != k && j != k && g.has_edge(i, k) && g.has_edge(j, k) && !g.has_edge(i, j) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}
