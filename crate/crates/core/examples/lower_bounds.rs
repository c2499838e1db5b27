//! Wedge-matching lower bounds for cluster deletion and cluster editing.
//!
//!     cargo run --example lower_bounds [graph]

use stc_cluster::io::load_graph_auto;
use stc_cluster::stc::{check_stc_feasible, match_cd, match_ce};
use stc_cluster::Graph;

fn main() -> anyhow::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => load_graph_auto(path)?,
        // Two triangles sharing node 2, plus a pendant path.
        None => Graph::from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6)])?,
    };
    println!("n = {}, m = {}", g.n(), g.m());

    let cd = match_cd(&g, 0);
    assert!(check_stc_feasible(&g, &cd));
    println!("cluster deletion LB {} (|E_W| = {})", cd.matching_size, cd.weak_edges.len());

    let ce = match_ce(&g, 0);
    assert!(check_stc_feasible(&g, &ce));
    println!(
        "cluster editing  LB {} (|E_W| = {}, |E'| = {})",
        ce.matching_size,
        ce.weak_edges.len(),
        ce.added_pairs.len()
    );
    for w in ce.matching.iter().take(5) {
        println!("  matched wedge {}-{}-{}", g.label(w.i), g.label(w.k), g.label(w.j));
    }
    Ok(())
}
