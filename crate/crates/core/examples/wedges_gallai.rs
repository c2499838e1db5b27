//! Open wedges, the Gallai graph and the wedge hypergraph.

use stc_cluster::wedge::{build_gallai, build_wedge_hypergraph, enumerate_wedges, wedge_count};
use stc_cluster::Graph;

fn main() -> anyhow::Result<()> {
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4), (1, 2)])?;
    let n = enumerate_wedges(&g, |w| println!("wedge {}-{}-{} (open pair {},{})", w.i, w.k, w.j, w.i, w.j));
    assert_eq!(n, wedge_count(&g));

    let gallai = build_gallai(&g)?;
    println!("Gallai graph: {} nodes (edges of G), {} edges", gallai.nodes.len(), gallai.edges.len());

    let h = build_wedge_hypergraph(&g)?;
    println!("wedge hypergraph: {} pair nodes, {} hyperedges", h.node_count(), h.hyperedges.len());
    for he in &h.hyperedges {
        let pairs: Vec<_> = he.iter().map(|&p| h.pair_of(p)).collect();
        println!("  {pairs:?}");
    }
    Ok(())
}
