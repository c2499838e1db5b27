//! Certify a clustering produced elsewhere against the matching lower bound.
//!
//!     cargo run --example aposteriori_ratio [graph clustering-file]

use stc_cluster::algorithms::aposteriori_ratio;
use stc_cluster::io::{load_clustering, load_graph_auto};
use stc_cluster::stc::match_ce;
use stc_cluster::{eval_objective, Clustering, Graph, ObjectiveKind};

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (g, c) = match args.as_slice() {
        [graph, clustering] => (load_graph_auto(graph)?, load_clustering(clustering)?),
        _ => {
            let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])?;
            (g, Clustering::from_assignment([0, 0, 0, 1, 1]))
        }
    };
    let kind = ObjectiveKind::ClusterEditing;
    let lb = match_ce(&g, 0).matching_size as f64;
    let cost = eval_objective(&g, &c, kind)?.expect("editing cost is always defined");
    println!("cost {cost}, LB {lb}, certified ratio {:.3}", aposteriori_ratio(&g, &c, kind, lb)?);
    Ok(())
}
