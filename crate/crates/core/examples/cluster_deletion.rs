//! Randomized MFP rounding for cluster deletion.
//!
//!     cargo run --example cluster_deletion [graph] [reps]

use stc_cluster::algorithms::{mfp_cd, RunConfig};
use stc_cluster::io::load_graph_auto;
use stc_cluster::{eval_objective, Graph, ObjectiveKind};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => load_graph_auto(path)?,
        None => Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])?,
    };
    let reps = args.next().map(|r| r.parse()).transpose()?.unwrap_or(100);
    let out = mfp_cd(&g, &RunConfig { reps, seed: 1, ..RunConfig::default() })?;

    let r = &out.report;
    println!("LB {}  UB {}  ratio {:.3}", r.lb, r.ub, r.ratio);
    // Every cluster is a clique, so the deletion objective is defined.
    assert_eq!(eval_objective(&g, &out.clustering, ObjectiveKind::ClusterDeletion)?, Some(r.ub));
    for (c, members) in out.clustering.clusters().iter().enumerate().take(10) {
        let names: Vec<_> = members.iter().map(|&v| g.label(v)).collect();
        println!("cluster {c}: {}", names.join(" "));
    }
    Ok(())
}
