//! Exact optima on tiny graphs, and the sandwich `OPT_STC ≤ OPT_CD ≤ 2·OPT_STC`.

use stc_cluster::oracle::{opt_clustering, opt_labeling, Witness};
use stc_cluster::{Flavor, Graph, ObjectiveKind};

fn main() -> anyhow::Result<()> {
    let graphs = [
        ("path P4", Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?),
        ("star K1,4", Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])?),
        ("cycle C5", Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?),
        ("bowtie", Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])?),
    ];
    println!("{:<10} {:>6} {:>6} {:>6} {:>6}", "graph", "CD", "STC", "CE", "STC+");
    for (name, g) in &graphs {
        let cd = opt_clustering(g, ObjectiveKind::ClusterDeletion)?;
        let stc = opt_labeling(g, Flavor::Stc)?;
        let ce = opt_clustering(g, ObjectiveKind::ClusterEditing)?;
        let plus = opt_labeling(g, Flavor::StcPlus)?;
        println!(
            "{name:<10} {:>6} {:>6} {:>6} {:>6}",
            cd.opt_value, stc.opt_value, ce.opt_value, plus.opt_value
        );
        assert!(stc.opt_value <= cd.opt_value && cd.opt_value <= 2 * stc.opt_value);
        if let Witness::Clustering(c) = ce.witness {
            println!("{:<10} optimal editing clusters {:?}", "", c.clusters());
        }
    }
    Ok(())
}
