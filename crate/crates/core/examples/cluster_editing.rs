//! Cluster editing: MFP rounding on the flipped graph versus plain pivot on `G`,
//! both certified against the same pair-disjoint matching bound.
//!
//!     cargo run --example cluster_editing [graph]

use stc_cluster::algorithms::{mfp_ce, RunConfig};
use stc_cluster::io::load_graph_auto;
use stc_cluster::{Graph, RoundOn};

fn main() -> anyhow::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => load_graph_auto(path)?,
        // A 4-cycle with a chord and a tail.
        None => Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5)])?,
    };
    let cfg = RunConfig { reps: 50, seed: 3, ..RunConfig::default() };
    for round_on in [RoundOn::Derived, RoundOn::Original] {
        let r = mfp_ce(&g, &cfg, round_on)?.report;
        println!("{:<8} LB {:>4}  UB {:>5}  ratio {:.3}", r.algorithm, r.lb, r.ub, r.ratio);
    }
    Ok(())
}
