//! Threshold rounding of externally computed fractional solutions.
//!
//!     cargo run --example lp_rounding [graph frac-file]
//!
//! A fractional file starts with `STC` or `STC+` and lists `u v x` lines.

use stc_cluster::algorithms::RunConfig;
use stc_cluster::io::{load_fractional, load_graph_auto};
use stc_cluster::lp::{lp_round_stc, lp_round_stcplus};
use stc_cluster::{Flavor, FractionalSolution, Graph};

fn main() -> anyhow::Result<()> {
    let cfg = RunConfig { reps: 20, ..RunConfig::default() };
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [graph, frac] = args.as_slice() {
        let g = load_graph_auto(graph)?;
        let sol = load_fractional(&g, frac)?;
        let out = match sol.flavor() {
            Flavor::Stc => lp_round_stc(&g, &sol, &cfg)?,
            Flavor::StcPlus => lp_round_stcplus(&g, &sol, &cfg)?,
        };
        println!("LB {}  UB {}  ratio {:.3}", out.report.lb, out.report.ub, out.report.ratio);
        return Ok(());
    }

    let path = Graph::from_edges(3, [(0, 1), (1, 2)])?;
    let z = FractionalSolution::new(&path, Flavor::Stc, vec![(0, 1, 1.0), (1, 2, 0.0)])?;
    let out = lp_round_stc(&path, &z, &cfg)?;
    println!("STC  z=(1,0):     LB {} UB {} clusters {:?}", out.report.lb, out.report.ub, out.clustering.clusters());

    let x = FractionalSolution::new(&path, Flavor::StcPlus, vec![(0, 1, 0.5), (1, 2, 0.5), (0, 2, 1.0)])?;
    let out = lp_round_stcplus(&path, &x, &cfg)?;
    println!("STC+ x=(.5,.5,1): LB {} UB {} clusters {:?}", out.report.lb, out.report.ub, out.clustering.clusters());

    // 0.4 + 0.5 < 1 on the only wedge.
    let bad = FractionalSolution::new(&path, Flavor::Stc, vec![(0, 1, 0.4), (1, 2, 0.5)])?;
    println!("infeasible input: {}", lp_round_stc(&path, &bad, &cfg).unwrap_err());
    Ok(())
}
