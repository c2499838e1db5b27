//! Deterministic pivoting: no randomness, with hard (not expected) bounds
//! `UB ≤ 2|E_W|` and `UB ≤ 2(|E_W| + |E'|)`.

use stc_cluster::algorithms::{mfp_cd_det, mfp_ce_det, mfp_instance, RunConfig};
use stc_cluster::pivot::check_thm31;
use stc_cluster::{Graph, ObjectiveKind};

fn main() -> anyhow::Result<()> {
    // Star K1,4 glued to a triangle.
    let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6), (4, 6)])?;
    let cfg = RunConfig::default();

    let cd = mfp_cd_det(&g, &cfg)?;
    let lab = cd.labeling.as_ref().unwrap();
    let report = check_thm31(&mfp_instance(&g, lab, ObjectiveKind::ClusterDeletion), 2.0);
    println!(
        "CD: LB {} UB {} <= 2|E_W| = {}  (conditions at alpha=2: {})",
        cd.report.lb,
        cd.report.ub,
        2 * lab.weak_edges.len(),
        if report.passed { "hold" } else { "violated" }
    );

    let ce = mfp_ce_det(&g, &cfg)?;
    let lab = ce.labeling.as_ref().unwrap();
    println!(
        "CE: LB {} UB {} <= 2(|E_W|+|E'|) = {}",
        ce.report.lb,
        ce.report.ub,
        2 * lab.cover_size()
    );
    println!("CE clustering: {:?}", ce.clustering.assignment());
    Ok(())
}
