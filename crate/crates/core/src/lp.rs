//! Fractional STC / STC+ solutions supplied from outside and their threshold
//! rounding. No LP is solved here.
//!
//! * STC: a value `z` per edge, `z_ik + z_jk ≥ 1` on every open wedge. The
//!   derived graph keeps edges with `z < 1/2`; the lower bound is `Σ z`.
//! * STC+: a value `x` per edge and per listed non-edge (unlisted non-edges
//!   are `x = 1`), `x_ij ≤ x_ik + x_jk` on every open wedge. The derived graph
//!   keeps pairs with `x < 1/2`; the lower bound is
//!   `Σ_E x + Σ_{listed non-edges} (1 − x)`.

use std::collections::HashMap;
use std::time::Instant;

use crate::algorithms::{best_pivot, Algorithm, AlgoReport, RunConfig, RunOutcome};
use crate::error::{Error, Result};
use crate::graph::{canonical, Graph};
use crate::objective::ObjectiveKind;
use crate::pivot::PivotInstance;
use crate::stc::Flavor;
use crate::wedge::for_each_wedge_at;

/// Slack on box and wedge constraints.
pub const LP_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct FractionalSolution {
    flavor: Flavor,
    values: HashMap<(usize, usize), f64>,
}

impl FractionalSolution {
    /// Validates ids, the `[0, 1]` box (within [`LP_TOLERANCE`], then clamped)
    /// and, for STC, that only edges are referenced. Wedge constraints are
    /// checked separately by [`FractionalSolution::check_feasible`].
    pub fn new(g: &Graph, flavor: Flavor, entries: Vec<(usize, usize, f64)>) -> Result<Self> {
        let mut values = HashMap::with_capacity(entries.len());
        for (u, v, x) in entries {
            for node in [u, v] {
                if node >= g.n() {
                    return Err(Error::NodeOutOfRange { node, n: g.n() });
                }
            }
            let (lu, lv) = (g.label(u).to_string(), g.label(v).to_string());
            if u == v {
                return Err(Error::InfeasibleSolution(format!("self pair ({lu}, {lv})")));
            }
            if !(-LP_TOLERANCE..=1.0 + LP_TOLERANCE).contains(&x) {
                return Err(Error::InfeasibleSolution(format!(
                    "value {x} on ({lu}, {lv}) is outside [0, 1]"
                )));
            }
            if flavor == Flavor::Stc && !g.has_edge(u, v) {
                return Err(Error::InfeasibleSolution(format!(
                    "STC solution references non-edge ({lu}, {lv})"
                )));
            }
            let x = x.clamp(0.0, 1.0);
            if let Some(old) = values.insert(canonical(u, v), x) {
                if old != x {
                    return Err(Error::InfeasibleSolution(format!(
                        "conflicting values {old} and {x} on ({lu}, {lv})"
                    )));
                }
            }
        }
        Ok(FractionalSolution { flavor, values })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The listed value of a pair, if any.
    pub fn value(&self, u: usize, v: usize) -> Option<f64> {
        self.values.get(&canonical(u, v)).copied()
    }

    /// Entries ordered by canonical pair.
    pub fn sorted_entries(&self) -> Vec<((usize, usize), f64)> {
        let mut out: Vec<_> = self.values.iter().map(|(&p, &x)| (p, x)).collect();
        out.sort_unstable_by_key(|&(p, _)| p);
        out
    }

    /// Effective value of a non-edge under STC+ (unlisted means 1).
    fn x_nonedge(&self, u: usize, v: usize) -> f64 {
        self.value(u, v).unwrap_or(1.0)
    }

    /// Every edge must carry a value and every open wedge must satisfy the
    /// flavor's constraint.
    pub fn check_feasible(&self, g: &Graph) -> Result<()> {
        let mut edge_val = Vec::with_capacity(g.m());
        for &(u, v) in g.edges() {
            match self.value(u, v) {
                Some(x) => edge_val.push(x),
                None => {
                    return Err(Error::MissingValue {
                        u: g.label(u).to_string(),
                        v: g.label(v).to_string(),
                    })
                }
            }
        }
        let mut bad = None;
        for k in 0..g.n() {
            for_each_wedge_at(g, k, |w| {
                if bad.is_some() {
                    return;
                }
                let (a, b) = (edge_val[w.ik], edge_val[w.jk]);
                let (i, j) = (w.wedge.i, w.wedge.j);
                let violated = match self.flavor {
                    Flavor::Stc => a + b < 1.0 - LP_TOLERANCE,
                    Flavor::StcPlus => self.x_nonedge(i, j) > a + b + LP_TOLERANCE,
                };
                if violated {
                    bad = Some((i, j, k));
                }
            });
            if let Some((i, j, k)) = bad {
                return Err(Error::InfeasibleSolution(format!(
                    "{} wedge constraint fails at ({}, {}) centered at {}",
                    self.flavor,
                    g.label(i),
                    g.label(j),
                    g.label(k)
                )));
            }
        }
        Ok(())
    }

    /// The fractional objective: the lower bound reported for LP rounding.
    pub fn objective(&self, g: &Graph) -> f64 {
        self.sorted_entries()
            .into_iter()
            .map(|((u, v), x)| if g.has_edge(u, v) { x } else { 1.0 - x })
            .sum()
    }

    /// Pairs below the rounding threshold (strict `< 1/2`).
    pub fn derived_graph(&self, g: &Graph) -> Graph {
        let pairs = self
            .values
            .iter()
            .filter(|&(_, &x)| x < 0.5)
            .map(|(&p, _)| p);
        Graph::with_labels(g.labels().to_vec(), pairs).expect("pairs were validated")
    }

    /// Pivot instance with budgets from the fractional objective: `x` (or
    /// `z`) on edges, `1 − x` on listed STC+ non-edges.
    pub fn pivot_instance<'g>(&self, g: &'g Graph) -> Result<PivotInstance<'g>> {
        let kind = match self.flavor {
            Flavor::Stc => ObjectiveKind::ClusterDeletion,
            Flavor::StcPlus => ObjectiveKind::ClusterEditing,
        };
        let budgets = self.sorted_entries().into_iter().map(|((u, v), x)| {
            ((u, v), if g.has_edge(u, v) { x } else { 1.0 - x })
        });
        PivotInstance::new(g, kind, self.derived_graph(g), budgets)
    }
}

fn round(g: &Graph, sol: &FractionalSolution, want: Flavor, cfg: &RunConfig) -> Result<RunOutcome> {
    if sol.flavor() != want {
        return Err(Error::InfeasibleSolution(format!(
            "expected a {want} solution, got {}",
            sol.flavor()
        )));
    }
    let (algorithm, kind) = match want {
        Flavor::Stc => (Algorithm::LpStc, ObjectiveKind::ClusterDeletion),
        Flavor::StcPlus => (Algorithm::LpStcPlus, ObjectiveKind::ClusterEditing),
    };
    let t = Instant::now();
    sol.check_feasible(g)?;
    let lb = sol.objective(g);
    let lb_seconds = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let derived = sol.derived_graph(g);
    let (clustering, ub) = best_pivot(g, &derived, kind, cfg.seed, cfg.reps)?;
    let round_seconds = t.elapsed().as_secs_f64();
    let report = AlgoReport::new(g, algorithm, lb, ub, lb_seconds, round_seconds, cfg)?;
    Ok(RunOutcome {
        report,
        clustering,
        labeling: None,
    })
}

/// Threshold rounding of a fractional STC solution into a cluster deletion clustering.
pub fn lp_round_stc(g: &Graph, sol: &FractionalSolution, cfg: &RunConfig) -> Result<RunOutcome> {
    round(g, sol, Flavor::Stc, cfg)
}

/// Threshold rounding of a fractional STC+ solution into a cluster editing clustering.
pub fn lp_round_stcplus(
    g: &Graph,
    sol: &FractionalSolution,
    cfg: &RunConfig,
) -> Result<RunOutcome> {
    round(g, sol, Flavor::StcPlus, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pivot::check_thm31;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cfg() -> RunConfig {
        RunConfig {
            reps: 10,
            ..RunConfig::default()
        }
    }

    #[test]
    fn stc_examples() {
        let k3 = triangle();
        let sol = FractionalSolution::new(&k3, Flavor::Stc, vec![(0, 1, 0.0), (1, 2, 0.0), (0, 2, 0.0)])
            .unwrap();
        let out = lp_round_stc(&k3, &sol, &cfg()).unwrap();
        assert_eq!((out.report.lb, out.report.ub), (0.0, 0));
        assert_eq!(out.clustering.num_clusters(), 1);

        let g = path3();
        let sol = FractionalSolution::new(&g, Flavor::Stc, vec![(0, 1, 1.0), (1, 2, 0.0)]).unwrap();
        let out = lp_round_stc(&g, &sol, &cfg()).unwrap();
        assert_eq!((out.report.lb, out.report.ub), (1.0, 1));
        assert_eq!(out.clustering.clusters(), vec![vec![0], vec![1, 2]]);

        let sol = FractionalSolution::new(&g, Flavor::Stc, vec![(0, 1, 0.5), (1, 2, 0.5)]).unwrap();
        let out = lp_round_stc(&g, &sol, &cfg()).unwrap();
        assert_eq!((out.report.lb, out.report.ub), (1.0, 2));
        assert_eq!(out.clustering.num_clusters(), 3);
    }

    #[test]
    fn stcplus_examples() {
        let k3 = triangle();
        let sol =
            FractionalSolution::new(&k3, Flavor::StcPlus, vec![(0, 1, 0.0), (1, 2, 0.0), (0, 2, 0.0)])
                .unwrap();
        let out = lp_round_stcplus(&k3, &sol, &cfg()).unwrap();
        assert_eq!((out.report.lb, out.report.ub), (0.0, 0));

        let g = path3();
        let sol =
            FractionalSolution::new(&g, Flavor::StcPlus, vec![(0, 1, 0.0), (1, 2, 0.0), (0, 2, 0.0)])
                .unwrap();
        let out = lp_round_stcplus(&g, &sol, &cfg()).unwrap();
        assert_eq!((out.report.lb, out.report.ub), (1.0, 1));
        assert_eq!(out.clustering.num_clusters(), 1);

        let sol =
            FractionalSolution::new(&g, Flavor::StcPlus, vec![(0, 1, 0.5), (1, 2, 0.5), (0, 2, 1.0)])
                .unwrap();
        let out = lp_round_stcplus(&g, &sol, &cfg()).unwrap();
        assert_eq!((out.report.lb, out.report.ub), (1.0, 2));
        assert_eq!(out.clustering.num_clusters(), 3);
    }

    #[test]
    fn rejects_infeasible_and_incomplete() {
        let g = path3();
        let sol = FractionalSolution::new(&g, Flavor::Stc, vec![(0, 1, 0.4), (1, 2, 0.5)]).unwrap();
        assert!(matches!(
            lp_round_stc(&g, &sol, &cfg()),
            Err(Error::InfeasibleSolution(_))
        ));
        let sol = FractionalSolution::new(&g, Flavor::Stc, vec![(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            lp_round_stc(&g, &sol, &cfg()),
            Err(Error::MissingValue { .. })
        ));
        // Unlisted non-edge defaults to x = 1 > 0 + 0.
        let sol = FractionalSolution::new(&g, Flavor::StcPlus, vec![(0, 1, 0.0), (1, 2, 0.0)]).unwrap();
        assert!(lp_round_stcplus(&g, &sol, &cfg()).is_err());
        assert!(FractionalSolution::new(&g, Flavor::Stc, vec![(0, 2, 0.0)]).is_err());
        assert!(FractionalSolution::new(&g, Flavor::Stc, vec![(0, 1, 1.5)]).is_err());
    }

    #[test]
    fn lp_instances_satisfy_conditions_at_four() {
        let g = path3();
        for sol in [
            FractionalSolution::new(&g, Flavor::Stc, vec![(0, 1, 0.5), (1, 2, 0.5)]).unwrap(),
            FractionalSolution::new(&g, Flavor::StcPlus, vec![(0, 1, 0.3), (1, 2, 0.3), (0, 2, 0.6)])
                .unwrap(),
        ] {
            let inst = sol.pivot_instance(&g).unwrap();
            assert!(check_thm31(&inst, 4.0).passed);
        }
    }
}
