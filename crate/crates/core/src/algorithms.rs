//! Match–flip–pivot pipelines, the pivot-on-G baseline and report assembly.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::objective::{eval_objective, ObjectiveKind};
use crate::pivot::{pivot_deterministic, pivot_random_stream, PivotInstance};
use crate::stc::{match_cd, match_ce, StcLabeling};

pub const DEFAULT_REPS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Edge-disjoint wedge matching, pivot on `E − E_W`.
    MfpCd,
    /// Pair-disjoint wedge matching, pivot on `E' ∪ (E − E_W)`.
    MfpCe,
    MfpCdDet,
    MfpCeDet,
    /// Pivot on `G` itself, scored against the pair-disjoint matching bound.
    Pivot,
    LpStc,
    LpStcPlus,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::MfpCd,
        Algorithm::MfpCe,
        Algorithm::MfpCdDet,
        Algorithm::MfpCeDet,
        Algorithm::Pivot,
        Algorithm::LpStc,
        Algorithm::LpStcPlus,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::MfpCd => "mfp-cd",
            Algorithm::MfpCe => "mfp-ce",
            Algorithm::MfpCdDet => "mfp-cd-det",
            Algorithm::MfpCeDet => "mfp-ce-det",
            Algorithm::Pivot => "pivot",
            Algorithm::LpStc => "lp-stc",
            Algorithm::LpStcPlus => "lp-stc+",
        }
    }

    pub fn objective(self) -> ObjectiveKind {
        match self {
            Algorithm::MfpCd | Algorithm::MfpCdDet | Algorithm::LpStc => {
                ObjectiveKind::ClusterDeletion
            }
            _ => ObjectiveKind::ClusterEditing,
        }
    }

    pub fn needs_fractional(self) -> bool {
        matches!(self, Algorithm::LpStc | Algorithm::LpStcPlus)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// Where MFP-CE pivots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundOn {
    /// The flipped graph `E' ∪ (E − E_W)` (carries the guarantee).
    Derived,
    /// The input graph.
    Original,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Randomized pivot repetitions; the cheapest is kept.
    pub reps: usize,
    /// Pivot seed. Repetition `r` draws from stream `r` of this seed.
    pub seed: u64,
    /// Wedge matching order; 0 is the natural order.
    pub order_seed: u64,
    /// Name copied into the report.
    pub graph_name: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            reps: DEFAULT_REPS,
            seed: 0,
            order_seed: 0,
            graph_name: String::new(),
        }
    }
}

/// One row of results.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgoReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub lb: f64,
    pub ub: u64,
    pub ratio: f64,
    pub lb_seconds: f64,
    pub round_seconds: f64,
    pub seed: u64,
    pub reps: usize,
}

impl AlgoReport {
    pub fn new(
        g: &Graph,
        algorithm: Algorithm,
        lb: f64,
        ub: u64,
        lb_seconds: f64,
        round_seconds: f64,
        cfg: &RunConfig,
    ) -> Result<Self> {
        Ok(AlgoReport {
            graph: cfg.graph_name.clone(),
            n: g.n(),
            m: g.m(),
            algorithm,
            lb,
            ub,
            ratio: ratio(lb, ub)?,
            lb_seconds,
            round_seconds,
            seed: cfg.seed,
            reps: cfg.reps,
        })
    }
}

/// `ub / lb`, with `0 / 0` read as 1.
pub fn ratio(lb: f64, ub: u64) -> Result<f64> {
    if lb > 0.0 {
        Ok(ub as f64 / lb)
    } else if ub == 0 {
        Ok(1.0)
    } else {
        Err(Error::ZeroLowerBound { cost: ub })
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: AlgoReport,
    pub clustering: Clustering,
    /// The labeling behind the lower bound, for matching-based algorithms.
    pub labeling: Option<StcLabeling>,
}

/// Flipped graph of a labeling: `E' ∪ (E − E_W)`.
pub fn derived_graph(g: &Graph, lab: &StcLabeling) -> Graph {
    let weak = lab.weak_mask(g);
    let kept = g
        .edges()
        .iter()
        .zip(&weak)
        .filter(|&(_, &w)| !w)
        .map(|(&e, _)| e);
    Graph::with_labels(g.labels().to_vec(), kept.chain(lab.added_pairs.iter().copied()))
        .expect("labeling pairs are nodes of g")
}

/// Unit budgets on the labeled pairs and the objective's weights.
pub fn mfp_instance<'g>(g: &'g Graph, lab: &StcLabeling, kind: ObjectiveKind) -> PivotInstance<'g> {
    let budgets = lab
        .weak_edges
        .iter()
        .chain(&lab.added_pairs)
        .map(|&p| (p, 1.0));
    PivotInstance::new(g, kind, derived_graph(g, lab), budgets).expect("unit budgets are valid")
}

/// Costs of single randomized pivots on `derived`, one per stream `0..reps`.
/// `None` marks a clustering infeasible for `kind`.
pub fn pivot_costs(
    g: &Graph,
    derived: &Graph,
    kind: ObjectiveKind,
    seed: u64,
    reps: usize,
) -> Vec<Option<u64>> {
    (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let c = pivot_random_stream(derived, seed, r);
            eval_objective(g, &c, kind).expect("pivot covers every node")
        })
        .collect()
}

/// Cheapest feasible clustering over `reps` randomized pivots (ties to the
/// lowest repetition index).
pub fn best_pivot(
    g: &Graph,
    derived: &Graph,
    kind: ObjectiveKind,
    seed: u64,
    reps: usize,
) -> Result<(Clustering, u64)> {
    (0..reps.max(1) as u64)
        .into_par_iter()
        .filter_map(|r| {
            let c = pivot_random_stream(derived, seed, r);
            let cost = eval_objective(g, &c, kind).expect("pivot covers every node")?;
            Some((cost, r, c))
        })
        .min_by_key(|&(cost, r, _)| (cost, r))
        .map(|(cost, _, c)| (c, cost))
        .ok_or(Error::InfeasibleClustering)
}

fn matching_for(kind: ObjectiveKind, g: &Graph, order_seed: u64) -> (StcLabeling, f64) {
    let t = Instant::now();
    let lab = match kind {
        ObjectiveKind::ClusterDeletion => match_cd(g, order_seed),
        ObjectiveKind::ClusterEditing => match_ce(g, order_seed),
    };
    (lab, t.elapsed().as_secs_f64())
}

fn randomized(
    g: &Graph,
    cfg: &RunConfig,
    algorithm: Algorithm,
    round_on: RoundOn,
) -> Result<RunOutcome> {
    let kind = algorithm.objective();
    let (lab, lb_seconds) = matching_for(kind, g, cfg.order_seed);
    let t = Instant::now();
    let (clustering, ub) = match round_on {
        RoundOn::Derived => best_pivot(g, &derived_graph(g, &lab), kind, cfg.seed, cfg.reps)?,
        RoundOn::Original => best_pivot(g, g, kind, cfg.seed, cfg.reps)?,
    };
    let round_seconds = t.elapsed().as_secs_f64();
    let report = AlgoReport::new(
        g,
        algorithm,
        lab.matching_size as f64,
        ub,
        lb_seconds,
        round_seconds,
        cfg,
    )?;
    Ok(RunOutcome {
        report,
        clustering,
        labeling: Some(lab),
    })
}

fn deterministic(g: &Graph, cfg: &RunConfig, algorithm: Algorithm) -> Result<RunOutcome> {
    let kind = algorithm.objective();
    let (lab, lb_seconds) = matching_for(kind, g, cfg.order_seed);
    let t = Instant::now();
    let inst = mfp_instance(g, &lab, kind);
    let clustering = pivot_deterministic(&inst)?;
    let ub = eval_objective(g, &clustering, kind)?.ok_or(Error::InfeasibleClustering)?;
    let round_seconds = t.elapsed().as_secs_f64();
    let cfg = RunConfig {
        reps: 1,
        ..cfg.clone()
    };
    let report = AlgoReport::new(
        g,
        algorithm,
        lab.matching_size as f64,
        ub,
        lb_seconds,
        round_seconds,
        &cfg,
    )?;
    Ok(RunOutcome {
        report,
        clustering,
        labeling: Some(lab),
    })
}

/// Cluster deletion: match, delete the weak edges, pivot.
pub fn mfp_cd(g: &Graph, cfg: &RunConfig) -> Result<RunOutcome> {
    randomized(g, cfg, Algorithm::MfpCd, RoundOn::Derived)
}

/// Cluster editing: match, flip the covered pairs, pivot on the flipped
/// graph or on `G` itself.
pub fn mfp_ce(g: &Graph, cfg: &RunConfig, round_on: RoundOn) -> Result<RunOutcome> {
    let algorithm = match round_on {
        RoundOn::Derived => Algorithm::MfpCe,
        RoundOn::Original => Algorithm::Pivot,
    };
    randomized(g, cfg, algorithm, round_on)
}

/// Randomized pivot on `G`, reported against the pair-disjoint matching bound.
pub fn pivot_baseline(g: &Graph, cfg: &RunConfig) -> Result<RunOutcome> {
    mfp_ce(g, cfg, RoundOn::Original)
}

pub fn mfp_cd_det(g: &Graph, cfg: &RunConfig) -> Result<RunOutcome> {
    deterministic(g, cfg, Algorithm::MfpCdDet)
}

pub fn mfp_ce_det(g: &Graph, cfg: &RunConfig) -> Result<RunOutcome> {
    deterministic(g, cfg, Algorithm::MfpCeDet)
}

/// Certified ratio of an externally produced clustering against a lower bound.
pub fn aposteriori_ratio(g: &Graph, c: &Clustering, kind: ObjectiveKind, lb: f64) -> Result<f64> {
    let cost = eval_objective(g, c, kind)?.ok_or(Error::InfeasibleClustering)?;
    ratio(lb, cost)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn mfp_cd_examples() {
        let cfg = RunConfig::default();
        let r = mfp_cd(&star3(), &cfg).unwrap().report;
        assert_eq!((r.lb, r.ub, r.ratio), (1.0, 2, 2.0));
        let r = mfp_cd(&triangle(), &cfg).unwrap().report;
        assert_eq!((r.lb, r.ub, r.ratio), (0.0, 0, 1.0));
    }

    #[test]
    fn mfp_ce_examples() {
        let cfg = RunConfig::default();
        let r = mfp_ce(&path3(), &cfg, RoundOn::Derived).unwrap().report;
        assert_eq!((r.lb, r.ub), (1.0, 3));
        let r = mfp_ce(&path3(), &cfg, RoundOn::Original).unwrap().report;
        assert_eq!((r.lb, r.ub), (1.0, 1));
        assert_eq!(r.algorithm, Algorithm::Pivot);
    }

    #[test]
    fn deterministic_examples() {
        let cfg = RunConfig::default();
        let out = mfp_cd_det(&star3(), &cfg).unwrap();
        let ew = out.labeling.unwrap().weak_edges.len() as u64;
        assert_eq!(out.report.ub, 2);
        assert!(out.report.ub <= 2 * ew);
        assert_eq!(mfp_ce_det(&path3(), &cfg).unwrap().report.ub, 3);
        assert_eq!(mfp_cd_det(&triangle(), &cfg).unwrap().report.ub, 0);
        assert_eq!(mfp_ce_det(&triangle(), &cfg).unwrap().report.ub, 0);
    }

    #[test]
    fn aposteriori_examples() {
        let c = Clustering::single_cluster(3);
        let r = aposteriori_ratio(&path3(), &c, ObjectiveKind::ClusterEditing, 1.0).unwrap();
        assert_eq!(r, 1.0);
        let c = Clustering::from_clusters(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let r = aposteriori_ratio(&star3(), &c, ObjectiveKind::ClusterDeletion, 1.0).unwrap();
        assert_eq!(r, 2.0);
        let c = Clustering::single_cluster(4);
        assert!(matches!(
            aposteriori_ratio(&star3(), &c, ObjectiveKind::ClusterDeletion, 1.0),
            Err(Error::InfeasibleClustering)
        ));
        let c = Clustering::singletons(3);
        assert!(matches!(
            aposteriori_ratio(&path3(), &c, ObjectiveKind::ClusterEditing, 0.0),
            Err(Error::ZeroLowerBound { cost: 2 })
        ));
    }

    #[test]
    fn algorithm_ids_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.id().parse::<Algorithm>().unwrap(), a);
        }
        assert!(matches!(
            "louvain".parse::<Algorithm>(),
            Err(Error::UnknownAlgorithm(_))
        ));
    }
}
