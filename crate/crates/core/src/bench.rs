//! Benchmark harness: every (graph, algorithm) pair becomes one CSV row.
//!
//! Each run executes on its own thread and is abandoned (left to finish in
//! the background, its result discarded) once the time limit passes; the row
//! is then marked `timeout`. A graph that fails to load or an algorithm that
//! errors produces an `error: ...` row instead of aborting the bench.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{mpsc, Arc};
use std::thread;
use std::time::Duration;

use crate::algorithms::{
    mfp_cd, mfp_cd_det, mfp_ce, mfp_ce_det, pivot_baseline, Algorithm, AlgoReport, RoundOn,
    RunConfig, DEFAULT_REPS,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{load_fractional, load_graph_auto};
use crate::lp::{lp_round_stc, lp_round_stcplus};
use crate::oracle::{opt_clustering_capped, opt_labeling};
use crate::stc::Flavor;

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(600);

pub const CSV_COLUMNS: [&str; 12] = [
    "graph",
    "n",
    "m",
    "algorithm",
    "lb",
    "ub",
    "ratio",
    "lb_seconds",
    "round_seconds",
    "seed",
    "reps",
    "status",
];

/// Appended after [`CSV_COLUMNS`] when the oracle is enabled.
pub const ORACLE_COLUMNS: [&str; 3] = ["opt_clustering", "opt_labeling", "opt_ratio"];

#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// Graph files, or directories whose files are all taken (sorted by name).
    pub inputs: Vec<PathBuf>,
    pub algorithms: Vec<Algorithm>,
    pub reps: usize,
    pub seed: u64,
    pub order_seed: u64,
    pub time_limit: Duration,
    /// Run the exact oracle on graphs with at most this many nodes.
    pub oracle_cap: Option<usize>,
    /// Directory holding `<stem>.stc.frac` / `<stem>.stc+.frac` for the LP algorithms.
    pub frac_dir: Option<PathBuf>,
    /// Restrict every graph to its largest connected component.
    pub lcc: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            inputs: Vec::new(),
            algorithms: vec![Algorithm::MfpCd],
            reps: DEFAULT_REPS,
            seed: 0,
            order_seed: 0,
            time_limit: DEFAULT_TIME_LIMIT,
            oracle_cap: None,
            frac_dir: None,
            lcc: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Ok,
    Timeout,
    Error(String),
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Ok => f.write_str("ok"),
            Status::Timeout => f.write_str("timeout"),
            Status::Error(msg) => write!(f, "error: {msg}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleValues {
    pub opt_clustering: Option<u64>,
    pub opt_labeling: Option<u64>,
}

impl OracleValues {
    /// `OPT / OPT_labeling`, 1 when both are 0.
    pub fn ratio(&self) -> Option<f64> {
        match (self.opt_clustering?, self.opt_labeling?) {
            (0, 0) => Some(1.0),
            (_, 0) => None,
            (c, l) => Some(c as f64 / l as f64),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub graph: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub algorithm: String,
    pub report: Option<AlgoReport>,
    pub seed: u64,
    pub reps: usize,
    pub status: Status,
    pub oracle: Option<OracleValues>,
}

impl BenchRow {
    pub fn from_report(report: AlgoReport) -> Self {
        BenchRow {
            graph: report.graph.clone(),
            n: Some(report.n),
            m: Some(report.m),
            algorithm: report.algorithm.to_string(),
            seed: report.seed,
            reps: report.reps,
            report: Some(report),
            status: Status::Ok,
            oracle: None,
        }
    }
}

/// Files named by `inputs`, with directories expanded.
pub fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(p)
                .map_err(|e| Error::io(p, e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file() && f.extension().is_none_or(|x| x != "frac"))
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn frac_path(cfg: &BenchConfig, name: &str, flavor: Flavor) -> Option<PathBuf> {
    let dir = cfg.frac_dir.as_ref()?;
    Some(dir.join(format!("{name}.{}.frac", flavor.to_string().to_ascii_lowercase())))
}

fn run_one(g: &Graph, alg: Algorithm, run: &RunConfig, frac: Option<&Path>) -> Result<AlgoReport> {
    let out = match alg {
        Algorithm::MfpCd => mfp_cd(g, run)?,
        Algorithm::MfpCe => mfp_ce(g, run, RoundOn::Derived)?,
        Algorithm::MfpCdDet => mfp_cd_det(g, run)?,
        Algorithm::MfpCeDet => mfp_ce_det(g, run)?,
        Algorithm::Pivot => pivot_baseline(g, run)?,
        Algorithm::LpStc | Algorithm::LpStcPlus => {
            let path = frac.ok_or_else(|| Error::MissingFractionalSolution(alg.to_string()))?;
            if !path.exists() {
                return Err(Error::MissingFractionalSolution(format!(
                    "{alg} ({} not found)",
                    path.display()
                )));
            }
            let sol = load_fractional(g, path)?;
            if alg == Algorithm::LpStc {
                lp_round_stc(g, &sol, run)?
            } else {
                lp_round_stcplus(g, &sol, run)?
            }
        }
    };
    Ok(out.report)
}

fn run_with_limit(
    g: &Arc<Graph>,
    alg: Algorithm,
    run: RunConfig,
    frac: Option<PathBuf>,
    limit: Duration,
) -> std::result::Result<AlgoReport, Status> {
    let (tx, rx) = mpsc::channel();
    let g = Arc::clone(g);
    thread::spawn(move || {
        let _ = tx.send(run_one(&g, alg, &run, frac.as_deref()));
    });
    match rx.recv_timeout(limit) {
        Ok(Ok(r)) => Ok(r),
        Ok(Err(e)) => Err(Status::Error(e.to_string())),
        Err(mpsc::RecvTimeoutError::Timeout) => Err(Status::Timeout),
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            Err(Status::Error("run panicked".to_string()))
        }
    }
}

fn oracle_values(g: &Graph, alg: Algorithm, cap: usize) -> OracleValues {
    let kind = alg.objective();
    let flavor = match kind {
        crate::objective::ObjectiveKind::ClusterDeletion => Flavor::Stc,
        crate::objective::ObjectiveKind::ClusterEditing => Flavor::StcPlus,
    };
    OracleValues {
        opt_clustering: opt_clustering_capped(g, kind, cap).ok().map(|r| r.opt_value),
        opt_labeling: (g.n() <= cap)
            .then(|| opt_labeling(g, flavor).ok().map(|r| r.opt_value))
            .flatten(),
    }
}

/// Runs every configured (graph, algorithm) pair, in input order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for path in expand_inputs(&cfg.inputs)? {
        let name = graph_name(&path);
        let loaded = load_graph_auto(&path).map(|g| if cfg.lcc { g.largest_component() } else { g });
        let g = match loaded {
            Ok(g) => Arc::new(g),
            Err(e) => {
                for &alg in &cfg.algorithms {
                    rows.push(BenchRow {
                        graph: name.clone(),
                        n: None,
                        m: None,
                        algorithm: alg.to_string(),
                        report: None,
                        seed: cfg.seed,
                        reps: cfg.reps,
                        status: Status::Error(e.to_string()),
                        oracle: None,
                    });
                }
                continue;
            }
        };
        for &alg in &cfg.algorithms {
            let run = RunConfig {
                reps: cfg.reps,
                seed: cfg.seed,
                order_seed: cfg.order_seed,
                graph_name: name.clone(),
            };
            let frac = match alg {
                Algorithm::LpStc => frac_path(cfg, &name, Flavor::Stc),
                Algorithm::LpStcPlus => frac_path(cfg, &name, Flavor::StcPlus),
                _ => None,
            };
            let (report, status) = match run_with_limit(&g, alg, run, frac, cfg.time_limit) {
                Ok(r) => (Some(r), Status::Ok),
                Err(s) => (None, s),
            };
            let oracle = cfg
                .oracle_cap
                .map(|cap| oracle_values(&g, alg, cap));
            rows.push(BenchRow {
                graph: name.clone(),
                n: Some(g.n()),
                m: Some(g.m()),
                algorithm: alg.to_string(),
                reps: report.as_ref().map_or(cfg.reps, |r| r.reps),
                report,
                seed: cfg.seed,
                status,
                oracle,
            });
        }
    }
    Ok(rows)
}

/// Three significant digits, never scientific notation.
pub fn format_seconds(x: f64) -> String {
    if x <= 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let decimals = (2 - x.log10().floor() as i32).max(0) as usize;
    let scale = 10f64.powi(decimals as i32);
    let rounded = (x * scale).round() / scale;
    format!("{rounded:.decimals$}")
}

/// Integers print bare; fractional bounds keep up to three decimals.
pub fn format_bound(x: f64) -> String {
    if x.fract() == 0.0 {
        format!("{x:.0}")
    } else {
        let s = format!("{x:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

pub fn format_ratio(x: f64) -> String {
    format!("{x:.3}")
}

/// Writes the header and all rows. Oracle columns appear iff any row has oracle values.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let with_oracle = rows.iter().any(|r| r.oracle.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = CSV_COLUMNS.to_vec();
    if with_oracle {
        header.extend(ORACLE_COLUMNS);
    }
    w.write_record(&header)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for row in rows {
        let r = row.report.as_ref();
        let mut rec = vec![
            row.graph.clone(),
            opt(row.n.map(|x| x.to_string())),
            opt(row.m.map(|x| x.to_string())),
            row.algorithm.clone(),
            opt(r.map(|r| format_bound(r.lb))),
            opt(r.map(|r| r.ub.to_string())),
            opt(r.map(|r| format_ratio(r.ratio))),
            opt(r.map(|r| format_seconds(r.lb_seconds))),
            opt(r.map(|r| format_seconds(r.round_seconds))),
            row.seed.to_string(),
            row.reps.to_string(),
            row.status.to_string(),
        ];
        if with_oracle {
            let o = row.oracle.as_ref();
            rec.push(opt(o.and_then(|o| o.opt_clustering).map(|x| x.to_string())));
            rec.push(opt(o.and_then(|o| o.opt_labeling).map(|x| x.to_string())));
            rec.push(opt(o.and_then(|o| o.ratio()).map(format_ratio)));
        }
        w.write_record(&rec)?;
    }
    w.flush().map_err(|e| Error::io("<csv output>", e))?;
    Ok(())
}
