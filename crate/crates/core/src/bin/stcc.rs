use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use stc_cluster::algorithms::{
    aposteriori_ratio, mfp_cd, mfp_cd_det, mfp_ce, mfp_ce_det, pivot_baseline, RunConfig,
    DEFAULT_REPS,
};
use stc_cluster::bench::{run_bench, write_csv, BenchConfig, BenchRow};
use stc_cluster::io::{load_clustering, load_fractional, load_graph_auto, save_clustering, write_labeling};
use stc_cluster::lp::{lp_round_stc, lp_round_stcplus};
use stc_cluster::oracle::{opt_clustering_capped, opt_labeling_capped, DEFAULT_MAX_CANDIDATES, DEFAULT_MAX_NODES};
use stc_cluster::stc::{match_cd, match_ce};
use stc_cluster::{eval_objective, Algorithm, Flavor, Graph, ObjectiveKind, RoundOn};

/// Lower bounds and approximate clusterings for cluster editing / deletion.
#[derive(Parser)]
#[command(name = "stcc", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "STCC_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Edge list, or Matrix Market when the extension is `.mtx`.
    graph: PathBuf,
    /// Keep only the largest connected component.
    #[arg(long)]
    lcc: bool,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        let g = load_graph_auto(&self.graph)?;
        Ok(if self.lcc { g.largest_component() } else { g })
    }

    fn name(&self) -> String {
        stem(&self.graph)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Wedge-matching lower bound.
    Lb {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value = "cd")]
        obj: ObjectiveKind,
        /// 0 = natural wedge order.
        #[arg(long, default_value_t = 0)]
        order_seed: u64,
        /// Also write the labeling here.
        #[arg(long)]
        labeling_out: Option<PathBuf>,
    },
    /// Run one algorithm; prints a CSV row and optionally writes the clustering.
    Cluster {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        alg: String,
        #[arg(long, default_value_t = DEFAULT_REPS)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        order_seed: u64,
        /// Fractional solution for lp-stc / lp-stc+.
        #[arg(long)]
        frac_solution: Option<PathBuf>,
        /// Clustering output (one cluster id per line).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A-posteriori ratio of an external clustering.
    Ratio {
        #[command(flatten)]
        input: GraphArgs,
        clustering: PathBuf,
        #[arg(long, default_value = "ce")]
        obj: ObjectiveKind,
        /// Lower bound; defaults to the wedge-matching bound for `--obj`.
        #[arg(long)]
        lb: Option<f64>,
    },
    /// Benchmark several graphs and algorithms into CSV.
    Bench {
        /// Graph files or directories.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Comma-separated algorithm ids.
        #[arg(long, default_value = "mfp-cd", value_delimiter = ',')]
        alg: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_REPS)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        order_seed: u64,
        /// CSV output (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-run time limit in seconds.
        #[arg(long, default_value_t = 600.0)]
        time_limit: f64,
        /// Add exact optima for graphs with at most this many nodes.
        #[arg(long)]
        oracle_cap: Option<usize>,
        /// Directory with `<graph>.stc.frac` / `<graph>.stc+.frac`.
        #[arg(long)]
        frac_dir: Option<PathBuf>,
        #[arg(long)]
        lcc: bool,
    },
    /// Exact optimum clustering and labeling of a tiny graph.
    Oracle {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value = "cd")]
        obj: ObjectiveKind,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: usize,
    },
}

fn stem(p: &Path) -> String {
    p.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn flavor_of(kind: ObjectiveKind) -> Flavor {
    match kind {
        ObjectiveKind::ClusterDeletion => Flavor::Stc,
        ObjectiveKind::ClusterEditing => Flavor::StcPlus,
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let stdout = io::stdout();
    match cli.cmd {
        Cmd::Lb {
            input,
            obj,
            order_seed,
            labeling_out,
        } => {
            let g = input.load()?;
            let t = Instant::now();
            let lab = match obj {
                ObjectiveKind::ClusterDeletion => match_cd(&g, order_seed),
                ObjectiveKind::ClusterEditing => match_ce(&g, order_seed),
            };
            let secs = t.elapsed().as_secs_f64();
            println!("LB {}", lab.matching_size);
            println!("seconds {secs:.6}");
            if let Some(path) = labeling_out {
                let f = std::fs::File::create(&path)
                    .with_context(|| format!("creating {}", path.display()))?;
                write_labeling(&g, &lab, io::BufWriter::new(f))?;
            }
        }
        Cmd::Cluster {
            input,
            alg,
            reps,
            seed,
            order_seed,
            frac_solution,
            out,
        } => {
            let alg: Algorithm = alg.parse()?;
            let g = input.load()?;
            let cfg = RunConfig {
                reps,
                seed,
                order_seed,
                graph_name: input.name(),
            };
            let outcome = match alg {
                Algorithm::MfpCd => mfp_cd(&g, &cfg)?,
                Algorithm::MfpCe => mfp_ce(&g, &cfg, RoundOn::Derived)?,
                Algorithm::MfpCdDet => mfp_cd_det(&g, &cfg)?,
                Algorithm::MfpCeDet => mfp_ce_det(&g, &cfg)?,
                Algorithm::Pivot => pivot_baseline(&g, &cfg)?,
                Algorithm::LpStc | Algorithm::LpStcPlus => {
                    let Some(path) = frac_solution else {
                        return Err(stc_cluster::Error::MissingFractionalSolution(alg.to_string()).into());
                    };
                    let sol = load_fractional(&g, &path)?;
                    if alg == Algorithm::LpStc {
                        lp_round_stc(&g, &sol, &cfg)?
                    } else {
                        lp_round_stcplus(&g, &sol, &cfg)?
                    }
                }
            };
            if let Some(path) = out {
                save_clustering(&outcome.clustering, &path)?;
            }
            write_csv(&[BenchRow::from_report(outcome.report)], stdout.lock())?;
        }
        Cmd::Ratio {
            input,
            clustering,
            obj,
            lb,
        } => {
            let g = input.load()?;
            let c = load_clustering(&clustering)?;
            let lb = lb.unwrap_or_else(|| match obj {
                ObjectiveKind::ClusterDeletion => match_cd(&g, 0).matching_size as f64,
                ObjectiveKind::ClusterEditing => match_ce(&g, 0).matching_size as f64,
            });
            let ub = eval_objective(&g, &c, obj)?;
            let Some(ub) = ub else {
                bail!("clustering is infeasible for cluster deletion (a cluster is not a clique)");
            };
            let ratio = aposteriori_ratio(&g, &c, obj, lb)?;
            println!("UB {ub}");
            println!("LB {lb}");
            println!("ratio {ratio:.3}");
        }
        Cmd::Bench {
            inputs,
            alg,
            reps,
            seed,
            order_seed,
            out,
            time_limit,
            oracle_cap,
            frac_dir,
            lcc,
        } => {
            if reps == 0 {
                bail!("--reps must be at least 1");
            }
            if !time_limit.is_finite() || time_limit <= 0.0 {
                bail!("--time-limit must be a positive number of seconds");
            }
            let algorithms = alg
                .iter()
                .map(|a| a.parse::<Algorithm>())
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = BenchConfig {
                inputs,
                algorithms,
                reps,
                seed,
                order_seed,
                time_limit: Duration::from_secs_f64(time_limit),
                oracle_cap,
                frac_dir,
                lcc,
            };
            let rows = run_bench(&cfg)?;
            match out {
                Some(path) => {
                    let f = std::fs::File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_csv(&rows, f)?;
                }
                None => write_csv(&rows, stdout.lock())?,
            }
        }
        Cmd::Oracle {
            input,
            obj,
            max_nodes,
            max_candidates,
        } => {
            let g = input.load()?;
            let c = opt_clustering_capped(&g, obj, max_nodes)?;
            let l = opt_labeling_capped(&g, flavor_of(obj), max_candidates)?;
            println!("OPT_{} {}", obj.short_name().to_uppercase(), c.opt_value);
            println!("OPT_{} {}", flavor_of(obj), l.opt_value);
        }
    }
    io::stdout().flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
