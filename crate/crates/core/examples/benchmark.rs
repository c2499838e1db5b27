//! Benchmark harness over a directory of graphs, CSV to stdout.
//!
//!     cargo run --release --example benchmark [dir-or-files...]
//!
//! Without arguments a few random graphs are written to a temporary directory.

use std::path::PathBuf;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stc_cluster::bench::{run_bench, write_csv, BenchConfig};
use stc_cluster::io::write_edge_list;
use stc_cluster::{Algorithm, Graph};

fn main() -> anyhow::Result<()> {
    let mut inputs: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    let scratch = std::env::temp_dir().join("stc-bench-example");
    if inputs.is_empty() {
        std::fs::create_dir_all(&scratch)?;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (i, &(n, p)) in [(8, 0.4), (60, 0.1), (400, 0.02)].iter().enumerate() {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.random_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges)?;
            let path = scratch.join(format!("er{i}.txt"));
            write_edge_list(&g, std::fs::File::create(&path)?)?;
        }
        inputs.push(scratch);
    }
    let cfg = BenchConfig {
        inputs,
        algorithms: vec![Algorithm::MfpCd, Algorithm::MfpCdDet, Algorithm::MfpCe, Algorithm::Pivot],
        reps: 50,
        seed: 0,
        order_seed: 0,
        time_limit: Duration::from_secs(60),
        oracle_cap: Some(8),
        frac_dir: None,
        lcc: false,
    };
    write_csv(&run_bench(&cfg)?, std::io::stdout().lock())?;
    Ok(())
}
