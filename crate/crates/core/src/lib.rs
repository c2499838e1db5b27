//! Lower bounds and approximations for cluster editing and cluster deletion
//! through strong triadic closure labelings.
//!
//! The pipeline is *match, flip, pivot*: a greedy maximal matching of open
//! wedges gives a lower bound and a labeling ([`stc`]); flipping the labeled
//! pairs gives a derived graph; pivoting on it ([`pivot`]) gives a clustering
//! within a constant factor of the bound ([`algorithms`]). Fractional
//! labelings from an external LP solver can be rounded the same way ([`lp`]).
//!
//! ```
//! use stc_cluster::{Graph, algorithms::{mfp_cd, RunConfig}};
//!
//! let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
//! let out = mfp_cd(&star, &RunConfig::default()).unwrap();
//! assert_eq!((out.report.lb, out.report.ub), (1.0, 2));
//! ```

pub mod algorithms;
pub mod bench;
pub mod clustering;
pub mod error;
pub mod graph;
pub mod io;
pub mod lp;
pub mod objective;
pub mod oracle;
pub mod pivot;
pub mod stc;
pub mod wedge;

pub use algorithms::{Algorithm, AlgoReport, RoundOn, RunConfig, RunOutcome};
pub use clustering::Clustering;
pub use error::{Error, Result};
pub use graph::Graph;
pub use lp::FractionalSolution;
pub use objective::{eval_objective, ObjectiveKind};
pub use pivot::PivotInstance;
pub use stc::{Flavor, StcLabeling};
pub use wedge::OpenWedge;
