//! Sample-restart clustering on top of the landscape-search engine.
//!
//! All three algorithms share one skeleton: draw a fresh uniform sample each
//! iteration, repair any degenerate centroids with D² seeding, run Lloyd from
//! the incumbent centroids, and keep the candidate only when it strictly
//! improves the best recorded sample objective. They differ in how the sample
//! size evolves and whether the incumbent solution itself is perturbed:
//!
//! * [`big_means`] — fixed sample size; the plain keep-the-best restart loop.
//! * [`big_optima_s3`] — a size range: the first iteration of each phase
//!   draws the size uniformly from the range, the rest of the phase keeps it;
//!   at the end the size most often associated with improvements is realized
//!   once more and every worker's incumbent competes on it.
//! * [`big_vns_clust`] — fixed sample size plus a cyclic solution shake that
//!   re-seeds `k` centroids per iteration, `k` cycling regardless of
//!   improvement.
//!
//! Workers are fully independent (per-worker random streams derived from the
//! root seed) except for the [`BestBoard`], a shared cell that only ever
//! replaces its value with a strictly smaller objective.

mod baseline;
mod bigmeans;
mod bigoptima;
mod bigvns;
mod config;
mod error;
mod finalize;
mod history;
mod pool;
mod problem;

pub use baseline::{kmeans_restarts_baseline, BaselineOutcome};
pub use bigmeans::{big_means, big_means_as_bvls};
pub use bigoptima::{big_optima_s3, FULL_RANGE_POWER};
pub use bigvns::big_vns_clust;
pub use config::{Algorithm, BigMeansConfig, SampleSizeSpec};
pub use error::SuiteError;
pub use finalize::{evaluate_on_full_data, FullEvaluation};
pub use history::{most_frequent_improving_size, ImprovementEvent, ImprovementHistory};
pub use pool::{worker_pool, BestBoard, BoardEntry, PoolOutcome, WorkerFailure};
pub use problem::{reseed_random_slots, MsscProblem};

use std::sync::Arc;

use mssc_kernel::{CentroidSet, Dataset, LabelAssignment};
use vls_core::RunRecord;

/// Result of one suite algorithm run.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub algorithm: Algorithm,
    /// The winning worker's incumbent centroids, as fitted on samples.
    pub incumbent: CentroidSet,
    /// Full-data labels against the incumbent.
    pub labels: LabelAssignment,
    /// Label-partition means: the delivered centroids.
    pub centroids: CentroidSet,
    /// Cost of the delivered partition on the full dataset.
    pub full_objective: f64,
    /// Objective of the selection board's winning entry (sample scale).
    pub board_objective: f64,
    /// Worker that produced the returned centroids.
    pub winner: u32,
    /// Per-worker traces, in worker order (failed workers are absent).
    pub worker_records: Vec<(u32, RunRecord)>,
    /// Per-worker final incumbents, aligned with `worker_records`.
    pub worker_incumbents: Vec<(u32, CentroidSet)>,
    pub failures: Vec<WorkerFailure>,
    /// Realized final-evaluation sample size (size-range algorithm only).
    pub s_opt: Option<usize>,
    /// True when no improvement was ever recorded and the final size fell
    /// back to the range maximum.
    pub s_opt_fallback: bool,
    pub wall_time: std::time::Duration,
}

impl SuiteOutcome {
    /// Trace of the winning worker.
    pub fn winner_record(&self) -> &RunRecord {
        &self
            .worker_records
            .iter()
            .find(|(w, _)| *w == self.winner)
            .expect("winner has a record")
            .1
    }
}

/// Dispatches on the configured algorithm tag.
pub fn run_algorithm(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
) -> Result<SuiteOutcome, SuiteError> {
    match config.algorithm {
        Algorithm::BigMeans => big_means(dataset, config),
        Algorithm::BigOptima => big_optima_s3(dataset, config),
        Algorithm::BigVns => big_vns_clust(dataset, config),
    }
}
