use std::sync::Arc;
use std::time::Instant;

use mssc_kernel::Dataset;

use crate::bigmeans::{assemble_outcome, fixed_size_worker};
use crate::config::{Algorithm, BigMeansConfig};
use crate::error::SuiteError;
use crate::pool::{worker_pool, BestBoard};
use crate::SuiteOutcome;

/// The fixed-size loop with an extra cyclic solution shake: each iteration
/// re-seeds `k` uniformly chosen incumbent centroids from the fresh sample
/// before Lloyd runs, and `k` steps through its range every iteration no
/// matter whether the incumbent improved.
pub fn big_vns_clust(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
) -> Result<SuiteOutcome, SuiteError> {
    if config.algorithm != Algorithm::BigVns {
        return Err(SuiteError::InvalidConfig(format!(
            "configuration is tagged {}, not bigvns",
            config.algorithm.tag()
        )));
    }
    config.validate(dataset)?;
    let shake = config.solution_shake.expect("validated shake range");
    let started = Instant::now();
    let board = BestBoard::new();
    let pool = worker_pool(config.workers, &board, |worker, board| {
        fixed_size_worker(dataset, config, worker, board, Some(shake))
    });
    assemble_outcome(dataset, config, started, board, pool)
}
