use std::time::{Duration, Instant};

use mssc_kernel::{kmeans, kmeanspp_init, CentroidSet, Dataset};
use vls_core::rng::{derive_seed, purpose, stream};

use crate::error::SuiteError;
use crate::finalize::evaluate_on_full_data;

/// Best-of-`restarts` full-data Lloyd runs from fresh D² seedings.
#[derive(Debug, Clone)]
pub struct BaselineOutcome {
    /// Partition cost of the best restart, scored like the suite algorithms.
    pub best_objective: f64,
    pub best_centroids: CentroidSet,
    /// Raw converged objective of each restart, in restart order.
    pub restart_objectives: Vec<f64>,
    pub restart_wall_times: Vec<Duration>,
    pub wall_time: Duration,
}

pub fn kmeans_restarts_baseline(
    dataset: &Dataset,
    clusters: usize,
    restarts: u32,
    seed: u64,
    kmeans_tol: f64,
    kmeans_max_iter: u32,
) -> Result<BaselineOutcome, SuiteError> {
    if restarts == 0 {
        return Err(SuiteError::InvalidConfig(
            "baseline needs at least one restart".into(),
        ));
    }
    let view = dataset.full_view();
    let started = Instant::now();
    let mut objectives = Vec::with_capacity(restarts as usize);
    let mut times = Vec::with_capacity(restarts as usize);
    let mut best: Option<(f64, CentroidSet)> = None;
    for restart in 0..restarts {
        let restart_started = Instant::now();
        let mut rng = stream(derive_seed(seed, purpose::BASELINE), u64::from(restart));
        let (init, _) = kmeanspp_init(&view, clusters, &mut rng)?;
        let out = kmeans(&view, &init, kmeans_tol, kmeans_max_iter)?;
        times.push(restart_started.elapsed());
        objectives.push(out.objective);
        if best.as_ref().map(|(v, _)| out.objective < *v).unwrap_or(true) {
            best = Some((out.objective, out.centroids));
        }
    }
    let (_, best_centroids) = best.expect("at least one restart ran");
    let evaluation = evaluate_on_full_data(dataset, &best_centroids)?;
    Ok(BaselineOutcome {
        best_objective: evaluation.objective,
        best_centroids: evaluation.centroids,
        restart_objectives: objectives,
        restart_wall_times: times,
        wall_time: started.elapsed(),
    })
}
