use std::sync::Arc;
use std::time::Instant;

use rand::Rng;

use mssc_kernel::{
    kmeans, kmeanspp_reseed, objective_on_active, CentroidSet, Dataset, SampleRef,
};
use vls_core::rng::{purpose, stream};
use vls_core::{
    neighborhood_change_sequential, EngineRng, IterationRecord, Phase, RunRecord,
};

use crate::config::{Algorithm, BigMeansConfig};
use crate::error::SuiteError;
use crate::finalize::evaluate_on_full_data;
use crate::history::{most_frequent_improving_size, ImprovementHistory};
use crate::pool::{worker_pool, BestBoard};
use crate::SuiteOutcome;

/// Shake power recorded for a whole-range size draw.
pub const FULL_RANGE_POWER: u32 = u32::MAX;

/// The size-range variant: independent workers run the keep-the-best loop,
/// but the sample size is re-drawn uniformly from `[min, max]` on the first
/// iteration of every data phase and held for the rest of the phase.
///
/// At termination the size most frequently attached to improving iterations
/// (ties toward the larger size) is realized as one final sample, every
/// worker's incumbent is scored on it, and the best one is delivered.
pub fn big_optima_s3(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
) -> Result<SuiteOutcome, SuiteError> {
    if config.algorithm != Algorithm::BigOptima {
        return Err(SuiteError::InvalidConfig(format!(
            "configuration is tagged {}, not bigoptima",
            config.algorithm.tag()
        )));
    }
    config.validate(dataset)?;
    let started = Instant::now();
    let live_board = BestBoard::new();
    let pool = worker_pool(config.workers, &live_board, |worker, board| {
        range_worker(dataset, config, worker, board)
    });

    let failures = pool.failures();
    let worker_results: Vec<(u32, &(CentroidSet, RunRecord))> = pool.successes().collect();
    if worker_results.is_empty() {
        return Err(SuiteError::AllWorkersFailed {
            workers: config.workers,
            first: failures
                .first()
                .map(|f| f.to_string())
                .unwrap_or_else(|| "no worker survived".into()),
        });
    }

    if worker_results
        .iter()
        .all(|(_, (incumbent, _))| incumbent.active_count() == 0)
    {
        return Err(SuiteError::AllWorkersFailed {
            workers: config.workers,
            first: "no worker completed an iteration within the budget".into(),
        });
    }
    let histories: Vec<ImprovementHistory> = worker_results
        .iter()
        .map(|(_, (_, record))| ImprovementHistory::from_record(record))
        .collect();
    let (_, size_max) = config.sample_size.bounds();
    let (s_opt, s_opt_fallback) = match most_frequent_improving_size(&histories) {
        Some(size) => (size, false),
        None => (size_max, true),
    };

    // realize the final landscape on a stream of its own so worker streams
    // stay untouched by this extra draw
    let mut final_rng = stream(config.seed, purpose::FINAL_EVALUATION);
    let final_sample = SampleRef::draw_uniform(dataset, s_opt, &mut final_rng)?;
    let final_view = final_sample.view(dataset)?;

    // workers compete on the common final landscape; offers go in worker
    // order, so exact ties keep the lowest worker id
    let selection = BestBoard::new();
    for (worker, (centroids, _)) in &worker_results {
        let value = objective_on_active(centroids, &final_view);
        selection.offer(*worker, value, centroids);
    }
    let entry = selection.snapshot().expect("at least one worker offered");

    let evaluation = evaluate_on_full_data(dataset, &entry.centroids)?;
    Ok(SuiteOutcome {
        algorithm: config.algorithm,
        incumbent: entry.centroids,
        labels: evaluation.labels,
        centroids: evaluation.centroids,
        full_objective: evaluation.objective,
        board_objective: entry.objective,
        winner: entry.worker,
        worker_records: worker_results
            .iter()
            .map(|(w, (_, record))| (*w, record.clone()))
            .collect(),
        worker_incumbents: worker_results
            .into_iter()
            .map(|(w, (incumbent, _))| (w, incumbent.clone()))
            .collect(),
        failures,
        s_opt: Some(s_opt),
        s_opt_fallback,
        wall_time: started.elapsed(),
    })
}

fn range_worker(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
    worker: u32,
    board: &BestBoard,
) -> Result<(CentroidSet, RunRecord), SuiteError> {
    let (size_min, size_max) = config.sample_size.bounds();
    let quota = config.data_phase_quota;
    let mut rng = EngineRng::for_worker(config.seed, worker);
    let mut incumbent = CentroidSet::all_degenerate(config.clusters, dataset.cols());
    let mut best_value = f64::INFINITY;
    let mut rows: Vec<IterationRecord> = Vec::new();
    let mut unsuccessful = 0u64;
    let mut fallbacks = 0u64;
    let started = Instant::now();

    let mut t = 0u64;
    let mut phase_size = size_min;
    'outer: while t < config.iterations {
        for phase_iteration in 0..quota {
            if t >= config.iterations {
                break 'outer;
            }
            if let Some(cap) = config.max_wall_clock {
                if started.elapsed() >= cap {
                    break 'outer;
                }
            }
            let iteration_started = Instant::now();
            let full_range_draw = phase_iteration == 0;
            if full_range_draw {
                phase_size = if size_min == size_max {
                    size_min
                } else {
                    rng.sampling.random_range(size_min..=size_max)
                };
            }
            let sample = SampleRef::draw_uniform(dataset, phase_size, &mut rng.sampling)?;
            let view = sample.view(dataset)?;

            let mut working = incumbent.clone();
            if working.any_degenerate() {
                let seeded = kmeanspp_reseed(&view, &mut working, &mut rng.init)?;
                fallbacks += u64::from(seeded.uniform_fallbacks);
            }
            let searched = kmeans(&view, &working, config.kmeans_tol, config.kmeans_max_iter)?;
            let comparison = if config.reevaluate_on_new_sample {
                objective_on_active(&incumbent, &view)
            } else {
                best_value
            };
            let change = neighborhood_change_sequential(searched.objective, comparison, 0, 0, 0);
            if change.accepted {
                incumbent = searched.centroids;
                best_value = searched.objective;
                board.offer(worker, best_value, &incumbent);
            } else {
                unsuccessful += 1;
            }
            rows.push(IterationRecord {
                t,
                phase: Phase::Data,
                shake_power: if full_range_draw { FULL_RANGE_POWER } else { 0 },
                sample_size: phase_size,
                objective: best_value,
                improved: change.accepted,
                elapsed_ms: iteration_started.elapsed().as_secs_f64() * 1e3,
            });
            t += 1;
        }
    }

    let record = RunRecord {
        iterations: rows,
        final_objective: best_value,
        unsuccessful_iterations: unsuccessful,
        uniform_seed_fallbacks: fallbacks,
        wall_time: started.elapsed(),
    };
    Ok((incumbent, record))
}
