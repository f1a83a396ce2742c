use std::sync::Arc;
use std::time::Instant;

use mssc_kernel::{
    kmeans, kmeanspp_reseed, objective_on_active, CentroidSet, Dataset, SampleRef,
};
use vls_core::{
    evaluate_landscape, neighborhood_change_sequential, run_bvls_with_rng, AcceptanceRule, Budget,
    BvlsOutcome, ChangeScheme, EngineRng, FormulationKind, FormulationRegistry, IterationRecord,
    LandscapeNeighborhoods, NeighborhoodSpec, Phase, PhaseSwitch, PowerBounds, RunRecord,
    VlsConfig,
};

use crate::config::{Algorithm, BigMeansConfig};
use crate::error::SuiteError;
use crate::finalize::evaluate_on_full_data;
use crate::pool::{worker_pool, BestBoard};
use crate::problem::MsscProblem;
use crate::SuiteOutcome;

/// The fixed-size sample-restart loop.
///
/// Centroids start all-degenerate with an infinite recorded best. Every
/// iteration draws a fresh uniform sample, repairs degenerate slots with D²
/// seeding, runs Lloyd from the incumbent, and accepts the result only when
/// its sample objective strictly beats the recorded best. After the budget,
/// the winning worker's incumbent labels the full dataset.
pub fn big_means(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
) -> Result<SuiteOutcome, SuiteError> {
    if config.algorithm != Algorithm::BigMeans {
        return Err(SuiteError::InvalidConfig(format!(
            "configuration is tagged {}, not bigmeans",
            config.algorithm.tag()
        )));
    }
    config.validate(dataset)?;
    let started = Instant::now();
    let board = BestBoard::new();
    let pool = worker_pool(config.workers, &board, |worker, board| {
        fixed_size_worker(dataset, config, worker, board, None)
    });

    assemble_outcome(dataset, config, started, board, pool)
}

/// One worker of the fixed-size loop; also hosts the cyclic solution-shake
/// variant when `shake` is set.
pub(crate) fn fixed_size_worker(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
    worker: u32,
    board: &BestBoard,
    shake: Option<PowerBounds>,
) -> Result<(CentroidSet, RunRecord), SuiteError> {
    let size = config
        .sample_size
        .fixed()
        .expect("validated fixed sample size");
    let clusters = config.clusters;
    let mut rng = EngineRng::for_worker(config.seed, worker);
    let mut incumbent = CentroidSet::all_degenerate(clusters, dataset.cols());
    let mut best_value = f64::INFINITY;
    let mut rows: Vec<IterationRecord> = Vec::new();
    let mut unsuccessful = 0u64;
    let mut fallbacks = 0u64;
    let mut shake_power = shake.map(|b| b.min).unwrap_or(0);
    let started = Instant::now();

    for t in 0..config.iterations {
        if let Some(cap) = config.max_wall_clock {
            if started.elapsed() >= cap {
                break;
            }
        }
        let iteration_started = Instant::now();
        let sample = SampleRef::draw_uniform(dataset, size, &mut rng.sampling)?;
        let view = sample.view(dataset)?;

        let mut working = incumbent.clone();
        if working.any_degenerate() {
            let seeded = kmeanspp_reseed(&view, &mut working, &mut rng.init)?;
            fallbacks += u64::from(seeded.uniform_fallbacks);
        }
        let used_power = shake_power;
        if let Some(bounds) = shake {
            if used_power > 0 {
                let seeded = crate::problem::reseed_random_slots(
                    &view,
                    &mut working,
                    used_power,
                    &mut rng.shaking,
                )?;
                fallbacks += u64::from(seeded.uniform_fallbacks);
            }
            shake_power = vls_core::neighborhood_change_cyclic(used_power, bounds.min, bounds.max);
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
            shake_power: used_power,
            sample_size: size,
            objective: best_value,
            improved: change.accepted,
            elapsed_ms: iteration_started.elapsed().as_secs_f64() * 1e3,
        });
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

pub(crate) fn assemble_outcome(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
    started: Instant,
    board: BestBoard,
    pool: crate::pool::PoolOutcome<(CentroidSet, RunRecord)>,
) -> Result<SuiteOutcome, SuiteError> {
    let failures = pool.failures();
    let worker_records: Vec<(u32, RunRecord)> = pool
        .successes()
        .map(|(w, (_, record))| (w, record.clone()))
        .collect();
    let worker_incumbents: Vec<(u32, CentroidSet)> = pool
        .successes()
        .map(|(w, (incumbent, _))| (w, incumbent.clone()))
        .collect();
    let entry = board.snapshot().ok_or_else(|| SuiteError::AllWorkersFailed {
        workers: config.workers,
        first: failures
            .first()
            .map(|f| f.to_string())
            .unwrap_or_else(|| "no worker ever published a solution".into()),
    })?;
    let evaluation = evaluate_on_full_data(dataset, &entry.centroids)?;
    Ok(SuiteOutcome {
        algorithm: config.algorithm,
        incumbent: entry.centroids,
        labels: evaluation.labels,
        centroids: evaluation.centroids,
        full_objective: evaluation.objective,
        board_objective: entry.objective,
        winner: entry.worker,
        worker_records,
        worker_incumbents,
        failures,
        s_opt: None,
        s_opt_fallback: false,
        wall_time: started.elapsed(),
    })
}

/// The same search expressed through the generic engine: fixed sample size,
/// zero shake power, a data-only quota, and keep-the-best acceptance.
///
/// For a given seed this consumes the random streams in exactly the order
/// the literal loop does, so the two traces are comparable row for row.
pub fn big_means_as_bvls(
    dataset: &Arc<Dataset>,
    config: &BigMeansConfig,
) -> Result<BvlsOutcome<CentroidSet>, SuiteError> {
    config.validate(dataset)?;
    let size = config
        .sample_size
        .fixed()
        .ok_or_else(|| SuiteError::InvalidConfig("engine route needs a fixed size".into()))?;
    let registry = FormulationRegistry::single(FormulationKind::Mssc {
        clusters: config.clusters,
    })?;
    let neighborhoods = LandscapeNeighborhoods::new(
        NeighborhoodSpec::data_fixed_size(size)?,
        NeighborhoodSpec::formulation_fixed(registry.len())?,
    )?;
    // the initial sample is a placeholder: the first zero-power shake
    // redraws membership before anything is evaluated on it
    let initial = SampleRef::new(dataset, (0..size).collect())?;
    let start_landscape =
        evaluate_landscape(dataset, initial, *registry.by_index(0)?, &registry)?;
    let mut engine_config = VlsConfig::new(
        [PowerBounds::fixed(0), PowerBounds::fixed(0)],
        [1, 0],
        Budget::iterations(config.iterations),
        config.seed,
    );
    if let Some(cap) = config.max_wall_clock {
        engine_config.budget = engine_config.budget.with_wall_clock(cap);
    }
    engine_config.acceptance = if config.reevaluate_on_new_sample {
        AcceptanceRule::PerturbedObjective
    } else {
        AcceptanceRule::RecordedBest
    };
    engine_config.change_schemes = [ChangeScheme::Sequential; 2];
    engine_config.phase_switch = PhaseSwitch::IterationQuota;

    let problem = MsscProblem::new(config.kmeans_tol, config.kmeans_max_iter);
    let start = CentroidSet::all_degenerate(config.clusters, dataset.cols());
    let rng = EngineRng::for_worker(config.seed, 0);
    let mut outcome = run_bvls_with_rng(
        &problem,
        start,
        start_landscape,
        &registry,
        &neighborhoods,
        &engine_config,
        rng,
    )?;
    outcome.record.uniform_seed_fallbacks = problem.seed_fallbacks();
    Ok(outcome)
}
