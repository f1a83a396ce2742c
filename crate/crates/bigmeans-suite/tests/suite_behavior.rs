//! Cross-checks between the literal keep-the-best loops, the engine route,
//! and the published-board semantics.

use std::sync::Arc;

use bigmeans_suite::{
    big_means, big_means_as_bvls, big_optima_s3, big_vns_clust, most_frequent_improving_size,
    BigMeansConfig, ImprovementHistory,
};
use mssc_kernel::{kmeans, kmeanspp_reseed, objective_on_active, CentroidSet, Dataset, SampleRef};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vls_core::rng::{purpose, stream};
use vls_core::EngineRng;

fn blob_dataset(points_per_blob: usize, seed: u64) -> Arc<Dataset> {
    // three separated 2-d blobs on a deterministic jitter grid
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers = [[0.0, 0.0], [8.0, 0.0], [4.0, 7.0]];
    let mut rows = Vec::new();
    for center in centers {
        for _ in 0..points_per_blob {
            let jitter = |r: &mut ChaCha8Rng| (rand::Rng::random::<f64>(r) - 0.5) * 1.5;
            rows.push(vec![center[0] + jitter(&mut rng), center[1] + jitter(&mut rng)]);
        }
    }
    Arc::new(Dataset::from_rows(rows).unwrap())
}

fn four_point_instance() -> Arc<Dataset> {
    Arc::new(
        Dataset::from_rows(vec![
            vec![0.0, 0.0],
            vec![0.0, 2.0],
            vec![10.0, 0.0],
            vec![10.0, 2.0],
        ])
        .unwrap(),
    )
}

#[test]
fn literal_loop_and_engine_route_produce_identical_traces() {
    let dataset = blob_dataset(60, 11);
    for seed in 0..10u64 {
        let config = BigMeansConfig::big_means(3, 40, 30, seed);
        let literal = big_means(&dataset, &config).unwrap();
        let engine = big_means_as_bvls(&dataset, &config).unwrap();
        assert_eq!(
            literal.winner_record().trace(),
            engine.record.trace(),
            "trace mismatch at seed {seed}"
        );
        assert_eq!(
            literal.board_objective, engine.value,
            "final value mismatch at seed {seed}"
        );
    }
}

#[test]
fn ablation_route_also_matches_the_engine() {
    let dataset = blob_dataset(40, 3);
    for seed in [1u64, 7, 23] {
        let mut config = BigMeansConfig::big_means(3, 30, 20, seed);
        config.reevaluate_on_new_sample = true;
        let literal = big_means(&dataset, &config).unwrap();
        let engine = big_means_as_bvls(&dataset, &config).unwrap();
        assert_eq!(literal.winner_record().trace(), engine.record.trace());
    }
}

#[test]
fn full_sample_single_iteration_is_one_seeded_lloyd_run() {
    let dataset = blob_dataset(20, 5);
    let rows = dataset.rows();
    let config = BigMeansConfig::big_means(3, rows, 1, 77);
    let outcome = big_means(&dataset, &config).unwrap();

    // replay the single iteration stream for stream
    let mut rng = EngineRng::for_worker(77, 0);
    let sample = SampleRef::draw_uniform(&dataset, rows, &mut rng.sampling).unwrap();
    assert_eq!(sample.indices(), SampleRef::full(&dataset).indices());
    let view = sample.view(&dataset).unwrap();
    let mut seeded = CentroidSet::all_degenerate(3, 2);
    kmeanspp_reseed(&view, &mut seeded, &mut rng.init).unwrap();
    let lloyd = kmeans(&view, &seeded, 1e-6, 300).unwrap();

    assert_eq!(outcome.incumbent, lloyd.centroids);
    assert_eq!(outcome.board_objective, lloyd.objective);
    assert_eq!(outcome.winner_record().iterations.len(), 1);
}

#[test]
fn four_point_trap_is_solved_from_full_samples() {
    let dataset = four_point_instance();
    let mut solved = 0u32;
    for seed in 0..100u64 {
        let config = BigMeansConfig::big_means(2, 4, 20, seed);
        let outcome = big_means(&dataset, &config).unwrap();
        if (outcome.full_objective - 4.0).abs() <= 1e-9 {
            solved += 1;
        }
    }
    assert!(solved >= 95, "only {solved}/100 seeds reached the optimum");
}

#[test]
fn recorded_best_trace_is_monotone_and_strictly_decreasing_at_acceptances() {
    let dataset = blob_dataset(50, 9);
    let config = BigMeansConfig::big_means(3, 25, 60, 13);
    let outcome = big_means(&dataset, &config).unwrap();
    let rows = &outcome.winner_record().iterations;
    assert_eq!(rows.len(), 60);
    for pair in rows.windows(2) {
        assert!(pair[1].objective <= pair[0].objective, "best value rose");
        if pair[1].improved {
            assert!(pair[1].objective < pair[0].objective);
        } else {
            assert_eq!(pair[1].objective, pair[0].objective);
        }
    }
    let history = ImprovementHistory::from_record(outcome.winner_record());
    assert!(history.is_strictly_decreasing());
    assert!(!history.events.is_empty());
}

#[test]
fn worker_zero_is_untouched_by_extra_workers() {
    let dataset = blob_dataset(50, 21);
    let solo = big_means(&dataset, &BigMeansConfig::big_means(3, 30, 25, 5)).unwrap();
    let pooled = big_means(
        &dataset,
        &BigMeansConfig::big_means(3, 30, 25, 5).with_workers(4),
    )
    .unwrap();
    assert_eq!(pooled.worker_records.len(), 4);
    let solo_trace = solo.worker_records[0].1.trace();
    let pooled_trace = pooled
        .worker_records
        .iter()
        .find(|(w, _)| *w == 0)
        .map(|(_, r)| r.trace())
        .unwrap();
    assert_eq!(solo_trace, pooled_trace);
    // the board never exceeds any worker's own final best
    for (_, record) in &pooled.worker_records {
        assert!(pooled.board_objective <= record.final_objective);
    }
}

#[test]
fn collapsed_range_behaves_like_the_fixed_size_loop() {
    let dataset = blob_dataset(40, 2);
    let fixed = big_means(&dataset, &BigMeansConfig::big_means(3, 30, 20, 31)).unwrap();
    let mut collapsed_cfg = BigMeansConfig::big_optima(3, 30, 30, 20, 31);
    collapsed_cfg.data_phase_quota = 1;
    let collapsed = big_optima_s3(&dataset, &collapsed_cfg).unwrap();
    let fixed_rows = fixed.winner_record().trace();
    let collapsed_rows = collapsed.winner_record().trace();
    assert_eq!(fixed_rows.len(), collapsed_rows.len());
    for (a, b) in fixed_rows.iter().zip(&collapsed_rows) {
        // identical draws and decisions; only the recorded shake power
        // differs (every collapsed-range phase start is a full-range draw)
        assert_eq!(a.t, b.t);
        assert_eq!(a.sample_size, b.sample_size);
        assert_eq!(a.objective.to_bits(), b.objective.to_bits());
        assert_eq!(a.improved, b.improved);
    }
}

#[test]
fn first_draw_of_each_phase_is_uniform_over_the_range() {
    let dataset = blob_dataset(20, 17); // 60 rows
    let mut config = BigMeansConfig::big_optima(2, 10, 19, 10_000, 4242);
    config.data_phase_quota = 1; // every iteration starts a phase
    let outcome = big_optima_s3(&dataset, &config).unwrap();
    let rows = &outcome.winner_record().iterations;
    assert_eq!(rows.len(), 10_000);
    let mut counts = [0u64; 10];
    for row in rows {
        assert_eq!(row.shake_power, bigmeans_suite::FULL_RANGE_POWER);
        counts[row.sample_size - 10] += 1;
    }
    let expected = 1000.0;
    let chi_square: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    // 1% critical value for 9 degrees of freedom
    assert!(
        chi_square < 21.666,
        "chi-square {chi_square} rejects uniformity:  {counts:?}"
    );
}

#[test]
fn final_size_is_the_mode_of_improving_sizes_with_larger_tie() {
    let dataset = blob_dataset(30, 8);
    let config = BigMeansConfig::big_optima(3, 20, 40, 60, 19);
    let outcome = big_optima_s3(&dataset, &config).unwrap();
    let histories: Vec<ImprovementHistory> = outcome
        .worker_records
        .iter()
        .map(|(_, r)| ImprovementHistory::from_record(r))
        .collect();
    assert_eq!(
        outcome.s_opt,
        most_frequent_improving_size(&histories).or(Some(40))
    );
    assert!(!outcome.s_opt_fallback);
}

#[test]
fn selection_board_holds_the_minimum_over_workers_on_the_final_landscape() {
    let dataset = blob_dataset(40, 14);
    let config = BigMeansConfig::big_optima(3, 20, 50, 40, 99).with_workers(4);
    let outcome = big_optima_s3(&dataset, &config).unwrap();
    let s_opt = outcome.s_opt.unwrap();
    let mut final_rng = stream(99, purpose::FINAL_EVALUATION);
    let final_sample = SampleRef::draw_uniform(&dataset, s_opt, &mut final_rng).unwrap();
    let view = final_sample.view(&dataset).unwrap();
    let minimum = outcome
        .worker_incumbents
        .iter()
        .map(|(_, c)| objective_on_active(c, &view))
        .fold(f64::INFINITY, f64::min);
    assert_eq!(outcome.board_objective, minimum);
}

#[test]
fn zero_shake_cyclic_variant_reduces_to_the_plain_loop() {
    let dataset = blob_dataset(40, 6);
    let plain = big_means(&dataset, &BigMeansConfig::big_means(3, 25, 25, 55)).unwrap();
    let cyclic = big_vns_clust(&dataset, &BigMeansConfig::big_vns(3, 25, 25, 55, 0)).unwrap();
    assert_eq!(plain.winner_record().trace(), cyclic.winner_record().trace());
    assert_eq!(plain.full_objective, cyclic.full_objective);
}

#[test]
fn cyclic_counter_visits_each_power_exactly_twice_per_two_periods() {
    let dataset = blob_dataset(40, 26);
    let shake_max = 2u32;
    let period = u64::from(shake_max) + 1;
    let config = BigMeansConfig::big_vns(3, 25, 2 * period, 1, shake_max);
    let outcome = big_vns_clust(&dataset, &config).unwrap();
    let powers: Vec<u32> = outcome
        .winner_record()
        .iterations
        .iter()
        .map(|r| r.shake_power)
        .collect();
    assert_eq!(powers, vec![0, 1, 2, 0, 1, 2]);
}

#[test]
fn labels_cover_the_full_dataset() {
    let dataset = blob_dataset(33, 30);
    let config = BigMeansConfig::big_means(3, 20, 15, 2);
    let outcome = big_means(&dataset, &config).unwrap();
    assert_eq!(outcome.labels.len(), dataset.rows());
    assert!(outcome.labels.labels().iter().all(|&l| l < 3));
}

#[test]
fn budget_starved_run_reports_that_no_worker_produced_anything() {
    let dataset = blob_dataset(30, 44);
    // a zero wall-clock cap stops every worker before its first iteration;
    // with no incumbent there is nothing to realize a final landscape for
    let mut config = BigMeansConfig::big_optima(3, 20, 50, 10, 12);
    config.max_wall_clock = Some(std::time::Duration::ZERO);
    let err = big_optima_s3(&dataset, &config).unwrap_err();
    assert!(
        err.to_string().contains("no worker completed an iteration"),
        "unexpected error: {err}"
    );
}
