use std::path::PathBuf;
use std::sync::Arc;

use bigmeans_suite::{
    kmeans_restarts_baseline, run_algorithm, Algorithm, BigMeansConfig, SampleSizeSpec,
};
use data_io::{gen_gaussian_mixture, grid_centers, write_history_csv, HistoryRow};
use vls_core::{derive_seed, PowerBounds};

use crate::cli::{BenchArgs, CliError, EXIT_OK, OUT_DIR_ENV};

const DATASET_TAG: u64 = 0x4441_5441;

struct BenchRow {
    seed: u64,
    algorithm_objective: f64,
    algorithm_wall_ms: f64,
    baseline_objective: f64,
    baseline_wall_ms: f64,
}

impl BenchRow {
    fn relative_gap(&self) -> f64 {
        (self.algorithm_objective - self.baseline_objective) / self.baseline_objective
    }
}

pub fn run(args: &BenchArgs) -> Result<i32, CliError> {
    if args.seeds == 0 {
        return Err(CliError::Usage("--seeds must be at least 1".into()));
    }
    let clusters = args.clusters.unwrap_or(args.centers);
    let out_dir = args
        .out_dir
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&out_dir).map_err(|e| CliError::Failure(e.to_string()))?;

    let mixture = gen_gaussian_mixture(
        &grid_centers(args.centers, args.spacing),
        args.sigma,
        args.points_per_center,
        derive_seed(args.seed, DATASET_TAG),
    )?;
    let dataset = Arc::new(mixture.dataset);
    println!(
        "benchmark: {} points, {} centers (sigma {}, spacing {}), {} seeds",
        dataset.rows(),
        args.centers,
        args.sigma,
        args.spacing,
        args.seeds
    );

    let mut rows: Vec<BenchRow> = Vec::with_capacity(args.seeds as usize);
    for run_index in 0..args.seeds {
        let run_seed = derive_seed(args.seed, u64::from(run_index));
        let mut config = BigMeansConfig::big_means(clusters, 1, args.iters, run_seed);
        config.algorithm = args.algo;
        config.workers = args.workers;
        config.sample_size = match (args.algo, args.sample_range) {
            (Algorithm::BigOptima, Some(range)) => SampleSizeSpec::Range {
                min: range.lo,
                max: range.hi,
            },
            (Algorithm::BigOptima, None) => SampleSizeSpec::Range {
                min: args.sample_size,
                max: args.sample_size,
            },
            (_, Some(_)) => {
                return Err(CliError::Usage(format!(
                    "{} takes --sample-size, not --sample-range",
                    args.algo.tag()
                )));
            }
            (_, None) => SampleSizeSpec::Fixed(args.sample_size),
        };
        if args.algo == Algorithm::BigVns {
            config.solution_shake = Some(match args.shake_range {
                Some(range) => PowerBounds {
                    min: range.lo as u32,
                    max: range.hi as u32,
                },
                None => PowerBounds {
                    min: 0,
                    max: 2.min(clusters as u32),
                },
            });
        }
        config.validate(&dataset)?;

        let outcome = run_algorithm(&dataset, &config)?;
        let history: Vec<HistoryRow> = outcome
            .winner_record()
            .iterations
            .iter()
            .map(HistoryRow::from)
            .collect();
        write_history_csv(
            &history,
            out_dir.join(format!("run_{run_index:02}.history.csv")),
        )?;

        let baseline = kmeans_restarts_baseline(
            &dataset,
            clusters,
            args.baseline_restarts,
            run_seed,
            config.kmeans_tol,
            config.kmeans_max_iter,
        )?;
        rows.push(BenchRow {
            seed: run_seed,
            algorithm_objective: outcome.full_objective,
            algorithm_wall_ms: outcome.wall_time.as_secs_f64() * 1e3,
            baseline_objective: baseline.best_objective,
            baseline_wall_ms: baseline.wall_time.as_secs_f64() * 1e3,
        });
    }

    write_summary(&rows, args, out_dir.join("summary.csv"))?;
    print_table(&rows, args.algo);
    Ok(EXIT_OK)
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

fn print_table(rows: &[BenchRow], algorithm: Algorithm) {
    let pick = |f: fn(&BenchRow) -> f64| -> (f64, f64) {
        let mut values: Vec<f64> = rows.iter().map(f).collect();
        let best = values.iter().cloned().fold(f64::INFINITY, f64::min);
        (median(&mut values), best)
    };
    let (alg_median, alg_best) = pick(|r| r.algorithm_objective);
    let (base_median, base_best) = pick(|r| r.baseline_objective);
    let (alg_wall, _) = pick(|r| r.algorithm_wall_ms);
    let (base_wall, _) = pick(|r| r.baseline_wall_ms);
    let gap = (alg_median - base_median) / base_median;

    println!("metric            {:>14} {:>14}", algorithm.tag(), "baseline");
    println!("median objective  {alg_median:>14.6} {base_median:>14.6}");
    println!("best objective    {alg_best:>14.6} {base_best:>14.6}");
    println!("median wall ms    {alg_wall:>14.3} {base_wall:>14.3}");
    println!(
        "relative gap      {:>14.4}%  (wall ratio {:.1}%)",
        gap * 100.0,
        alg_wall / base_wall * 100.0
    );
}

fn write_summary(
    rows: &[BenchRow],
    args: &BenchArgs,
    path: PathBuf,
) -> Result<(), CliError> {
    let mut text = String::from(
        "seed,algorithm,algorithm_objective,algorithm_wall_ms,baseline_objective,baseline_wall_ms,relative_gap\n",
    );
    for row in rows {
        text.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.seed,
            args.algo.tag(),
            row.algorithm_objective,
            row.algorithm_wall_ms,
            row.baseline_objective,
            row.baseline_wall_ms,
            row.relative_gap(),
        ));
    }
    std::fs::write(path, text).map_err(|e| CliError::Failure(e.to_string()))?;
    Ok(())
}
