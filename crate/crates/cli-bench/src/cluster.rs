use std::path::Path;
use std::sync::Arc;

use bigmeans_suite::{run_algorithm, Algorithm, BigMeansConfig, SampleSizeSpec, SuiteOutcome};
use data_io::{
    load_dataset, write_history_csv, write_labels, write_result, ConfigEcho, HistoryRow,
    ResultDocument,
};
use vls_core::PowerBounds;

use crate::cli::{default_out_path, CliError, ClusterArgs, EXIT_OK};

pub fn run(args: &ClusterArgs) -> Result<i32, CliError> {
    let config = build_config(args)?;
    let dataset = Arc::new(load_dataset(&args.data, args.format, args.skip_header)?);
    config.validate(&dataset)?;

    let outcome = run_algorithm(&dataset, &config)?;

    let out = args.out.clone().unwrap_or_else(default_out_path);
    let labels_path = out.with_extension("labels");
    let history_path = out.with_extension("history.csv");
    let document = build_document(&config, &outcome, &labels_path);
    write_result(&document, &out)?;
    write_labels(outcome.labels.labels(), &labels_path)?;
    write_history_csv(&document.history, &history_path)?;

    println!(
        "{} objective={} wall_ms={:.3} out={}",
        config.algorithm.tag(),
        outcome.full_objective,
        outcome.wall_time.as_secs_f64() * 1e3,
        out.display()
    );
    Ok(EXIT_OK)
}

fn build_config(args: &ClusterArgs) -> Result<BigMeansConfig, CliError> {
    let usage = |msg: String| Err(CliError::Usage(msg));
    let sample_size = match (args.algo, args.sample_size, args.sample_range) {
        (Algorithm::BigMeans | Algorithm::BigVns, Some(size), None) => {
            SampleSizeSpec::Fixed(size)
        }
        (Algorithm::BigMeans | Algorithm::BigVns, _, Some(_)) => {
            return usage(format!(
                "{} takes --sample-size, not --sample-range",
                args.algo.tag()
            ));
        }
        (Algorithm::BigMeans | Algorithm::BigVns, None, None) => {
            return usage(format!("{} requires --sample-size", args.algo.tag()));
        }
        (Algorithm::BigOptima, None, Some(range)) => SampleSizeSpec::Range {
            min: range.lo,
            max: range.hi,
        },
        (Algorithm::BigOptima, Some(size), None) => SampleSizeSpec::Range {
            min: size,
            max: size,
        },
        (Algorithm::BigOptima, Some(_), Some(_)) => {
            return usage("--sample-size and --sample-range are mutually exclusive".into());
        }
        (Algorithm::BigOptima, None, None) => {
            return usage("bigoptima requires --sample-range (or --sample-size)".into());
        }
    };
    let solution_shake = match (args.algo, args.shake_range) {
        (Algorithm::BigVns, Some(range)) => Some(PowerBounds {
            min: range.lo as u32,
            max: range.hi as u32,
        }),
        (Algorithm::BigVns, None) => Some(PowerBounds {
            min: 0,
            max: 2.min(args.clusters as u32),
        }),
        (_, Some(_)) => {
            return usage("--shake-range only applies to bigvns".into());
        }
        (_, None) => None,
    };

    let mut config = BigMeansConfig::big_means(args.clusters, 1, args.iters, args.seed);
    config.algorithm = args.algo;
    config.sample_size = sample_size;
    config.workers = args.workers;
    config.solution_shake = solution_shake;
    config.reevaluate_on_new_sample = args.reevaluate;
    Ok(config)
}

pub(crate) fn echo_config(config: &BigMeansConfig) -> ConfigEcho {
    let (sample_size, sample_min, sample_max) = match config.sample_size {
        SampleSizeSpec::Fixed(size) => (Some(size), None, None),
        SampleSizeSpec::Range { min, max } => (None, Some(min), Some(max)),
    };
    ConfigEcho {
        algorithm: config.algorithm.tag().to_string(),
        clusters: config.clusters,
        sample_size,
        sample_min,
        sample_max,
        iterations: config.iterations,
        seed: config.seed,
        workers: config.workers,
        shake_min: config.solution_shake.map(|b| b.min),
        shake_max: config.solution_shake.map(|b| b.max),
        reevaluate_on_new_sample: config.reevaluate_on_new_sample,
    }
}

pub(crate) fn build_document(
    config: &BigMeansConfig,
    outcome: &SuiteOutcome,
    labels_path: &Path,
) -> ResultDocument {
    ResultDocument {
        schema_version: data_io::SCHEMA_VERSION,
        algorithm: config.algorithm.tag().to_string(),
        config: echo_config(config),
        clusters: config.clusters,
        centroids: outcome.centroids.to_rows(),
        full_objective: outcome.full_objective,
        labels_path: labels_path.display().to_string(),
        seed: config.seed,
        total_wall_ms: outcome.wall_time.as_secs_f64() * 1e3,
        history: outcome
            .winner_record()
            .iterations
            .iter()
            .map(HistoryRow::from)
            .collect(),
    }
}
