use std::sync::Arc;

use bigmeans_suite::{big_means, BigMeansConfig};
use mssc_kernel::{brute_force_mssc, kmeans, Dataset};

use crate::cli::{CliError, VerifyArgs, EXIT_CHECK_FAILED, EXIT_OK};
use crate::tiny::{bundled_suite, distinct_point_inits, TinyInstance};

const RELATIVE_TOLERANCE: f64 = 1e-9;

pub fn run(args: &VerifyArgs) -> Result<i32, CliError> {
    let suite = bundled_suite();
    let mut failed: Vec<String> = Vec::new();
    for (index, instance) in suite.iter().enumerate() {
        let corrupt = args.self_test_corrupt && index == 0;
        match check_instance(instance, index as u64, corrupt) {
            Ok(optimum) => println!("instance {}: ok (optimum {optimum})", instance.name),
            Err(message) => {
                println!("instance {}: FAIL {message}", instance.name);
                failed.push(instance.name.clone());
            }
        }
    }
    if failed.is_empty() {
        println!("verify: {}/{} ok", suite.len(), suite.len());
        Ok(EXIT_OK)
    } else {
        eprintln!("verify failed on: {}", failed.join(", "));
        Ok(EXIT_CHECK_FAILED)
    }
}

fn floor_of(optimum: f64) -> f64 {
    optimum - RELATIVE_TOLERANCE * optimum.max(1.0)
}

fn check_instance(
    instance: &TinyInstance,
    seed: u64,
    corrupt: bool,
) -> Result<f64, String> {
    let data: &Dataset = &instance.dataset;
    let view = data.full_view();
    let clusters = instance.clusters;
    let oracle =
        brute_force_mssc(&view, clusters).map_err(|e| format!("oracle failed: {e}"))?;
    let floor = floor_of(oracle.objective);

    // every Lloyd descent from a distinct-point seeding dominates the oracle
    for (i, init) in distinct_point_inits(data, clusters).into_iter().enumerate() {
        let out = kmeans(&view, &init, 1e-6, 300).map_err(|e| e.to_string())?;
        let mut objective = out.objective;
        if corrupt && i == 0 {
            objective -= 0.1 * objective.max(1.0);
        }
        if objective < floor {
            return Err(format!(
                "descent from seeding {i} scored {objective}, below the optimum {}",
                oracle.objective
            ));
        }
    }

    // a descent started at the optimal centroids stays at the optimum
    let from_optimum =
        kmeans(&view, &oracle.centroids, 1e-6, 300).map_err(|e| e.to_string())?;
    if (from_optimum.objective - oracle.objective).abs()
        > RELATIVE_TOLERANCE * oracle.objective.max(1.0)
    {
        return Err(format!(
            "descent from the optimal centroids drifted to {}",
            from_optimum.objective
        ));
    }

    // the sample-restart loop on the full instance dominates the oracle,
    // and matches it exactly when every point is its own cluster
    let config = BigMeansConfig::big_means(clusters, data.rows(), 20, seed);
    let dataset = Arc::new(data.clone());
    let outcome = big_means(&dataset, &config).map_err(|e| e.to_string())?;
    if outcome.full_objective < floor {
        return Err(format!(
            "restart loop scored {}, below the optimum {}",
            outcome.full_objective, oracle.objective
        ));
    }
    if clusters == data.rows() {
        if oracle.objective != 0.0 {
            return Err(format!(
                "optimum of an all-singleton instance is {}, not 0",
                oracle.objective
            ));
        }
        if outcome.full_objective > RELATIVE_TOLERANCE {
            return Err(format!(
                "restart loop missed the zero-cost clustering: {}",
                outcome.full_objective
            ));
        }
    }
    Ok(oracle.objective)
}
