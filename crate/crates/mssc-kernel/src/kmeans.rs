use crate::centroid::CentroidSet;
use crate::dataset::SampleView;
use crate::error::MsscError;
use crate::objective::nearest_active;

/// Result of a Lloyd run.
#[derive(Debug, Clone)]
pub struct KmeansOutcome {
    /// Final centroids. Slots whose cluster emptied out during the run are
    /// flagged degenerate with their last coordinates left in place; repair
    /// is the caller's job.
    pub centroids: CentroidSet,
    /// Objective of the final centroids on the sample (active slots only).
    pub objective: f64,
    /// Number of centroid-update steps applied.
    pub update_steps: u32,
    /// Objective of the centroids at the start of each pass, ending with the
    /// final objective. Non-increasing from one entry to the next.
    pub objective_trace: Vec<f64>,
}

struct AssignmentPass {
    objective: f64,
    sums: Vec<f64>,
    counts: Vec<usize>,
}

fn assignment_pass(centroids: &CentroidSet, sample: &SampleView<'_>) -> AssignmentPass {
    let p = centroids.cluster_count();
    let dims = centroids.dims();
    let mut sums = vec![0.0; p * dims];
    let mut counts = vec![0usize; p];
    let mut objective = 0.0;
    for point in sample.iter_points() {
        let (slot, d) = nearest_active(centroids, point).expect("active centroid exists");
        objective += d;
        counts[slot] += 1;
        let acc = &mut sums[slot * dims..(slot + 1) * dims];
        for (a, v) in acc.iter_mut().zip(point) {
            *a += v;
        }
    }
    AssignmentPass {
        objective,
        sums,
        counts,
    }
}

/// Lloyd iterations: assign each point to its nearest centroid, then move
/// each centroid to the mean of its points, until the relative objective
/// decrease falls below `tol` or `max_iter` update steps have been applied.
///
/// The objective never increases from pass to pass. A cluster that receives
/// no points keeps its coordinates and is flagged degenerate; it takes no
/// further part in the run.
pub fn kmeans(
    sample: &SampleView<'_>,
    init: &CentroidSet,
    tol: f64,
    max_iter: u32,
) -> Result<KmeansOutcome, MsscError> {
    if sample.is_empty() {
        return Err(MsscError::EmptySample);
    }
    if init.any_degenerate() {
        return Err(MsscError::DegenerateCentroid);
    }
    if init.dims() != sample.dims() {
        return Err(MsscError::PointDimensionMismatch {
            expected: sample.dims(),
            found: init.dims(),
        });
    }

    let dims = init.dims();
    let mut centroids = init.clone();
    let mut trace: Vec<f64> = Vec::new();
    let mut update_steps = 0u32;

    loop {
        let pass = assignment_pass(&centroids, sample);
        if let Some(&previous) = trace.last() {
            let denom = previous.abs().max(f64::MIN_POSITIVE);
            if previous - pass.objective < tol * denom {
                trace.push(pass.objective);
                return Ok(KmeansOutcome {
                    centroids,
                    objective: pass.objective,
                    update_steps,
                    objective_trace: trace,
                });
            }
        }
        trace.push(pass.objective);
        if update_steps >= max_iter {
            return Ok(KmeansOutcome {
                centroids,
                objective: pass.objective,
                update_steps,
                objective_trace: trace,
            });
        }
        let mut moved = false;
        for j in 0..centroids.cluster_count() {
            if centroids.is_degenerate(j) {
                continue;
            }
            if pass.counts[j] == 0 {
                centroids.set_degenerate(j, true);
                moved = true;
                continue;
            }
            let n = pass.counts[j] as f64;
            let row = centroids.row_mut(j);
            for (c, s) in row.iter_mut().zip(&pass.sums[j * dims..(j + 1) * dims]) {
                let mean = s / n;
                if mean.to_bits() != c.to_bits() {
                    moved = true;
                }
                *c = mean;
            }
        }
        if !moved {
            // exact fixed point: re-assigning against identical centroids
            // would reproduce this pass bit for bit
            return Ok(KmeansOutcome {
                centroids,
                objective: pass.objective,
                update_steps,
                objective_trace: trace,
            });
        }
        update_steps += 1;
    }
}
