use mssc_kernel::{nearest_active, squared_distance, CentroidSet, Dataset, LabelAssignment};

use crate::error::SuiteError;

/// A clustering delivered on the full dataset: labels against the incumbent
/// centroids, the label partition's means, and that partition's cost.
#[derive(Debug, Clone)]
pub struct FullEvaluation {
    pub labels: LabelAssignment,
    /// Means of the label partition. A slot that received no points keeps
    /// the incumbent coordinates and stays flagged degenerate.
    pub centroids: CentroidSet,
    /// Sum of squared distances from each point to its cluster's mean.
    pub objective: f64,
}

/// Labels every dataset row against the incumbent's active centroids, then
/// scores the resulting partition at its own means.
pub fn evaluate_on_full_data(
    dataset: &Dataset,
    incumbent: &CentroidSet,
) -> Result<FullEvaluation, SuiteError> {
    if incumbent.active_count() == 0 {
        return Err(SuiteError::Kernel(
            mssc_kernel::MsscError::DegenerateCentroid,
        ));
    }
    let view = dataset.full_view();
    let clusters = incumbent.cluster_count();
    let dims = incumbent.dims();
    let labels: Vec<usize> = view
        .iter_points()
        .map(|p| nearest_active(incumbent, p).expect("active centroid").0)
        .collect();

    let mut sums = vec![0.0; clusters * dims];
    let mut counts = vec![0usize; clusters];
    for (i, &label) in labels.iter().enumerate() {
        counts[label] += 1;
        for (a, v) in sums[label * dims..(label + 1) * dims]
            .iter_mut()
            .zip(view.point(i))
        {
            *a += v;
        }
    }
    let mut centroids = incumbent.clone();
    for j in 0..clusters {
        if counts[j] == 0 {
            centroids.set_degenerate(j, true);
            continue;
        }
        let n = counts[j] as f64;
        centroids.set_degenerate(j, false);
        for (c, s) in centroids
            .row_mut(j)
            .iter_mut()
            .zip(&sums[j * dims..(j + 1) * dims])
        {
            *c = s / n;
        }
    }
    let mut objective = 0.0;
    for (i, &label) in labels.iter().enumerate() {
        objective += squared_distance(view.point(i), centroids.row(label));
    }
    Ok(FullEvaluation {
        labels: LabelAssignment::from_labels(labels),
        centroids,
        objective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_point_instance() -> Dataset {
        Dataset::from_rows(vec![
            vec![0.0, 0.0],
            vec![0.0, 2.0],
            vec![10.0, 0.0],
            vec![10.0, 2.0],
        ])
        .unwrap()
    }

    #[test]
    fn labels_cover_every_row_within_cluster_bounds() {
        let data = four_point_instance();
        let incumbent = CentroidSet::from_rows(vec![vec![0.0, 1.0], vec![10.0, 0.0]]).unwrap();
        let eval = evaluate_on_full_data(&data, &incumbent).unwrap();
        assert_eq!(eval.labels.len(), 4);
        assert!(eval.labels.labels().iter().all(|&l| l < 2));
    }

    #[test]
    fn partition_cost_uses_recomputed_means() {
        let data = four_point_instance();
        // sample-fitted incumbent: one tight pair mean, one single point.
        // labeling splits the data left/right, whose means score 4.0
        let incumbent = CentroidSet::from_rows(vec![vec![0.0, 1.0], vec![10.0, 0.0]]).unwrap();
        let eval = evaluate_on_full_data(&data, &incumbent).unwrap();
        assert_eq!(eval.objective, 4.0);
        assert_eq!(eval.centroids.row(0), &[0.0, 1.0]);
        assert_eq!(eval.centroids.row(1), &[10.0, 1.0]);
    }

    #[test]
    fn unassigned_slot_is_flagged() {
        let data = four_point_instance();
        let incumbent =
            CentroidSet::from_rows(vec![vec![5.0, 1.0], vec![500.0, 500.0]]).unwrap();
        let eval = evaluate_on_full_data(&data, &incumbent).unwrap();
        assert!(eval.centroids.is_degenerate(1));
        assert!(eval.labels.labels().iter().all(|&l| l == 0));
    }
}
