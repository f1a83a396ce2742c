use crate::centroid::{CentroidSet, LabelAssignment};
use crate::dataset::SampleView;
use crate::error::MsscError;
use crate::squared_distance;

/// Nearest non-degenerate centroid of `point`, as `(slot, squared distance)`.
///
/// Ties break toward the lowest slot index. Returns `None` when every slot is
/// degenerate.
pub fn nearest_active(centroids: &CentroidSet, point: &[f64]) -> Option<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for j in centroids.active_slots() {
        let d = squared_distance(point, centroids.row(j));
        match best {
            Some((_, bd)) if d >= bd => {}
            _ => best = Some((j, d)),
        }
    }
    best
}

/// Sum of squared distances from every sample point to its nearest active
/// centroid, skipping degenerate slots.
///
/// An empty sample contributes an empty sum (0). A nonempty sample with no
/// active centroid evaluates to `+inf`: no assignment exists yet, so any
/// finite clustering improves on it.
pub fn objective_on_active(centroids: &CentroidSet, sample: &SampleView<'_>) -> f64 {
    if sample.is_empty() {
        return 0.0;
    }
    if centroids.active_count() == 0 {
        return f64::INFINITY;
    }
    let mut total = 0.0;
    for point in sample.iter_points() {
        let (_, d) = nearest_active(centroids, point).expect("active centroid exists");
        total += d;
    }
    total
}

/// The MSSC objective: total squared distance to nearest centroids.
///
/// Every centroid must be non-degenerate; evaluating a solution with
/// unrepaired slots is a caller bug, not a numeric edge case.
pub fn mssc_objective(
    centroids: &CentroidSet,
    sample: &SampleView<'_>,
) -> Result<f64, MsscError> {
    if centroids.any_degenerate() {
        return Err(MsscError::DegenerateCentroid);
    }
    Ok(objective_on_active(centroids, sample))
}

/// Maps each sample point to its nearest centroid (lowest index on ties).
pub fn assign_labels(
    centroids: &CentroidSet,
    sample: &SampleView<'_>,
) -> Result<LabelAssignment, MsscError> {
    if centroids.any_degenerate() {
        return Err(MsscError::DegenerateCentroid);
    }
    assign_labels_active(centroids, sample)
}

/// Assignment over active slots only; used internally where degenerate slots
/// are legitimately present.
pub(crate) fn assign_labels_active(
    centroids: &CentroidSet,
    sample: &SampleView<'_>,
) -> Result<LabelAssignment, MsscError> {
    if centroids.active_count() == 0 && !sample.is_empty() {
        return Err(MsscError::DegenerateCentroid);
    }
    let labels = sample
        .iter_points()
        .map(|p| nearest_active(centroids, p).expect("active centroid exists").0)
        .collect();
    Ok(LabelAssignment::new(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Dataset;

    fn dataset(rows: &[&[f64]]) -> Dataset {
        Dataset::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn coincident_point_scores_zero() {
        let data = dataset(&[&[0.0, 0.0]]);
        let c = CentroidSet::from_rows(vec![vec![0.0, 0.0]]).unwrap();
        assert_eq!(mssc_objective(&c, &data.full_view()).unwrap(), 0.0);
    }

    #[test]
    fn midpoint_centroid_scores_two() {
        let data = dataset(&[&[0.0, 0.0], &[2.0, 0.0]]);
        let c = CentroidSet::from_rows(vec![vec![1.0, 0.0]]).unwrap();
        assert_eq!(mssc_objective(&c, &data.full_view()).unwrap(), 2.0);
    }

    #[test]
    fn four_point_instance_optimum_is_four() {
        let data = dataset(&[&[0.0, 0.0], &[0.0, 2.0], &[10.0, 0.0], &[10.0, 2.0]]);
        let c = CentroidSet::from_rows(vec![vec![0.0, 1.0], vec![10.0, 1.0]]).unwrap();
        assert_eq!(mssc_objective(&c, &data.full_view()).unwrap(), 4.0);
    }

    #[test]
    fn degenerate_centroid_is_an_error() {
        let data = dataset(&[&[0.0]]);
        let mut c = CentroidSet::from_rows(vec![vec![0.0], vec![1.0]]).unwrap();
        c.set_degenerate(1, true);
        assert!(matches!(
            mssc_objective(&c, &data.full_view()),
            Err(MsscError::DegenerateCentroid)
        ));
        // the active-only variant skips the flagged slot instead
        assert_eq!(objective_on_active(&c, &data.full_view()), 0.0);
    }

    #[test]
    fn equidistant_point_takes_lowest_index() {
        let data = dataset(&[&[1.0, 0.0]]);
        let c = CentroidSet::from_rows(vec![vec![0.0, 0.0], vec![2.0, 0.0]]).unwrap();
        let labels = assign_labels(&c, &data.full_view()).unwrap();
        assert_eq!(labels.labels(), &[0]);
    }

    #[test]
    fn nearest_assignment() {
        let data = dataset(&[&[0.0, 0.0], &[10.0, 0.0]]);
        let c = CentroidSet::from_rows(vec![vec![1.0, 0.0], vec![9.0, 0.0]]).unwrap();
        let labels = assign_labels(&c, &data.full_view()).unwrap();
        assert_eq!(labels.labels(), &[0, 1]);
    }

    #[test]
    fn empty_sample_scores_zero() {
        let data = dataset(&[&[5.0]]);
        let sample = crate::SampleRef::new(&data, vec![]).unwrap();
        let c = CentroidSet::from_rows(vec![vec![123.0]]).unwrap();
        assert_eq!(mssc_objective(&c, &sample.view(&data).unwrap()).unwrap(), 0.0);
    }
}
