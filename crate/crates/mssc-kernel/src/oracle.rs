use crate::centroid::CentroidSet;
use crate::dataset::SampleView;
use crate::error::MsscError;
use crate::squared_distance;

/// Enumeration bound on points for [`brute_force_mssc`].
pub const ORACLE_MAX_POINTS: usize = 12;
/// Enumeration bound on clusters for [`brute_force_mssc`].
pub const ORACLE_MAX_CLUSTERS: usize = 3;

/// A provably optimal clustering of a tiny instance.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub centroids: CentroidSet,
    pub objective: f64,
}

/// Exhaustively enumerates every partition of the sample into at most
/// `clusters` nonempty blocks and returns a global optimum of the MSSC
/// objective, with cluster means as centroids.
///
/// Partitions are generated in restricted-growth order (point 0 always in
/// block 0, each later point in an existing block or the next fresh one), so
/// no partition is visited twice. The first partition attaining the minimum
/// wins, which keeps the reported centroids deterministic.
pub fn brute_force_mssc(
    sample: &SampleView<'_>,
    clusters: usize,
) -> Result<OracleOutcome, MsscError> {
    let points = sample.len();
    if points == 0 {
        return Err(MsscError::EmptySample);
    }
    if clusters == 0 {
        return Err(MsscError::NoCentroids);
    }
    if points > ORACLE_MAX_POINTS || clusters > ORACLE_MAX_CLUSTERS {
        return Err(MsscError::InstanceTooLarge {
            points,
            clusters,
            max_points: ORACLE_MAX_POINTS,
            max_clusters: ORACLE_MAX_CLUSTERS,
        });
    }

    let dims = sample.dims();
    let mut assignment = vec![0usize; points];
    let mut best_cost = f64::INFINITY;
    let mut best_assignment = vec![0usize; points];
    let mut best_blocks = 1usize;

    enumerate(
        sample,
        clusters,
        &mut assignment,
        1,
        1,
        &mut |cost, blocks, assignment| {
            if cost < best_cost {
                best_cost = cost;
                best_assignment.copy_from_slice(assignment);
                best_blocks = blocks;
            }
        },
    );

    // centroids of the winning partition; unused trailing slots repeat the
    // first mean so the set keeps exactly `clusters` active rows
    let mut sums = vec![0.0; best_blocks * dims];
    let mut counts = vec![0usize; best_blocks];
    for (i, &block) in best_assignment.iter().enumerate() {
        counts[block] += 1;
        for (a, v) in sums[block * dims..(block + 1) * dims]
            .iter_mut()
            .zip(sample.point(i))
        {
            *a += v;
        }
    }
    let mut rows = Vec::with_capacity(clusters);
    for block in 0..best_blocks {
        let n = counts[block] as f64;
        rows.push(
            sums[block * dims..(block + 1) * dims]
                .iter()
                .map(|s| s / n)
                .collect::<Vec<_>>(),
        );
    }
    while rows.len() < clusters {
        rows.push(rows[0].clone());
    }
    Ok(OracleOutcome {
        centroids: CentroidSet::from_rows(rows)?,
        objective: best_cost,
    })
}

fn enumerate(
    sample: &SampleView<'_>,
    max_blocks: usize,
    assignment: &mut Vec<usize>,
    next_point: usize,
    used_blocks: usize,
    visit: &mut impl FnMut(f64, usize, &[usize]),
) {
    if next_point == assignment.len() {
        visit(
            partition_cost(sample, assignment, used_blocks),
            used_blocks,
            assignment,
        );
        return;
    }
    let block_limit = if used_blocks < max_blocks {
        used_blocks + 1
    } else {
        used_blocks
    };
    for block in 0..block_limit {
        assignment[next_point] = block;
        let used = used_blocks.max(block + 1);
        enumerate(sample, max_blocks, assignment, next_point + 1, used, visit);
    }
}

fn partition_cost(sample: &SampleView<'_>, assignment: &[usize], blocks: usize) -> f64 {
    let dims = sample.dims();
    let mut sums = vec![0.0; blocks * dims];
    let mut counts = vec![0usize; blocks];
    for (i, &block) in assignment.iter().enumerate() {
        counts[block] += 1;
        for (a, v) in sums[block * dims..(block + 1) * dims]
            .iter_mut()
            .zip(sample.point(i))
        {
            *a += v;
        }
    }
    let mut cost = 0.0;
    let mut mean = vec![0.0; dims];
    for block in 0..blocks {
        let n = counts[block] as f64;
        for (m, s) in mean.iter_mut().zip(&sums[block * dims..(block + 1) * dims]) {
            *m = s / n;
        }
        for (i, &b) in assignment.iter().enumerate() {
            if b == block {
                cost += squared_distance(sample.point(i), &mean);
            }
        }
    }
    cost
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Dataset;

    #[test]
    fn four_point_two_cluster_optimum() {
        let data = Dataset::from_rows(vec![
            vec![0.0, 0.0],
            vec![0.0, 2.0],
            vec![10.0, 0.0],
            vec![10.0, 2.0],
        ])
        .unwrap();
        let out = brute_force_mssc(&data.full_view(), 2).unwrap();
        assert!((out.objective - 4.0).abs() < 1e-12);
        let mut rows = out.centroids.to_rows();
        rows.sort_by(|a, b| a[0].partial_cmp(&b[0]).unwrap());
        assert_eq!(rows, vec![vec![0.0, 1.0], vec![10.0, 1.0]]);
    }

    #[test]
    fn one_cluster_matches_the_closed_form() {
        let data = Dataset::from_rows(vec![vec![1.0], vec![2.0], vec![6.0]]).unwrap();
        let out = brute_force_mssc(&data.full_view(), 1).unwrap();
        let mean = 3.0;
        let expected = (1.0f64 - mean).powi(2) + (2.0f64 - mean).powi(2) + (6.0f64 - mean).powi(2);
        assert!((out.objective - expected).abs() < 1e-12);
    }

    #[test]
    fn as_many_clusters_as_points_costs_nothing() {
        let data = Dataset::from_rows(vec![vec![1.0], vec![5.0], vec![9.0]]).unwrap();
        let out = brute_force_mssc(&data.full_view(), 3).unwrap();
        assert_eq!(out.objective, 0.0);
    }

    #[test]
    fn enumeration_bounds_are_enforced() {
        let data = Dataset::from_rows((0..13).map(|i| vec![f64::from(i)]).collect()).unwrap();
        assert!(matches!(
            brute_force_mssc(&data.full_view(), 2),
            Err(MsscError::InstanceTooLarge { .. })
        ));
        let small = Dataset::from_rows(vec![vec![0.0], vec![1.0]]).unwrap();
        assert!(matches!(
            brute_force_mssc(&small.full_view(), 4),
            Err(MsscError::InstanceTooLarge { .. })
        ));
    }
}
