//! Tiny-instance generation for oracle-backed verification.

use mssc_kernel::{CentroidSet, Dataset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A small instance within the exhaustive-search bounds.
#[derive(Debug, Clone)]
pub struct TinyInstance {
    pub name: String,
    pub dataset: Dataset,
    pub clusters: usize,
}

/// Deterministic mix of clustered and unstructured instances with
/// `points <= 8`, `dims <= 2`, `clusters <= 3`. Three in five instances are
/// separated blobs; the rest are uniform scatter.
pub fn tiny_instances(count: usize, seed: u64) -> Vec<TinyInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let dims = rng.random_range(1..=2usize);
            let clusters = rng.random_range(1..=3usize);
            let points = rng.random_range(clusters.max(4)..=8usize);
            let clustered = i % 5 < 3;
            let rows = if clustered {
                // separated blobs with mild jitter
                let centers: Vec<Vec<f64>> = (0..clusters)
                    .map(|c| (0..dims).map(|d| (c * 10 + d) as f64).collect())
                    .collect();
                (0..points)
                    .map(|j| {
                        let center = &centers[j % clusters];
                        center
                            .iter()
                            .map(|v| v + rng.random_range(-0.5..0.5))
                            .collect()
                    })
                    .collect()
            } else {
                (0..points)
                    .map(|_| (0..dims).map(|_| rng.random_range(0.0..1.0)).collect())
                    .collect()
            };
            TinyInstance {
                name: format!(
                    "{}-{i:02}-s{points}-n{dims}-p{clusters}",
                    if clustered { "blob" } else { "uniform" }
                ),
                dataset: Dataset::from_rows(rows).unwrap(),
                clusters,
            }
        })
        .collect()
}

/// The fixed verification suite: 18 generated instances plus two where every
/// point gets its own cluster (zero-cost optimum).
pub fn bundled_suite() -> Vec<TinyInstance> {
    let mut suite = tiny_instances(18, 0x7E57);
    suite.push(TinyInstance {
        name: "singletons-18-s2-n1-p2".into(),
        dataset: Dataset::from_rows(vec![vec![0.0], vec![5.0]]).unwrap(),
        clusters: 2,
    });
    suite.push(TinyInstance {
        name: "singletons-19-s3-n2-p3".into(),
        dataset: Dataset::from_rows(vec![vec![0.0, 0.0], vec![4.0, 1.0], vec![-3.0, 2.0]])
            .unwrap(),
        clusters: 3,
    });
    suite
}

/// Every set of `clusters` distinct points of the dataset, as Lloyd
/// starting sets.
pub fn distinct_point_inits(data: &Dataset, clusters: usize) -> Vec<CentroidSet> {
    fn recurse(
        data: &Dataset,
        clusters: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        result: &mut Vec<CentroidSet>,
    ) {
        if chosen.len() == clusters {
            let rows = chosen.iter().map(|&i| data.point(i).to_vec()).collect();
            result.push(CentroidSet::from_rows(rows).expect("finite dataset rows"));
            return;
        }
        for i in start..data.rows() {
            chosen.push(i);
            recurse(data, clusters, i + 1, chosen, result);
            chosen.pop();
        }
    }
    let mut result = Vec::new();
    recurse(data, clusters, 0, &mut Vec::new(), &mut result);
    result
}
