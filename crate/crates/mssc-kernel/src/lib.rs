//! Minimum sum-of-squares clustering (MSSC) primitives.
//!
//! The kernel owns the data model (immutable [`Dataset`], row-subset
//! [`SampleRef`]) and the clustering solution model ([`CentroidSet`] with
//! per-slot degeneracy flags), plus the four operations everything else is
//! assembled from:
//!
//! * [`mssc_objective`] — sum of squared Euclidean distances from each point
//!   to its nearest centroid,
//! * [`kmeans`] — Lloyd iterations with freeze-and-flag handling of clusters
//!   that empty out mid-run,
//! * [`kmeanspp_init`] / [`kmeanspp_reseed`] — D² seeding, also used to
//!   repair degenerate centroids,
//! * [`brute_force_mssc`] — exhaustive partition enumeration for tiny
//!   instances, used as an independent test oracle.
//!
//! All distances are squared Euclidean; no square roots are taken anywhere.
//! Nearest-centroid ties break toward the lowest centroid index so that every
//! run is reproducible bit for bit.

mod centroid;
mod dataset;
mod error;
mod kmeans;
mod objective;
mod oracle;
mod seeding;

pub use centroid::{CentroidSet, LabelAssignment};
pub use dataset::{Dataset, DatasetId, SampleRef, SampleView};
pub use error::MsscError;
pub use kmeans::{kmeans, KmeansOutcome};
pub use objective::{assign_labels, mssc_objective, nearest_active, objective_on_active};
pub use oracle::{brute_force_mssc, OracleOutcome, ORACLE_MAX_CLUSTERS, ORACLE_MAX_POINTS};
pub use seeding::{kmeanspp_fill_slots, kmeanspp_init, kmeanspp_reseed, SeedOutcome};

/// Squared Euclidean distance between two points of equal dimension.
#[inline]
pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        let d = x - y;
        acc += d * d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::squared_distance;

    #[test]
    fn squared_distance_is_squared() {
        assert_eq!(squared_distance(&[0.0, 0.0], &[3.0, 4.0]), 25.0);
        assert_eq!(squared_distance(&[1.0], &[1.0]), 0.0);
    }
}
