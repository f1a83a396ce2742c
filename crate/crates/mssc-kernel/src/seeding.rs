use rand::Rng;

use crate::centroid::CentroidSet;
use crate::dataset::SampleView;
use crate::error::MsscError;
use crate::squared_distance;

/// Bookkeeping from a seeding call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SeedOutcome {
    /// Number of draws that fell back to uniform selection because the
    /// entire D² mass was zero (every sample point coincides with an
    /// already-chosen centroid).
    pub uniform_fallbacks: u32,
}

/// Fills the given degenerate `slots` of `centroids` with D²-weighted draws
/// from `sample`, in slot order.
///
/// Each draw picks a sample point with probability proportional to its
/// squared distance to the nearest already-active centroid (including slots
/// filled earlier in this call). When no centroid is active yet, the first
/// draw is uniform. When the total D² mass is zero, the draw falls back to a
/// uniform pick with replacement and is counted in the outcome.
pub fn kmeanspp_fill_slots<R: Rng + ?Sized>(
    sample: &SampleView<'_>,
    centroids: &mut CentroidSet,
    slots: &[usize],
    rng: &mut R,
) -> Result<SeedOutcome, MsscError> {
    if slots.is_empty() {
        return Ok(SeedOutcome::default());
    }
    if sample.is_empty() {
        return Err(MsscError::CannotSeedEmptySample);
    }
    if centroids.dims() != sample.dims() {
        return Err(MsscError::PointDimensionMismatch {
            expected: sample.dims(),
            found: centroids.dims(),
        });
    }
    debug_assert!(slots.iter().all(|&j| centroids.is_degenerate(j)));

    let len = sample.len();
    // squared distance from each sample point to its nearest active centroid
    let mut min_d2 = vec![f64::INFINITY; len];
    let mut any_active = false;
    for j in centroids.active_slots() {
        any_active = true;
        let row = centroids.row(j).to_vec();
        for (i, point) in sample.iter_points().enumerate() {
            let d = squared_distance(point, &row);
            if d < min_d2[i] {
                min_d2[i] = d;
            }
        }
    }

    let mut outcome = SeedOutcome::default();
    for &slot in slots {
        let pick = if !any_active {
            rng.random_range(0..len)
        } else {
            let total: f64 = min_d2.iter().sum();
            if total > 0.0 && total.is_finite() {
                let threshold = rng.random::<f64>() * total;
                let mut cumulative = 0.0;
                let mut chosen = len - 1;
                for (i, &w) in min_d2.iter().enumerate() {
                    cumulative += w;
                    if cumulative > threshold {
                        chosen = i;
                        break;
                    }
                }
                chosen
            } else {
                outcome.uniform_fallbacks += 1;
                rng.random_range(0..len)
            }
        };

        let point = sample.point(pick);
        centroids.row_mut(slot).copy_from_slice(point);
        centroids.set_degenerate(slot, false);
        any_active = true;
        for (i, p) in sample.iter_points().enumerate() {
            let d = squared_distance(p, point);
            if d < min_d2[i] {
                min_d2[i] = d;
            }
        }
    }
    Ok(outcome)
}

/// Repairs every degenerate slot of `centroids` with D² draws from `sample`.
pub fn kmeanspp_reseed<R: Rng + ?Sized>(
    sample: &SampleView<'_>,
    centroids: &mut CentroidSet,
    rng: &mut R,
) -> Result<SeedOutcome, MsscError> {
    let slots = centroids.degenerate_slots();
    kmeanspp_fill_slots(sample, centroids, &slots, rng)
}

/// Fresh D²-seeded set of `clusters` centroids drawn from `sample`.
pub fn kmeanspp_init<R: Rng + ?Sized>(
    sample: &SampleView<'_>,
    clusters: usize,
    rng: &mut R,
) -> Result<(CentroidSet, SeedOutcome), MsscError> {
    if clusters == 0 {
        return Err(MsscError::NoCentroids);
    }
    let mut centroids = CentroidSet::all_degenerate(clusters, sample.dims());
    let outcome = kmeanspp_reseed(sample, &mut centroids, rng)?;
    Ok((centroids, outcome))
}
