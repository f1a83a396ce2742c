use std::cell::Cell;

use rand_chacha::ChaCha8Rng;

use mssc_kernel::{
    kmeans, kmeanspp_fill_slots, kmeanspp_reseed, objective_on_active, CentroidSet, SampleView,
    SeedOutcome,
};
use vls_core::{
    EngineRng, FormulationKind, Landscape, LocalSearchOutcome, VlsError, VlsProblem,
};

/// Clustering semantics plugged into the landscape-search engine.
///
/// * objective — sum of squared distances to nearest active centroid on the
///   landscape's sample (`+inf` while every slot is degenerate),
/// * local search — repair degenerate slots with D² seeding, then Lloyd,
/// * transition — centroid matrices are feasible on any sample, so moving
///   between same-width landscapes is the identity; a cluster-count change
///   truncates or pads with D² draws from the target sample,
/// * solution shake — re-seed `k` uniformly chosen centroids from the
///   current sample.
pub struct MsscProblem {
    pub kmeans_tol: f64,
    pub kmeans_max_iter: u32,
    seed_fallbacks: Cell<u64>,
}

impl MsscProblem {
    pub fn new(kmeans_tol: f64, kmeans_max_iter: u32) -> Self {
        Self {
            kmeans_tol,
            kmeans_max_iter,
            seed_fallbacks: Cell::new(0),
        }
    }

    /// Cumulative count of seeding draws that fell back to uniform selection.
    pub fn seed_fallbacks(&self) -> u64 {
        self.seed_fallbacks.get()
    }

    fn count_fallbacks(&self, outcome: SeedOutcome) {
        self.seed_fallbacks
            .set(self.seed_fallbacks.get() + u64::from(outcome.uniform_fallbacks));
    }

    fn expected_clusters(landscape: &Landscape) -> usize {
        let FormulationKind::Mssc { clusters } = landscape.formulation().kind();
        clusters
    }
}

/// Replaces `count` uniformly chosen centroid slots with D² draws from the
/// sample. Zero replacements consume no randomness at all.
pub fn reseed_random_slots(
    sample: &SampleView<'_>,
    centroids: &mut CentroidSet,
    count: u32,
    rng: &mut ChaCha8Rng,
) -> Result<SeedOutcome, VlsError> {
    if count == 0 {
        return Ok(SeedOutcome::default());
    }
    let clusters = centroids.cluster_count();
    let picked = (count as usize).min(clusters);
    let mut slots = rand::seq::index::sample(rng, clusters, picked).into_vec();
    slots.sort_unstable();
    for &slot in &slots {
        centroids.set_degenerate(slot, true);
    }
    Ok(kmeanspp_fill_slots(sample, centroids, &slots, rng)?)
}

impl VlsProblem for MsscProblem {
    type Solution = CentroidSet;

    fn objective(&self, landscape: &Landscape, solution: &CentroidSet) -> Result<f64, VlsError> {
        let clusters = Self::expected_clusters(landscape);
        if solution.cluster_count() != clusters {
            return Err(VlsError::InvalidConfig(format!(
                "solution has {} centroids, landscape expects {clusters}",
                solution.cluster_count()
            )));
        }
        Ok(objective_on_active(solution, &landscape.sample_view()))
    }

    fn local_search(
        &self,
        landscape: &Landscape,
        start: CentroidSet,
        rng: &mut EngineRng,
    ) -> Result<LocalSearchOutcome<CentroidSet>, VlsError> {
        let view = landscape.sample_view();
        if view.is_empty() {
            // the empty sum is already minimal for any centroid set
            return Ok(LocalSearchOutcome {
                solution: start,
                objective: 0.0,
            });
        }
        let mut centroids = start;
        if centroids.any_degenerate() {
            let outcome = kmeanspp_reseed(&view, &mut centroids, &mut rng.init)?;
            self.count_fallbacks(outcome);
        }
        let out = kmeans(&view, &centroids, self.kmeans_tol, self.kmeans_max_iter)?;
        Ok(LocalSearchOutcome {
            solution: out.centroids,
            objective: out.objective,
        })
    }

    fn transition(
        &self,
        solution: CentroidSet,
        _from: &Landscape,
        to: &Landscape,
        rng: &mut EngineRng,
    ) -> Result<CentroidSet, VlsError> {
        let target = Self::expected_clusters(to);
        let current = solution.cluster_count();
        if target == current {
            return Ok(solution);
        }
        let mut centroids = solution;
        if target < current {
            centroids.truncate(target);
            return Ok(centroids);
        }
        let view = to.sample_view();
        if view.is_empty() {
            return Err(VlsError::PadOnEmptySample);
        }
        centroids.push_degenerate_slots(target - current);
        let slots: Vec<usize> = (current..target).collect();
        let outcome = kmeanspp_fill_slots(&view, &mut centroids, &slots, &mut rng.init)?;
        self.count_fallbacks(outcome);
        Ok(centroids)
    }

    fn shake_solution(
        &self,
        landscape: &Landscape,
        solution: CentroidSet,
        power: u32,
        rng: &mut EngineRng,
    ) -> Result<CentroidSet, VlsError> {
        let mut centroids = solution;
        let outcome = reseed_random_slots(
            &landscape.sample_view(),
            &mut centroids,
            power,
            &mut rng.shaking,
        )?;
        self.count_fallbacks(outcome);
        Ok(centroids)
    }
}
