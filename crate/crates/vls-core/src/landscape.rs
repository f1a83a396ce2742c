use std::sync::Arc;

use mssc_kernel::{Dataset, SampleRef, SampleView};

use crate::error::VlsError;
use crate::formulation::{Formulation, FormulationRegistry};

/// Shape of the feasible region a landscape's solutions live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibleRegion {
    /// Any real matrix of the given shape (centroid sets for clustering).
    RealMatrix { rows: usize, cols: usize },
}

/// One fixed objective surface: a sample of the data paired with a
/// formulation.
///
/// A landscape keeps both of its originators, so mapping it back to the
/// `(sample, formulation)` pair it was evaluated from is exact by
/// construction — see [`Landscape::originators`].
#[derive(Debug, Clone)]
pub struct Landscape {
    dataset: Arc<Dataset>,
    sample: SampleRef,
    formulation: Formulation,
}

/// Realizes the landscape for `sample` under `formulation`.
///
/// The sample must resolve against `dataset` and the formulation must be the
/// registered entry for its id.
pub fn evaluate_landscape(
    dataset: &Arc<Dataset>,
    sample: SampleRef,
    formulation: Formulation,
    registry: &FormulationRegistry,
) -> Result<Landscape, VlsError> {
    if !registry.contains(&formulation) {
        return Err(VlsError::UnknownFormulation {
            id: formulation.id().index(),
        });
    }
    // resolving the view validates dataset identity and index bounds
    sample.view(dataset)?;
    Ok(Landscape {
        dataset: Arc::clone(dataset),
        sample,
        formulation,
    })
}

impl Landscape {
    /// The `(sample, formulation)` pair this landscape was evaluated from.
    pub fn originators(&self) -> (&SampleRef, &Formulation) {
        (&self.sample, &self.formulation)
    }

    pub fn dataset(&self) -> &Arc<Dataset> {
        &self.dataset
    }

    pub fn sample(&self) -> &SampleRef {
        &self.sample
    }

    pub fn formulation(&self) -> &Formulation {
        &self.formulation
    }

    /// Resolved view of the sample rows; infallible because resolution was
    /// checked when the landscape was evaluated.
    pub fn sample_view(&self) -> SampleView<'_> {
        self.sample
            .view(&self.dataset)
            .expect("sample validated at landscape evaluation")
    }

    pub fn feasible_region(&self) -> FeasibleRegion {
        match self.formulation.kind() {
            crate::formulation::FormulationKind::Mssc { clusters } => FeasibleRegion::RealMatrix {
                rows: clusters,
                cols: self.dataset.cols(),
            },
        }
    }

    /// Rebinds this landscape to a different sample of the same dataset.
    pub(crate) fn with_sample(&self, sample: SampleRef) -> Landscape {
        Landscape {
            dataset: Arc::clone(&self.dataset),
            sample,
            formulation: self.formulation,
        }
    }

    /// Rebinds this landscape to a different formulation, keeping the sample.
    pub(crate) fn with_formulation(&self, formulation: Formulation) -> Landscape {
        Landscape {
            dataset: Arc::clone(&self.dataset),
            sample: self.sample.clone(),
            formulation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulation::FormulationKind;
    use mssc_kernel::mssc_objective;
    use mssc_kernel::CentroidSet;

    fn registry() -> FormulationRegistry {
        FormulationRegistry::new(vec![
            FormulationKind::Mssc { clusters: 2 },
            FormulationKind::Mssc { clusters: 1 },
        ])
        .unwrap()
    }

    #[test]
    fn objective_on_the_full_dataset_sums_every_point() {
        let dataset = Arc::new(
            Dataset::from_rows(vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![4.0, 0.0]]).unwrap(),
        );
        let registry = registry();
        let formulation = *registry.by_index(1).unwrap();
        let landscape =
            evaluate_landscape(&dataset, SampleRef::full(&dataset), formulation, &registry)
                .unwrap();
        let c = CentroidSet::from_rows(vec![vec![2.0, 0.0]]).unwrap();
        assert_eq!(mssc_objective(&c, &landscape.sample_view()).unwrap(), 8.0);
    }

    #[test]
    fn empty_sample_yields_the_empty_sum() {
        let dataset = Arc::new(Dataset::from_rows(vec![vec![1.0]]).unwrap());
        let registry = FormulationRegistry::single(FormulationKind::Mssc { clusters: 1 }).unwrap();
        let sample = SampleRef::new(&dataset, vec![]).unwrap();
        let landscape =
            evaluate_landscape(&dataset, sample, *registry.by_index(0).unwrap(), &registry)
                .unwrap();
        let c = CentroidSet::from_rows(vec![vec![9.0]]).unwrap();
        assert_eq!(mssc_objective(&c, &landscape.sample_view()).unwrap(), 0.0);
    }

    #[test]
    fn unregistered_formulation_is_rejected() {
        let dataset = Arc::new(Dataset::from_rows(vec![vec![1.0]]).unwrap());
        let registry = registry();
        let other = FormulationRegistry::single(FormulationKind::Mssc { clusters: 7 }).unwrap();
        let foreign = *other.by_index(0).unwrap();
        assert!(matches!(
            evaluate_landscape(&dataset, SampleRef::full(&dataset), foreign, &registry),
            Err(VlsError::UnknownFormulation { .. })
        ));
    }

    #[test]
    fn foreign_sample_is_rejected() {
        let a = Arc::new(Dataset::from_rows(vec![vec![1.0]]).unwrap());
        let b = Arc::new(Dataset::from_rows(vec![vec![1.0]]).unwrap());
        let registry = registry();
        let sample = SampleRef::full(&b);
        assert!(evaluate_landscape(&a, sample, *registry.by_index(0).unwrap(), &registry).is_err());
    }

    #[test]
    fn feasible_region_tracks_clusters_and_dims() {
        let dataset = Arc::new(Dataset::from_rows(vec![vec![0.0, 1.0, 2.0]]).unwrap());
        let registry = registry();
        let landscape = evaluate_landscape(
            &dataset,
            SampleRef::full(&dataset),
            *registry.by_index(0).unwrap(),
            &registry,
        )
        .unwrap();
        assert_eq!(
            landscape.feasible_region(),
            FeasibleRegion::RealMatrix { rows: 2, cols: 3 }
        );
    }
}
