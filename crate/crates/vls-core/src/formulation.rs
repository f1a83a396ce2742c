use crate::error::VlsError;

/// Position of a formulation inside its registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormulationId(usize);

impl FormulationId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for FormulationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{}", self.0)
    }
}

/// What is being minimized, with its kind-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulationKind {
    /// Minimum sum-of-squares clustering into `clusters` groups.
    Mssc { clusters: usize },
}

impl FormulationKind {
    fn validate(&self) -> Result<(), VlsError> {
        match self {
            FormulationKind::Mssc { clusters } if *clusters >= 1 => Ok(()),
            FormulationKind::Mssc { .. } => Err(VlsError::InvalidClusterCount),
        }
    }
}

/// An objective/constraint descriptor: one point of the formulation space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Formulation {
    id: FormulationId,
    kind: FormulationKind,
}

impl Formulation {
    pub fn id(&self) -> FormulationId {
        self.id
    }

    pub fn kind(&self) -> FormulationKind {
        self.kind
    }
}

/// The finite, ordered set of formulations available to a run.
///
/// Ids are assigned by position at construction and never change afterwards;
/// both the acceptance scan and fixed-per-power formulation neighborhoods
/// rely on this ordering staying put.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulationRegistry {
    formulations: Vec<Formulation>,
}

impl FormulationRegistry {
    pub fn new(kinds: Vec<FormulationKind>) -> Result<Self, VlsError> {
        if kinds.is_empty() {
            return Err(VlsError::EmptyRegistry);
        }
        let formulations = kinds
            .into_iter()
            .enumerate()
            .map(|(i, kind)| {
                kind.validate()?;
                Ok(Formulation {
                    id: FormulationId(i),
                    kind,
                })
            })
            .collect::<Result<Vec<_>, VlsError>>()?;
        Ok(Self { formulations })
    }

    /// Registry holding exactly one formulation.
    pub fn single(kind: FormulationKind) -> Result<Self, VlsError> {
        Self::new(vec![kind])
    }

    pub fn len(&self) -> usize {
        self.formulations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulations.is_empty()
    }

    pub fn get(&self, id: FormulationId) -> Result<&Formulation, VlsError> {
        self.formulations
            .get(id.index())
            .ok_or(VlsError::UnknownFormulation { id: id.index() })
    }

    pub fn by_index(&self, index: usize) -> Result<&Formulation, VlsError> {
        self.formulations
            .get(index)
            .ok_or(VlsError::UnknownFormulation { id: index })
    }

    /// True when `formulation` is exactly the registered entry for its id.
    pub fn contains(&self, formulation: &Formulation) -> bool {
        self.get(formulation.id())
            .map(|f| f == formulation)
            .unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formulation> {
        self.formulations.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_positional_and_unique() {
        let registry = FormulationRegistry::new(vec![
            FormulationKind::Mssc { clusters: 1 },
            FormulationKind::Mssc { clusters: 2 },
        ])
        .unwrap();
        assert_eq!(registry.len(), 2);
        let ids: Vec<usize> = registry.iter().map(|f| f.id().index()).collect();
        assert_eq!(ids, vec![0, 1]);
    }

    #[test]
    fn zero_clusters_is_rejected() {
        assert!(matches!(
            FormulationRegistry::single(FormulationKind::Mssc { clusters: 0 }),
            Err(VlsError::InvalidClusterCount)
        ));
    }

    #[test]
    fn empty_registry_is_rejected() {
        assert!(matches!(
            FormulationRegistry::new(vec![]),
            Err(VlsError::EmptyRegistry)
        ));
    }

    #[test]
    fn unknown_id_is_an_error() {
        let registry = FormulationRegistry::single(FormulationKind::Mssc { clusters: 2 }).unwrap();
        assert!(registry.by_index(3).is_err());
    }
}
