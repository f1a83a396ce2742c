use crate::formulation::{Formulation, FormulationRegistry};

/// Lexicographic acceptance over per-formulation objective vectors.
///
/// Scans the positions in order: a strictly smaller candidate value accepts,
/// a strictly larger one rejects, a tie defers to the next position. A full
/// tie rejects.
pub fn accept_values(incumbent: &[f64], candidate: &[f64]) -> bool {
    debug_assert_eq!(incumbent.len(), candidate.len());
    for (inc, cand) in incumbent.iter().zip(candidate.iter()) {
        if cand < inc {
            return true;
        }
        if cand > inc {
            return false;
        }
    }
    false
}

/// Multi-formulation acceptance: walks the registry in order, comparing the
/// candidate against the incumbent under each formulation's objective, and
/// moves to the next formulation only on exact ties.
///
/// With a single registered formulation this is plain strict improvement.
pub fn accept<S>(
    incumbent: &S,
    candidate: &S,
    registry: &FormulationRegistry,
    mut objective: impl FnMut(&Formulation, &S) -> f64,
) -> bool {
    for formulation in registry.iter() {
        let inc = objective(formulation, incumbent);
        let cand = objective(formulation, candidate);
        if cand < inc {
            return true;
        }
        if cand > inc {
            return false;
        }
    }
    false
}
