use crate::error::VlsError;
use crate::landscape::Landscape;
use crate::rng::EngineRng;

/// A locally searched solution together with its objective on the landscape
/// the search ran in.
#[derive(Debug, Clone)]
pub struct LocalSearchOutcome<S> {
    pub solution: S,
    pub objective: f64,
}

/// Problem semantics plugged into the engine: how to evaluate, locally
/// improve, and transport solutions between landscapes.
pub trait VlsProblem {
    type Solution: Clone;

    /// Objective of `solution` on `landscape`.
    fn objective(
        &self,
        landscape: &Landscape,
        solution: &Self::Solution,
    ) -> Result<f64, VlsError>;

    /// Moves `start` to a local minimum of `landscape`'s objective and
    /// reports that minimum's objective value.
    ///
    /// The reported objective must equal what [`VlsProblem::objective`]
    /// computes for the returned solution, bit for bit, since acceptance
    /// decisions and recorded traces use it directly.
    fn local_search(
        &self,
        landscape: &Landscape,
        start: Self::Solution,
        rng: &mut EngineRng,
    ) -> Result<LocalSearchOutcome<Self::Solution>, VlsError>;

    /// Carries a solution feasible in `from` onto the feasible region of
    /// `to`.
    fn transition(
        &self,
        solution: Self::Solution,
        from: &Landscape,
        to: &Landscape,
        rng: &mut EngineRng,
    ) -> Result<Self::Solution, VlsError>;

    /// Optional solution-axis perturbation with the given power; the default
    /// leaves the solution untouched.
    fn shake_solution(
        &self,
        _landscape: &Landscape,
        solution: Self::Solution,
        _power: u32,
        _rng: &mut EngineRng,
    ) -> Result<Self::Solution, VlsError> {
        Ok(solution)
    }
}
