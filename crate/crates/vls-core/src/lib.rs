//! A search engine that perturbs the optimization landscape itself.
//!
//! Classic perturbation-based heuristics shake the incumbent *solution* and
//! search again. This engine instead shakes the *landscape* the objective is
//! defined on: a landscape is the pairing of an input sample (which rows of a
//! dataset the objective sees) with a problem formulation (which objective is
//! being minimized, e.g. how many clusters). Re-sampling the data or swapping
//! the formulation deforms the objective surface, which can turn the basin a
//! local search is stuck in into a slope while leaving the overall shape of
//! the problem intact.
//!
//! The driver ([`run_bvls`]) alternates two phases — data shaking and
//! formulation shaking — each with its own iteration quota and shake-power
//! range. One iteration is always:
//!
//! 1. shake the landscape at the current power `k` ([`shake_landscape`]),
//! 2. carry the incumbent solution onto the shaken landscape
//!    ([`VlsProblem::transition`]),
//! 3. run the problem's local search there ([`VlsProblem::local_search`]),
//! 4. decide whether to move and how `k` evolves
//!    ([`neighborhood_change_sequential`] or [`neighborhood_change_cyclic`]).
//!
//! Problem semantics (objective, local search, solution transport) plug in
//! through the [`VlsProblem`] trait; everything else — neighborhoods, shake
//! powers, acceptance, budgets, deterministic RNG streams — is generic.

mod accept;
mod change;
mod engine;
mod error;
mod formulation;
mod landscape;
mod neighborhood;
mod problem;
pub mod rng;
mod search;

pub use accept::{accept, accept_values};
pub use change::{neighborhood_change_cyclic, neighborhood_change_sequential, SequentialChange};
pub use engine::{
    run_bvls, run_bvls_with_rng, AcceptanceRule, Budget, BvlsOutcome, ChangeScheme, EngineState,
    IterationRecord, Phase, PhaseSwitch, PowerBounds, RunRecord, TraceRow, VlsConfig,
};
pub use error::VlsError;
pub use formulation::{Formulation, FormulationId, FormulationKind, FormulationRegistry};
pub use landscape::{evaluate_landscape, FeasibleRegion, Landscape};
pub use neighborhood::{
    shake_landscape, Axis, DistanceKind, LandscapeNeighborhoods, NeighborhoodSpec, ShakePower,
};
pub use problem::{LocalSearchOutcome, VlsProblem};
pub use rng::{derive_seed, EngineRng};
pub use search::best_improvement_local_search;
