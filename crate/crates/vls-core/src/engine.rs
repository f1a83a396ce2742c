use std::time::{Duration, Instant};

use crate::change::{neighborhood_change_cyclic, neighborhood_change_sequential};
use crate::error::VlsError;
use crate::formulation::FormulationRegistry;
use crate::landscape::Landscape;
use crate::neighborhood::{shake_landscape, LandscapeNeighborhoods, ShakePower};
use crate::problem::VlsProblem;
use crate::rng::EngineRng;

/// The two shaking phases of the driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Data = 0,
    Formulation = 1,
}

impl Phase {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn toggled(self) -> Phase {
        match self {
            Phase::Data => Phase::Formulation,
            Phase::Formulation => Phase::Data,
        }
    }
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Phase::Data => write!(f, "data"),
            Phase::Formulation => write!(f, "formulation"),
        }
    }
}

/// Per-phase shake-power range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerBounds {
    pub min: u32,
    pub max: u32,
}

impl PowerBounds {
    pub fn new(min: u32, max: u32) -> Result<Self, VlsError> {
        if min > max {
            return Err(VlsError::InvalidPowerBounds { min, max });
        }
        Ok(Self { min, max })
    }

    pub fn fixed(power: u32) -> Self {
        Self {
            min: power,
            max: power,
        }
    }
}

/// Stopping rule: an iteration cap, a wall-clock cap, or both (whichever
/// hits first).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_iterations: Option<u64>,
    pub max_wall_clock: Option<Duration>,
}

impl Budget {
    pub fn iterations(max: u64) -> Self {
        Self {
            max_iterations: Some(max),
            max_wall_clock: None,
        }
    }

    pub fn wall_clock(max: Duration) -> Self {
        Self {
            max_iterations: None,
            max_wall_clock: Some(max),
        }
    }

    pub fn with_wall_clock(mut self, max: Duration) -> Self {
        self.max_wall_clock = Some(max);
        self
    }

    fn validate(&self) -> Result<(), VlsError> {
        match (self.max_iterations, self.max_wall_clock) {
            (None, None) => Err(VlsError::InvalidConfig(
                "budget needs an iteration cap or a wall-clock cap".into(),
            )),
            (Some(0), _) => Err(VlsError::InvalidConfig(
                "iteration budget must be positive".into(),
            )),
            (_, Some(d)) if d.is_zero() => Err(VlsError::InvalidConfig(
                "wall-clock budget must be positive".into(),
            )),
            _ => Ok(()),
        }
    }

    fn exhausted(&self, iterations_done: u64, elapsed: Duration) -> bool {
        if let Some(max) = self.max_iterations {
            if iterations_done >= max {
                return true;
            }
        }
        if let Some(max) = self.max_wall_clock {
            if elapsed >= max {
                return true;
            }
        }
        false
    }
}

/// Which incumbent value the neighborhood-change comparison uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AcceptanceRule {
    /// Re-evaluate the carried incumbent on the shaken landscape and compare
    /// there: both sides of the comparison see the same objective surface.
    #[default]
    PerturbedObjective,
    /// Keep-the-best: compare the candidate's objective against the recorded
    /// incumbent value, which may have been measured on an earlier sample.
    RecordedBest,
}

/// How the shake power evolves after each iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChangeScheme {
    /// Reset on improvement, step up (wrapping) otherwise.
    #[default]
    Sequential,
    /// Always step up, wrapping; acceptance still requires strict
    /// improvement.
    Cyclic,
}

/// When the driver hands control to the other phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseSwitch {
    /// After the phase's iteration quota (the default driver).
    #[default]
    IterationQuota,
    /// After this many consecutive non-improving iterations in the phase.
    NonImprovingLimit(u64),
}

/// Engine parameters.
#[derive(Debug, Clone)]
pub struct VlsConfig {
    /// Shake-power range per phase, indexed by [`Phase::index`].
    pub shake_bounds: [PowerBounds; 2],
    /// Iteration quota per phase; a phase with quota 0 is skipped entirely.
    pub phase_quotas: [u64; 2],
    pub budget: Budget,
    pub seed: u64,
    /// Worker count; the engine itself is single-threaded, the count is
    /// carried for pools built on top.
    pub workers: u32,
    pub acceptance: AcceptanceRule,
    /// Neighborhood-change scheme per phase.
    pub change_schemes: [ChangeScheme; 2],
    pub phase_switch: PhaseSwitch,
}

impl VlsConfig {
    pub fn new(
        shake_bounds: [PowerBounds; 2],
        phase_quotas: [u64; 2],
        budget: Budget,
        seed: u64,
    ) -> Self {
        Self {
            shake_bounds,
            phase_quotas,
            budget,
            seed,
            workers: 1,
            acceptance: AcceptanceRule::default(),
            change_schemes: [ChangeScheme::default(); 2],
            phase_switch: PhaseSwitch::default(),
        }
    }

    pub fn validate(&self) -> Result<(), VlsError> {
        self.budget.validate()?;
        if self.phase_quotas[0] + self.phase_quotas[1] == 0 {
            return Err(VlsError::InvalidConfig(
                "at least one phase quota must be positive".into(),
            ));
        }
        if self.workers == 0 {
            return Err(VlsError::InvalidConfig(
                "worker count must be at least 1".into(),
            ));
        }
        if let PhaseSwitch::NonImprovingLimit(0) = self.phase_switch {
            return Err(VlsError::InvalidConfig(
                "non-improving phase limit must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Mutable state of one engine instance between iterations.
#[derive(Debug, Clone)]
pub struct EngineState<S> {
    /// Global iteration counter.
    pub iteration: u64,
    pub phase: Phase,
    pub shake_power: u32,
    pub solution: S,
    pub landscape: Landscape,
    /// Objective of the incumbent as of its last acceptance.
    pub incumbent_value: f64,
}

/// One row of the per-iteration trace.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub t: u64,
    pub phase: Phase,
    pub shake_power: u32,
    pub sample_size: usize,
    /// Incumbent objective after this iteration's acceptance decision.
    pub objective: f64,
    pub improved: bool,
    pub elapsed_ms: f64,
}

/// The deterministic fields of a trace row; wall-clock timing is excluded so
/// traces from repeated runs compare equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub t: u64,
    pub phase: u8,
    pub shake_power: u32,
    pub sample_size: usize,
    pub objective: f64,
    pub improved: bool,
}

/// Full per-iteration trace plus run-level bookkeeping.
#[derive(Debug, Clone, Default)]
pub struct RunRecord {
    pub iterations: Vec<IterationRecord>,
    /// Incumbent objective at termination.
    pub final_objective: f64,
    /// Count of non-improving iterations (recorded, drives nothing).
    pub unsuccessful_iterations: u64,
    /// Seeding draws that fell back to uniform selection.
    pub uniform_seed_fallbacks: u64,
    pub wall_time: Duration,
}

impl RunRecord {
    /// Rows where the incumbent moved.
    pub fn improving_events(&self) -> impl Iterator<Item = &IterationRecord> {
        self.iterations.iter().filter(|row| row.improved)
    }

    /// Timing-free rows for determinism comparisons.
    pub fn trace(&self) -> Vec<TraceRow> {
        self.iterations
            .iter()
            .map(|row| TraceRow {
                t: row.t,
                phase: row.phase.index() as u8,
                shake_power: row.shake_power,
                sample_size: row.sample_size,
                objective: row.objective,
                improved: row.improved,
            })
            .collect()
    }
}

/// Result of a driver run.
#[derive(Debug, Clone)]
pub struct BvlsOutcome<S> {
    pub solution: S,
    pub landscape: Landscape,
    pub value: f64,
    pub record: RunRecord,
}

/// Runs the two-phase shake/search/change driver with streams derived from
/// `config.seed` for worker 0.
pub fn run_bvls<P: VlsProblem>(
    problem: &P,
    start: P::Solution,
    start_landscape: Landscape,
    registry: &FormulationRegistry,
    neighborhoods: &LandscapeNeighborhoods,
    config: &VlsConfig,
) -> Result<BvlsOutcome<P::Solution>, VlsError> {
    let rng = EngineRng::for_worker(config.seed, 0);
    run_bvls_with_rng(problem, start, start_landscape, registry, neighborhoods, config, rng)
}

/// As [`run_bvls`], with caller-supplied streams (worker pools derive one
/// [`EngineRng`] per worker).
pub fn run_bvls_with_rng<P: VlsProblem>(
    problem: &P,
    start: P::Solution,
    start_landscape: Landscape,
    registry: &FormulationRegistry,
    neighborhoods: &LandscapeNeighborhoods,
    config: &VlsConfig,
    mut rng: EngineRng,
) -> Result<BvlsOutcome<P::Solution>, VlsError> {
    config.validate()?;
    let started = Instant::now();

    let initial_value = problem.objective(&start_landscape, &start)?;
    let mut state = EngineState {
        iteration: 0,
        phase: Phase::Data,
        shake_power: config.shake_bounds[Phase::Data.index()].min,
        solution: start,
        landscape: start_landscape,
        incumbent_value: initial_value,
    };
    let mut iterations: Vec<IterationRecord> = Vec::new();
    let mut unsuccessful = 0u64;

    'outer: while !config.budget.exhausted(state.iteration, started.elapsed()) {
        let phase = state.phase;
        let quota = config.phase_quotas[phase.index()];
        if quota == 0 {
            state.phase = phase.toggled();
            continue;
        }
        let bounds = config.shake_bounds[phase.index()];
        state.shake_power = bounds.min;
        let mut in_phase = 0u64;
        let mut non_improving_streak = 0u64;

        loop {
            let phase_done = match config.phase_switch {
                PhaseSwitch::IterationQuota => in_phase >= quota,
                PhaseSwitch::NonImprovingLimit(limit) => non_improving_streak >= limit,
            };
            if phase_done {
                break;
            }
            if config.budget.exhausted(state.iteration, started.elapsed()) {
                break 'outer;
            }
            let iteration_started = Instant::now();

            let axis_rng = match phase {
                Phase::Data => &mut rng.sampling,
                Phase::Formulation => &mut rng.shaking,
            };
            let shaken = shake_landscape(
                &state.landscape,
                neighborhoods,
                ShakePower::Finite(state.shake_power),
                phase,
                registry,
                axis_rng,
            )?;
            let shaken_sample_size = shaken.sample().len();

            let carried = problem.transition(
                state.solution.clone(),
                &state.landscape,
                &shaken,
                &mut rng,
            )?;
            let comparison_value = match config.acceptance {
                AcceptanceRule::RecordedBest => state.incumbent_value,
                AcceptanceRule::PerturbedObjective => problem.objective(&shaken, &carried)?,
            };
            let searched = problem.local_search(&shaken, carried, &mut rng)?;

            let used_power = state.shake_power;
            let (accepted, next_power) = match config.change_schemes[phase.index()] {
                ChangeScheme::Sequential => {
                    let change = neighborhood_change_sequential(
                        searched.objective,
                        comparison_value,
                        used_power,
                        bounds.min,
                        bounds.max,
                    );
                    (change.accepted, change.next_power)
                }
                ChangeScheme::Cyclic => (
                    searched.objective < comparison_value,
                    neighborhood_change_cyclic(used_power, bounds.min, bounds.max),
                ),
            };
            state.shake_power = next_power;
            if accepted {
                state.solution = searched.solution;
                state.landscape = shaken;
                state.incumbent_value = searched.objective;
                non_improving_streak = 0;
            } else {
                unsuccessful += 1;
                non_improving_streak += 1;
            }

            iterations.push(IterationRecord {
                t: state.iteration,
                phase,
                shake_power: used_power,
                sample_size: shaken_sample_size,
                objective: state.incumbent_value,
                improved: accepted,
                elapsed_ms: iteration_started.elapsed().as_secs_f64() * 1e3,
            });
            in_phase += 1;
            state.iteration += 1;
        }
        state.phase = phase.toggled();
    }

    let record = RunRecord {
        iterations,
        final_objective: state.incumbent_value,
        unsuccessful_iterations: unsuccessful,
        uniform_seed_fallbacks: 0,
        wall_time: started.elapsed(),
    };
    Ok(BvlsOutcome {
        solution: state.solution,
        landscape: state.landscape,
        value: state.incumbent_value,
        record,
    })
}
