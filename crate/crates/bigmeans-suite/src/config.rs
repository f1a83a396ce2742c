use std::time::Duration;

use mssc_kernel::Dataset;
use vls_core::PowerBounds;

use crate::error::SuiteError;

/// Which suite algorithm a configuration drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    BigMeans,
    BigOptima,
    BigVns,
}

impl Algorithm {
    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::BigMeans => "bigmeans",
            Algorithm::BigOptima => "bigoptima",
            Algorithm::BigVns => "bigvns",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bigmeans" => Ok(Algorithm::BigMeans),
            "bigoptima" => Ok(Algorithm::BigOptima),
            "bigvns" => Ok(Algorithm::BigVns),
            other => Err(format!(
                "unknown algorithm '{other}' (expected bigmeans, bigoptima or bigvns)"
            )),
        }
    }
}

/// Fixed sample size, or a range the size is drawn from per phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleSizeSpec {
    Fixed(usize),
    Range { min: usize, max: usize },
}

impl SampleSizeSpec {
    pub fn fixed(&self) -> Option<usize> {
        match self {
            SampleSizeSpec::Fixed(s) => Some(*s),
            SampleSizeSpec::Range { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match *self {
            SampleSizeSpec::Fixed(s) => (s, s),
            SampleSizeSpec::Range { min, max } => (min, max),
        }
    }
}

/// Parameters shared by the suite algorithms.
#[derive(Debug, Clone)]
pub struct BigMeansConfig {
    pub algorithm: Algorithm,
    /// Cluster count `p`.
    pub clusters: usize,
    pub sample_size: SampleSizeSpec,
    /// Iteration budget `T`.
    pub iterations: u64,
    /// Optional wall-clock cap; whichever budget hits first stops the run.
    pub max_wall_clock: Option<Duration>,
    pub seed: u64,
    pub workers: u32,
    /// Solution-shake power range (size-fixed cyclic variant only).
    pub solution_shake: Option<PowerBounds>,
    /// Iterations per data phase for the size-range variant: the first
    /// iteration of each phase re-draws the sample size.
    pub data_phase_quota: u64,
    /// Ablation switch: compare candidate and incumbent on the fresh sample
    /// instead of against the recorded best value.
    pub reevaluate_on_new_sample: bool,
    pub kmeans_tol: f64,
    pub kmeans_max_iter: u32,
}

impl BigMeansConfig {
    pub fn big_means(clusters: usize, sample_size: usize, iterations: u64, seed: u64) -> Self {
        Self {
            algorithm: Algorithm::BigMeans,
            clusters,
            sample_size: SampleSizeSpec::Fixed(sample_size),
            iterations,
            max_wall_clock: None,
            seed,
            workers: 1,
            solution_shake: None,
            data_phase_quota: 1,
            reevaluate_on_new_sample: false,
            kmeans_tol: 1e-6,
            kmeans_max_iter: 300,
        }
    }

    pub fn big_optima(
        clusters: usize,
        size_min: usize,
        size_max: usize,
        iterations: u64,
        seed: u64,
    ) -> Self {
        Self {
            algorithm: Algorithm::BigOptima,
            sample_size: SampleSizeSpec::Range {
                min: size_min,
                max: size_max,
            },
            data_phase_quota: 10,
            ..Self::big_means(clusters, size_min, iterations, seed)
        }
    }

    pub fn big_vns(
        clusters: usize,
        sample_size: usize,
        iterations: u64,
        seed: u64,
        shake_max: u32,
    ) -> Self {
        Self {
            algorithm: Algorithm::BigVns,
            solution_shake: Some(PowerBounds {
                min: 0,
                max: shake_max,
            }),
            ..Self::big_means(clusters, sample_size, iterations, seed)
        }
    }

    pub fn with_workers(mut self, workers: u32) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self, dataset: &Dataset) -> Result<(), SuiteError> {
        let fail = |msg: String| Err(SuiteError::InvalidConfig(msg));
        if self.clusters == 0 {
            return fail("cluster count must be at least 1".into());
        }
        if self.iterations == 0 && self.max_wall_clock.is_none() {
            return fail("iteration budget must be positive".into());
        }
        if self.workers == 0 {
            return fail("worker count must be at least 1".into());
        }
        let rows = dataset.rows();
        let (min, max) = self.sample_size.bounds();
        if min == 0 {
            return fail("sample size must be at least 1".into());
        }
        if min > max {
            return fail(format!("sample range {min}:{max} has min > max"));
        }
        if max > rows {
            return fail(format!(
                "sample size {max} exceeds the dataset's {rows} rows"
            ));
        }
        match self.algorithm {
            Algorithm::BigMeans | Algorithm::BigVns => {
                if self.sample_size.fixed().is_none() {
                    return fail(format!(
                        "{} requires a fixed sample size, not a range",
                        self.algorithm.tag()
                    ));
                }
            }
            Algorithm::BigOptima => {
                if self.data_phase_quota == 0 {
                    return fail("data phase quota must be at least 1".into());
                }
            }
        }
        match (self.algorithm, self.solution_shake) {
            (Algorithm::BigVns, Some(bounds)) => {
                if bounds.min > bounds.max {
                    return fail("solution-shake range has min > max".into());
                }
                if bounds.max as usize > self.clusters {
                    return fail(format!(
                        "solution-shake power {} exceeds the cluster count {}",
                        bounds.max, self.clusters
                    ));
                }
            }
            (Algorithm::BigVns, None) => {
                return fail("the cyclic variant requires a solution-shake range".into());
            }
            (_, Some(_)) => {
                return fail(format!(
                    "solution shaking is not part of {}",
                    self.algorithm.tag()
                ));
            }
            (_, None) => {}
        }
        Ok(())
    }
}
