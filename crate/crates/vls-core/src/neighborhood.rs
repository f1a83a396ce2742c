use rand::Rng;
use rand_chacha::ChaCha8Rng;

use mssc_kernel::SampleRef;

use crate::engine::Phase;
use crate::error::VlsError;
use crate::formulation::FormulationRegistry;
use crate::landscape::Landscape;

/// Which component of the search state a neighborhood perturbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Data,
    Formulation,
    Solution,
}

/// The distance underlying a neighborhood, with its axis-specific bounds.
#[derive(Debug, Clone, PartialEq)]
pub enum DistanceKind {
    /// Absolute difference of sample sizes; candidate sizes are clamped to
    /// `[size_min, size_max]`. Membership is redrawn uniformly on every
    /// shake, so power 0 still yields a fresh sample of the same size.
    SampleSizeAbs { size_min: usize, size_max: usize },
    /// Absolute difference of registry indices.
    RegistryIndexAbs,
    /// No distance at all: the neighborhood at power `k` is the fixed
    /// singleton holding the `k`-th registered formulation.
    RegistryFixed,
    /// Number of solution components to re-draw; interpreted by the problem
    /// plug-in, not by [`shake_landscape`].
    SolutionReseed,
}

/// A family of nested neighborhoods indexed by shake power.
///
/// Radii are strictly increasing with the power, so raising the power never
/// shrinks the candidate set.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodSpec {
    axis: Axis,
    power_min: u32,
    power_max: u32,
    radii: Vec<f64>,
    distance: DistanceKind,
}

impl NeighborhoodSpec {
    pub fn new(
        axis: Axis,
        power_min: u32,
        power_max: u32,
        radii: Vec<f64>,
        distance: DistanceKind,
    ) -> Result<Self, VlsError> {
        if power_min > power_max {
            return Err(VlsError::InvalidPowerBounds {
                min: power_min,
                max: power_max,
            });
        }
        let expected = (power_max - power_min + 1) as usize;
        if radii.len() != expected {
            return Err(VlsError::RadiiLengthMismatch {
                expected,
                found: radii.len(),
                min: power_min,
                max: power_max,
            });
        }
        if radii.iter().any(|r| !r.is_finite() || *r < 0.0) {
            return Err(VlsError::NonMonotoneRadii);
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(VlsError::NonMonotoneRadii);
        }
        Ok(Self {
            axis,
            power_min,
            power_max,
            radii,
            distance,
        })
    }

    /// Data-axis neighborhoods over sample sizes in `[size_min, size_max]`.
    pub fn data(
        size_min: usize,
        size_max: usize,
        power_min: u32,
        power_max: u32,
        radii: Vec<f64>,
    ) -> Result<Self, VlsError> {
        if size_min > size_max {
            return Err(VlsError::InvalidConfig(format!(
                "sample size bounds require min <= max (got {size_min} > {size_max})"
            )));
        }
        Self::new(
            Axis::Data,
            power_min,
            power_max,
            radii,
            DistanceKind::SampleSizeAbs { size_min, size_max },
        )
    }

    /// Data-axis neighborhood with a single power whose radius is zero:
    /// membership-only redraws at a fixed sample size.
    pub fn data_fixed_size(size: usize) -> Result<Self, VlsError> {
        Self::data(size, size, 0, 0, vec![0.0])
    }

    /// Formulation-axis neighborhoods over registry index distance.
    pub fn formulation_indexed(
        power_min: u32,
        power_max: u32,
        radii: Vec<f64>,
    ) -> Result<Self, VlsError> {
        Self::new(
            Axis::Formulation,
            power_min,
            power_max,
            radii,
            DistanceKind::RegistryIndexAbs,
        )
    }

    /// Formulation-axis singleton neighborhoods: power `k` selects the `k`-th
    /// registered formulation outright.
    pub fn formulation_fixed(registry_len: usize) -> Result<Self, VlsError> {
        if registry_len == 0 {
            return Err(VlsError::EmptyRegistry);
        }
        let radii = (0..registry_len).map(|k| k as f64).collect();
        Self::new(
            Axis::Formulation,
            0,
            registry_len as u32 - 1,
            radii,
            DistanceKind::RegistryFixed,
        )
    }

    /// Solution-axis neighborhoods: power `k` means "re-draw k components".
    pub fn solution_reseed(power_min: u32, power_max: u32) -> Result<Self, VlsError> {
        let radii = (power_min..=power_max).map(f64::from).collect();
        Self::new(
            Axis::Solution,
            power_min,
            power_max,
            radii,
            DistanceKind::SolutionReseed,
        )
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn power_min(&self) -> u32 {
        self.power_min
    }

    pub fn power_max(&self) -> u32 {
        self.power_max
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn distance(&self) -> &DistanceKind {
        &self.distance
    }

    pub fn radius_for(&self, power: u32) -> Result<f64, VlsError> {
        if power < self.power_min || power > self.power_max {
            return Err(VlsError::ShakePowerOutOfRange {
                power,
                min: self.power_min,
                max: self.power_max,
            });
        }
        Ok(self.radii[(power - self.power_min) as usize])
    }

    /// Candidate sample sizes around `current` at the given power, clamped to
    /// the size bounds and to the dataset row count.
    ///
    /// The sets are nested: every size admissible at power `k` is admissible
    /// at `k + 1`.
    pub fn admissible_sizes(
        &self,
        current: usize,
        power: ShakePower,
        dataset_rows: usize,
    ) -> Result<std::ops::RangeInclusive<usize>, VlsError> {
        let DistanceKind::SampleSizeAbs { size_min, size_max } = self.distance else {
            return Err(VlsError::InvalidConfig(
                "admissible_sizes is only defined for the data axis".into(),
            ));
        };
        let (lo, hi) = match power {
            ShakePower::Finite(k) => {
                let reach = self.radius_for(k)?.floor() as usize;
                (
                    size_min.max(current.saturating_sub(reach)),
                    size_max.min(current.saturating_add(reach)).min(dataset_rows),
                )
            }
            ShakePower::FullRange => (size_min, size_max.min(dataset_rows)),
        };
        if lo > hi {
            let power = match power {
                ShakePower::Finite(k) => k,
                ShakePower::FullRange => u32::MAX,
            };
            return Err(VlsError::DegenerateNeighborhood { power });
        }
        Ok(lo..=hi)
    }
}

/// The pair of neighborhood families a landscape shake chooses from.
#[derive(Debug, Clone)]
pub struct LandscapeNeighborhoods {
    pub data: NeighborhoodSpec,
    pub formulation: NeighborhoodSpec,
}

impl LandscapeNeighborhoods {
    pub fn new(data: NeighborhoodSpec, formulation: NeighborhoodSpec) -> Result<Self, VlsError> {
        if data.axis() != Axis::Data {
            return Err(VlsError::InvalidConfig(
                "data neighborhood must be on the data axis".into(),
            ));
        }
        if formulation.axis() != Axis::Formulation {
            return Err(VlsError::InvalidConfig(
                "formulation neighborhood must be on the formulation axis".into(),
            ));
        }
        Ok(Self { data, formulation })
    }

    pub fn for_phase(&self, phase: Phase) -> &NeighborhoodSpec {
        match phase {
            Phase::Data => &self.data,
            Phase::Formulation => &self.formulation,
        }
    }
}

/// Shake power: a finite index into the radius ladder, or the sentinel that
/// widens the neighborhood to the whole admissible range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShakePower {
    Finite(u32),
    FullRange,
}

/// Draws a random neighbor of `landscape` along one axis.
///
/// In the data phase the sample is re-drawn: a candidate size is picked
/// uniformly from the admissible range, then membership is sampled uniformly
/// without replacement. In the formulation phase the formulation moves within
/// its neighborhood and the sample is kept. Exactly one axis changes.
///
/// Singleton candidate sets are taken without consuming randomness, so a
/// degenerate configuration (fixed size, single formulation) leaves the
/// random stream byte-for-byte aligned with a loop that never shakes that
/// axis at all.
pub fn shake_landscape(
    landscape: &Landscape,
    neighborhoods: &LandscapeNeighborhoods,
    power: ShakePower,
    phase: Phase,
    registry: &FormulationRegistry,
    rng: &mut ChaCha8Rng,
) -> Result<Landscape, VlsError> {
    match phase {
        Phase::Data => {
            let spec = &neighborhoods.data;
            let current = landscape.sample().len();
            let rows = landscape.dataset().rows();
            let sizes = spec.admissible_sizes(current, power, rows)?;
            let (lo, hi) = (*sizes.start(), *sizes.end());
            let size = if lo == hi {
                lo
            } else {
                rng.random_range(lo..=hi)
            };
            let sample = SampleRef::draw_uniform(landscape.dataset(), size, rng)?;
            Ok(landscape.with_sample(sample))
        }
        Phase::Formulation => {
            let spec = &neighborhoods.formulation;
            let len = registry.len();
            let index = match (spec.distance(), power) {
                (DistanceKind::RegistryFixed, ShakePower::Finite(k)) => {
                    spec.radius_for(k)?;
                    let index = k as usize;
                    if index >= len {
                        return Err(VlsError::UnknownFormulation { id: index });
                    }
                    index
                }
                (DistanceKind::RegistryFixed, ShakePower::FullRange)
                | (DistanceKind::RegistryIndexAbs, ShakePower::FullRange) => {
                    if len == 1 {
                        0
                    } else {
                        rng.random_range(0..len)
                    }
                }
                (DistanceKind::RegistryIndexAbs, ShakePower::Finite(k)) => {
                    let reach = spec.radius_for(k)?.floor() as usize;
                    let current = landscape.formulation().id().index();
                    let lo = current.saturating_sub(reach);
                    let hi = (current + reach).min(len - 1);
                    if lo == hi {
                        lo
                    } else {
                        rng.random_range(lo..=hi)
                    }
                }
                _ => {
                    return Err(VlsError::InvalidConfig(
                        "formulation neighborhood carries a non-formulation distance".into(),
                    ))
                }
            };
            let formulation = *registry.by_index(index)?;
            Ok(landscape.with_formulation(formulation))
        }
    }
}
