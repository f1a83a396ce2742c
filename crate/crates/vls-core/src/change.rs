/// Outcome of a sequential neighborhood-change step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequentialChange {
    /// Whether the candidate strictly improved on the incumbent value.
    pub accepted: bool,
    /// Shake power for the next iteration.
    pub next_power: u32,
}

/// Sequential neighborhood change: on strict improvement the incumbent moves
/// and the power resets to its minimum; otherwise the power steps up, wrapping
/// back to the minimum past the maximum.
///
/// Both values must be the candidate's and incumbent's objectives under the
/// *shaken* landscape. Ties are non-improving.
pub fn neighborhood_change_sequential(
    candidate_value: f64,
    incumbent_value: f64,
    power: u32,
    power_min: u32,
    power_max: u32,
) -> SequentialChange {
    if candidate_value < incumbent_value {
        SequentialChange {
            accepted: true,
            next_power: power_min,
        }
    } else {
        SequentialChange {
            accepted: false,
            next_power: neighborhood_change_cyclic(power, power_min, power_max),
        }
    }
}

/// Cyclic neighborhood change: the power always advances, wrapping past the
/// maximum, regardless of whether the iteration improved anything.
pub fn neighborhood_change_cyclic(power: u32, power_min: u32, power_max: u32) -> u32 {
    if power >= power_max {
        power_min
    } else {
        power + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn improvement_moves_and_resets_power() {
        let change = neighborhood_change_sequential(3.0, 5.0, 4, 1, 6);
        assert!(change.accepted);
        assert_eq!(change.next_power, 1);
    }

    #[test]
    fn tie_at_max_power_wraps_to_min() {
        let change = neighborhood_change_sequential(5.0, 5.0, 6, 1, 6);
        assert!(!change.accepted);
        assert_eq!(change.next_power, 1);
    }

    #[test]
    fn tie_below_max_power_steps_up() {
        let change = neighborhood_change_sequential(5.0, 5.0, 1, 1, 6);
        assert!(!change.accepted);
        assert_eq!(change.next_power, 2);
    }

    #[test]
    fn cyclic_increments_and_wraps() {
        assert_eq!(neighborhood_change_cyclic(1, 1, 4), 2);
        assert_eq!(neighborhood_change_cyclic(4, 1, 4), 1);
    }

    #[test]
    fn cyclic_visits_every_power_twice_over_two_periods() {
        let (min, max) = (2u32, 5u32);
        let period = (max - min + 1) as usize;
        let mut power = min;
        let mut visits = std::collections::HashMap::new();
        for _ in 0..2 * period {
            *visits.entry(power).or_insert(0u32) += 1;
            power = neighborhood_change_cyclic(power, min, max);
        }
        for k in min..=max {
            assert_eq!(visits[&k], 2, "power {k} not visited exactly twice");
        }
    }
}
