use std::collections::BTreeMap;

use vls_core::RunRecord;

/// One improving acceptance: when it happened, at which sample size, and the
/// objective it recorded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImprovementEvent {
    pub t: u64,
    pub sample_size: usize,
    pub objective: f64,
}

/// The improving acceptances of one run, in iteration order. Objectives
/// strictly decrease along the list.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ImprovementHistory {
    pub events: Vec<ImprovementEvent>,
}

impl ImprovementHistory {
    pub fn from_record(record: &RunRecord) -> Self {
        Self {
            events: record
                .improving_events()
                .map(|row| ImprovementEvent {
                    t: row.t,
                    sample_size: row.sample_size,
                    objective: row.objective,
                })
                .collect(),
        }
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.events
            .windows(2)
            .all(|pair| pair[1].objective < pair[0].objective)
    }
}

/// The sample size most frequently associated with improving iterations
/// across the given histories; ties resolve to the larger size. `None` when
/// no improvement was ever recorded.
pub fn most_frequent_improving_size(histories: &[ImprovementHistory]) -> Option<usize> {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for history in histories {
        for event in &history.events {
            *counts.entry(event.sample_size).or_insert(0) += 1;
        }
    }
    let mut winner: Option<(usize, u64)> = None;
    for (size, count) in counts {
        match winner {
            Some((_, best)) if count < best => {}
            // ascending iteration makes >= resolve ties to the larger size
            _ => winner = Some((size, count)),
        }
    }
    winner.map(|(size, _)| size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn history(sizes: &[usize]) -> ImprovementHistory {
        ImprovementHistory {
            events: sizes
                .iter()
                .enumerate()
                .map(|(i, &s)| ImprovementEvent {
                    t: i as u64,
                    sample_size: s,
                    objective: -(i as f64),
                })
                .collect(),
        }
    }

    #[test]
    fn mode_wins() {
        let histories = vec![history(&[10, 20, 20]), history(&[20, 30])];
        assert_eq!(most_frequent_improving_size(&histories), Some(20));
    }

    #[test]
    fn ties_prefer_the_larger_size() {
        let histories = vec![history(&[10, 30, 10, 30])];
        assert_eq!(most_frequent_improving_size(&histories), Some(30));
    }

    #[test]
    fn empty_histories_yield_none() {
        assert_eq!(most_frequent_improving_size(&[]), None);
        assert_eq!(most_frequent_improving_size(&[history(&[])]), None);
    }
}
