/// Best-improvement descent over an enumerable solution neighborhood.
///
/// Repeatedly evaluates every neighbor of the current solution and moves to
/// the best one as long as it strictly improves the objective. Returns a
/// solution no neighbor of which is strictly better; a solution that is
/// already locally optimal comes back unchanged after a single verification
/// pass.
pub fn best_improvement_local_search<S>(
    start: S,
    mut neighbors: impl FnMut(&S) -> Vec<S>,
    mut objective: impl FnMut(&S) -> f64,
) -> S {
    let mut current = start;
    let mut current_value = objective(&current);
    loop {
        let best = neighbors(&current)
            .into_iter()
            .map(|candidate| (objective(&candidate), candidate))
            .min_by(|a, b| a.0.total_cmp(&b.0));
        match best {
            Some((value, candidate)) if value < current_value => {
                current = candidate;
                current_value = value;
            }
            _ => return current,
        }
    }
}
