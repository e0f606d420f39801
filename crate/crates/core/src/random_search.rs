//! Uniform random sampling, the floor any optimizer should beat.

use crate::error::{config, Result};
use crate::objective::Objective;
use crate::population::{improves, Agent};
use crate::rng::DrawSource;
use crate::space::SearchSpace;

/// Best of `evaluations` uniform samples. Each sample draws one value per
/// dimension and is evaluated immediately.
pub fn random_search(
    objective: &dyn Objective,
    space: &SearchSpace,
    evaluations: u64,
    rng: &mut dyn DrawSource,
) -> Result<Agent> {
    if evaluations == 0 {
        return Err(config("random search needs at least one evaluation"));
    }
    let mut best: Option<Agent> = None;
    for _ in 0..evaluations {
        let x: Vec<f64> = (0..space.dim()).map(|d| rng.range(space.lower()[d], space.upper()[d])).collect();
        let f = objective.evaluate(&x, rng)?;
        if best.as_ref().is_none_or(|b| improves(f, b.fitness.unwrap())) {
            best = Some(Agent::evaluated(x, f));
        }
    }
    Ok(best.unwrap())
}
