use crate::error::{config, contract, Result};
use crate::rng::DrawSource;
use crate::space::SearchSpace;

/// One candidate solution with its cached objective value.
///
/// `fitness` is `None` until the position has been evaluated; any mutation of
/// the position must go through a path that clears or refreshes it.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    pub position: Vec<f64>,
    pub fitness: Option<f64>,
}

impl Agent {
    pub fn unevaluated(position: Vec<f64>) -> Self {
        Self { position, fitness: None }
    }

    pub fn evaluated(position: Vec<f64>, fitness: f64) -> Self {
        Self { position, fitness: Some(fitness) }
    }

    /// Cached fitness, or a contract error if the agent was never evaluated.
    pub fn value(&self) -> Result<f64> {
        self.fitness.ok_or_else(|| contract("agent fitness used before evaluation"))
    }
}

/// Fixed-size set of agents plus the best-so-far over the whole run.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub agents: Vec<Agent>,
    pub best: Option<Agent>,
}

impl Population {
    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    /// Best-so-far agent; a contract error before the first evaluation.
    pub fn best(&self) -> Result<&Agent> {
        self.best.as_ref().ok_or_else(|| contract("population has no best agent yet"))
    }

    pub fn best_fitness(&self) -> Result<f64> {
        self.best()?.value()
    }

    /// Offers one evaluated agent as a best-so-far candidate (strict improvement).
    pub fn offer(&mut self, candidate: &Agent) -> Result<()> {
        let f = candidate.value()?;
        let replace = match &self.best {
            None => !f.is_nan(),
            Some(best) => improves(f, best.value()?),
        };
        if replace {
            self.best = Some(candidate.clone());
        }
        Ok(())
    }
}

/// Draws `n` positions uniformly in the box, `lower + r * (upper - lower)`.
///
/// Draw order is agent-major, dimension-minor. Fitness is left unset.
pub fn initialize_population(space: &SearchSpace, n: usize, rng: &mut dyn DrawSource) -> Result<Population> {
    if n == 0 {
        return Err(config("population size must be at least 1"));
    }
    let agents = (0..n)
        .map(|_| {
            let position = (0..space.dim())
                .map(|d| space.lower()[d] + rng.uniform() * space.width(d))
                .collect();
            Agent::unevaluated(position)
        })
        .collect();
    Ok(Population { agents, best: None })
}

/// `true` when `candidate` strictly beats `incumbent`. NaN never wins.
pub fn improves(candidate: f64, incumbent: f64) -> bool {
    !candidate.is_nan() && (candidate < incumbent || incumbent.is_nan())
}

/// Keeps `candidate` only if its fitness is strictly lower; ties keep `old`.
pub fn greedy_replace(old: Agent, candidate: Agent) -> Result<Agent> {
    let (f_old, f_new) = (old.value()?, candidate.value()?);
    Ok(if improves(f_new, f_old) { candidate } else { old })
}

/// Folds the current agents into the best-so-far record. Never worsens it.
pub fn update_best(pop: &mut Population) -> Result<()> {
    if pop.agents.is_empty() {
        return Err(config("cannot update the best of an empty population"));
    }
    let mut current: Option<&Agent> = None;
    for agent in &pop.agents {
        let f = agent.value()?;
        if current.map_or(!f.is_nan(), |c| improves(f, c.fitness.unwrap())) {
            current = Some(agent);
        }
    }
    if let Some(candidate) = current.cloned() {
        pop.offer(&candidate)?;
    }
    Ok(())
}
