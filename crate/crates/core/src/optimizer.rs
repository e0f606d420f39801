//! Shared run driver.
//!
//! A run initializes `N` agents uniformly in the box, evaluates them in index
//! order, then calls [`Optimizer::iterate`] `max_iterations` times, recording
//! the best-so-far fitness after each iteration.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{Bto, Cdo, Gsa, Gwo, Pso, Sso};
use crate::bbo::{Bbo, BboParams, PredatorMode};
use crate::error::{config, Error, Result};
use crate::kernels::{ChaosMap, SprayExponent};
use crate::objective::Objective;
use crate::population::{initialize_population, update_best, Agent, Population};
use crate::rng::{DrawSource, RandomStream};
use crate::space::{clamp_in_place, BoundMode, SearchSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgorithmId {
    Cdo,
    Sso,
    Gsa,
    Pso,
    Bto,
    Gwo,
    Bbo,
}

impl AlgorithmId {
    /// Reporting order used in result tables.
    pub const ALL: [AlgorithmId; 7] = [
        AlgorithmId::Cdo,
        AlgorithmId::Sso,
        AlgorithmId::Gsa,
        AlgorithmId::Pso,
        AlgorithmId::Bto,
        AlgorithmId::Gwo,
        AlgorithmId::Bbo,
    ];

    pub fn id(self) -> &'static str {
        match self {
            AlgorithmId::Cdo => "cdo",
            AlgorithmId::Sso => "sso",
            AlgorithmId::Gsa => "gsa",
            AlgorithmId::Pso => "pso",
            AlgorithmId::Bto => "bto",
            AlgorithmId::Gwo => "gwo",
            AlgorithmId::Bbo => "bbo",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Cdo => "Chernobyl disaster optimizer",
            AlgorithmId::Sso => "Sperm swarm optimization",
            AlgorithmId::Gsa => "Gravitational search algorithm",
            AlgorithmId::Pso => "Particle swarm optimization",
            AlgorithmId::Bto => "Bermuda triangle optimizer",
            AlgorithmId::Gwo => "Grey wolf optimizer",
            AlgorithmId::Bbo => "Bombardier beetle optimizer",
        }
    }

    /// Smallest population the algorithm accepts.
    pub fn min_population(self) -> usize {
        match self {
            AlgorithmId::Gwo => 3,
            AlgorithmId::Gsa => 2,
            _ => 1,
        }
    }

    /// Objective evaluations per iteration for a population of `n`.
    pub fn evaluations_per_iteration(self, n: usize) -> usize {
        match self {
            AlgorithmId::Bbo => 2 * n,
            _ => n,
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::UnknownId { kind: "algorithm", id: s.to_string() })
    }
}

/// Settings for one seeded run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub algorithm: AlgorithmId,
    /// Label copied into the [`RunRecord`], e.g. a benchmark id.
    pub objective: String,
    pub population: usize,
    pub max_iterations: usize,
    pub seed: u64,
    /// Chaos map of the BBO spray and the BTO position rule.
    pub chaos_map: ChaosMap,
    pub predator: PredatorMode,
    pub bound_mode: BoundMode,
    pub spray_exponent: SprayExponent,
}

impl RunConfig {
    /// Population 30 and 1000 iterations, seed 0.
    pub fn new(algorithm: AlgorithmId) -> Self {
        Self {
            algorithm,
            objective: "custom".to_string(),
            population: 30,
            max_iterations: 1000,
            seed: 0,
            chaos_map: ChaosMap::default(),
            predator: PredatorMode::default(),
            bound_mode: BoundMode::default(),
            spray_exponent: SprayExponent::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let min = self.algorithm.min_population();
        if self.population < min {
            return Err(config(format!(
                "{} needs a population of at least {min}, got {}",
                self.algorithm, self.population
            )));
        }
        if self.max_iterations == 0 {
            return Err(config("max_iterations must be at least 1"));
        }
        Ok(())
    }

    /// Evaluation budget: initialization plus every iteration.
    pub fn evaluation_budget(&self) -> u64 {
        (self.population + self.algorithm.evaluations_per_iteration(self.population) * self.max_iterations) as u64
    }

    pub fn build_optimizer(&self) -> Box<dyn Optimizer> {
        match self.algorithm {
            AlgorithmId::Bbo => Box::new(Bbo::new(BboParams {
                chaos_map: self.chaos_map,
                predator: self.predator,
                spray_exponent: self.spray_exponent,
            })),
            AlgorithmId::Pso => Box::new(Pso::default()),
            AlgorithmId::Gwo => Box::new(Gwo::default()),
            AlgorithmId::Sso => Box::new(Sso::default()),
            AlgorithmId::Cdo => Box::new(Cdo::default()),
            AlgorithmId::Bto => Box::new(Bto::with_chaos(self.chaos_map)),
            AlgorithmId::Gsa => Box::new(Gsa::default()),
        }
    }
}

/// Output of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: AlgorithmId,
    pub objective: String,
    pub seed: u64,
    /// Best-so-far fitness after each iteration (length `max_iterations`).
    pub trace: Vec<f64>,
    pub final_best: f64,
    pub best_position: Vec<f64>,
    pub evaluations: u64,
}

/// Per-iteration view handed to an optimizer.
pub struct StepContext<'a> {
    pub space: &'a SearchSpace,
    pub bound_mode: BoundMode,
    /// Current iteration, 1-based.
    pub iteration: usize,
    pub max_iterations: usize,
    pub rng: &'a mut dyn DrawSource,
    objective: &'a dyn Objective,
    evaluations: &'a mut u64,
}

impl StepContext<'_> {
    pub fn evaluate(&mut self, position: &[f64]) -> Result<f64> {
        *self.evaluations += 1;
        self.objective.evaluate(position, self.rng)
    }

    /// Bound-handles `position`, evaluates it and returns the evaluated agent.
    pub fn propose(&mut self, mut position: Vec<f64>) -> Result<Agent> {
        clamp_in_place(&mut position, self.space, self.bound_mode);
        let f = self.evaluate(&position)?;
        Ok(Agent::evaluated(position, f))
    }

    pub fn evaluations(&self) -> u64 {
        *self.evaluations
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A population-based optimizer advanced one iteration at a time.
pub trait Optimizer {
    /// Sets up auxiliary state from the evaluated initial population.
    fn initialize(&mut self, pop: &Population, ctx: &mut StepContext<'_>) -> Result<()>;

    /// Performs iteration `ctx.iteration`, keeping `pop.best` current.
    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()>;
}

/// A run in progress; [`Run::step`] advances one iteration.
pub struct Run<'a, R: DrawSource = RandomStream> {
    config: RunConfig,
    optimizer: Box<dyn Optimizer>,
    objective: &'a dyn Objective,
    evaluations: u64,
    space: &'a SearchSpace,
    rng: R,
    population: Population,
    iteration: usize,
    trace: Vec<f64>,
}

impl<'a> Run<'a, RandomStream> {
    pub fn start(config: &RunConfig, objective: &'a dyn Objective, space: &'a SearchSpace) -> Result<Self> {
        let optimizer = config.build_optimizer();
        Self::with_parts(config, optimizer, objective, space, RandomStream::new(config.seed))
    }
}

impl<'a, R: DrawSource> Run<'a, R> {
    /// Starts a run with an explicit optimizer instance and draw source.
    pub fn with_parts(
        config: &RunConfig,
        mut optimizer: Box<dyn Optimizer>,
        objective: &'a dyn Objective,
        space: &'a SearchSpace,
        mut rng: R,
    ) -> Result<Self> {
        config.validate()?;
        let mut evaluations = 0;
        let mut population = initialize_population(space, config.population, &mut rng)?;
        for agent in &mut population.agents {
            evaluations += 1;
            agent.fitness = Some(objective.evaluate(&agent.position, &mut rng)?);
        }
        update_best(&mut population)?;
        if population.best.is_none() {
            return Err(Error::Objective("every initial position evaluated to NaN".into()));
        }
        {
            let mut ctx = StepContext {
                space,
                bound_mode: config.bound_mode,
                iteration: 0,
                max_iterations: config.max_iterations,
                rng: &mut rng,
                objective,
                evaluations: &mut evaluations,
            };
            optimizer.initialize(&population, &mut ctx)?;
        }
        Ok(Self {
            config: config.clone(),
            optimizer,
            objective,
            evaluations,
            space,
            rng,
            population,
            iteration: 0,
            trace: Vec::with_capacity(config.max_iterations),
        })
    }

    pub fn population(&self) -> &Population {
        &self.population
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn is_finished(&self) -> bool {
        self.iteration >= self.config.max_iterations
    }

    pub fn trace(&self) -> &[f64] {
        &self.trace
    }

    /// Runs one iteration. Errors once the iteration budget is spent.
    pub fn step(&mut self) -> Result<()> {
        if self.is_finished() {
            return Err(config("run already reached max_iterations"));
        }
        self.iteration += 1;
        let mut ctx = StepContext {
            space: self.space,
            bound_mode: self.config.bound_mode,
            iteration: self.iteration,
            max_iterations: self.config.max_iterations,
            rng: &mut self.rng,
            objective: self.objective,
            evaluations: &mut self.evaluations,
        };
        self.optimizer.iterate(&mut self.population, &mut ctx)?;
        self.trace.push(self.population.best_fitness()?);
        Ok(())
    }

    pub fn finish(mut self) -> Result<RunRecord> {
        while !self.is_finished() {
            self.step()?;
        }
        let best = self.population.best()?.clone();
        Ok(RunRecord {
            algorithm: self.config.algorithm,
            objective: self.config.objective.clone(),
            seed: self.config.seed,
            final_best: *self.trace.last().expect("max_iterations >= 1"),
            trace: self.trace,
            best_position: best.position,
            evaluations: self.evaluations,
        })
    }
}

/// Runs `config` to completion on `objective` over `space`.
pub fn run(config: &RunConfig, objective: &dyn Objective, space: &SearchSpace) -> Result<RunRecord> {
    Run::start(config, objective, space)?.finish()
}
