//! Bombardier beetle optimizer.
//!
//! Each iteration visits the agents in index order and runs two proposals per
//! agent, each accepted only on strict improvement:
//!
//! 1. **Defense** (exploration). Threat-circle radii and centre distance are
//!    drawn on `[0, 1)`, their overlap area `cia` and the chemical-reaction
//!    intensity `cr = 100 · oxygen · benzoquinone` scale the predator term, and
//!    the chaos-modulated spray divides the result:
//!    `x'_d = (x_d + predator_d · cia · cr · x_d) / spray`.
//! 2. **Escape** (exploitation). The flapping lift `L` sets a displacement
//!    `L (ub_d − lb_d) / t` applied with an independent random sign per
//!    dimension.
//!
//! Draws per agent, in order: predator index (random-agent mode only), `R`,
//! `r`, `d`, oxygen, benzoquinone, [defense evaluation], lift coefficient, air
//! density, wing velocity, wing area, one sign per dimension, [escape
//! evaluation]. The chaos map advances once per agent without drawing.
//!
//! With the default growing spray the defense proposal shrinks toward the
//! origin late in a run, which biases the search toward functions whose
//! optimum sits at zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{contract, Error, Result};
use crate::kernels::{escape_step, lens_area, lift, spray, ChaosMap, ChaosState, LiftParams, SprayExponent, SPRAY_FLOOR};
use crate::optimizer::{Optimizer, StepContext};
use crate::population::{greedy_replace, Population};
use crate::rng::DrawSource;

/// Temperature of the hot water vapour in the spray (boiling point).
pub const HOT_WATER: f64 = 100.0;

/// Which position plays the predator in the defense update.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PredatorMode {
    /// The best-so-far position.
    #[default]
    GlobalBest,
    /// The current position of a uniformly drawn agent.
    RandomAgent,
}

impl fmt::Display for PredatorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PredatorMode::GlobalBest => "global-best",
            PredatorMode::RandomAgent => "random-agent",
        })
    }
}

impl FromStr for PredatorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "global-best" => Ok(PredatorMode::GlobalBest),
            "random-agent" => Ok(PredatorMode::RandomAgent),
            _ => Err(Error::UnknownId { kind: "predator mode", id: s.to_string() }),
        }
    }
}

/// Intensity of the toxic spray: `100 · oxygen · benzoquinone`.
pub fn reaction_intensity(oxygen: f64, benzoquinone: f64) -> f64 {
    HOT_WATER * oxygen * benzoquinone
}

/// Draws oxygen then benzoquinone on `[0, 1)` and returns the intensity.
pub fn chemical_reaction(rng: &mut dyn DrawSource) -> f64 {
    let oxygen = rng.uniform();
    let benzoquinone = rng.uniform();
    reaction_intensity(oxygen, benzoquinone)
}

/// Defense proposal `(x_d + predator_d · cia · cr · x_d) / spray`, before bound handling.
pub fn defense_update(position: &[f64], predator: &[f64], cia: f64, cr: f64, spray_value: f64) -> Result<Vec<f64>> {
    if spray_value.is_nan() || spray_value.abs() < SPRAY_FLOOR {
        return Err(contract(format!("spray magnitude {spray_value} is below the floor")));
    }
    if position.len() != predator.len() {
        return Err(contract("predator and agent dimensions differ"));
    }
    Ok(position
        .iter()
        .zip(predator)
        .map(|(&x, &p)| (x + p * cia * cr * x) / spray_value)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BboParams {
    pub chaos_map: ChaosMap,
    pub predator: PredatorMode,
    pub spray_exponent: SprayExponent,
}

#[derive(Debug, Clone)]
pub struct Bbo {
    params: BboParams,
    chaos: ChaosState,
}

impl Bbo {
    pub fn new(params: BboParams) -> Self {
        Self { params, chaos: ChaosState::new(params.chaos_map) }
    }

    pub fn chaos(&self) -> &ChaosState {
        &self.chaos
    }
}

impl Default for Bbo {
    fn default() -> Self {
        Self::new(BboParams::default())
    }
}

impl Optimizer for Bbo {
    fn initialize(&mut self, _pop: &Population, _ctx: &mut StepContext<'_>) -> Result<()> {
        self.chaos = ChaosState::new(self.params.chaos_map);
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        let (t, max_t) = (ctx.iteration, ctx.max_iterations);
        let n = pop.len();
        for i in 0..n {
            let predator = match self.params.predator {
                PredatorMode::GlobalBest => pop.best()?.position.clone(),
                PredatorMode::RandomAgent => {
                    let j = ctx.rng.index(n);
                    pop.agents[j].position.clone()
                }
            };
            let (big_r, small_r, distance) = (ctx.rng.uniform(), ctx.rng.uniform(), ctx.rng.uniform());
            let cia = lens_area(big_r, small_r, distance);
            let cr = chemical_reaction(ctx.rng);
            let spray_value = spray(self.chaos.advance(), t, max_t, self.params.spray_exponent)?;

            let agent = pop.agents[i].clone();
            let proposal = defense_update(&agent.position, &predator, cia, cr, spray_value)?;
            let candidate = ctx.propose(proposal)?;
            let agent = greedy_replace(agent, candidate)?;
            pop.offer(&agent)?;

            let params = LiftParams {
                coefficient: ctx.rng.uniform(),
                air_density: ctx.rng.uniform(),
                velocity: ctx.rng.uniform(),
                wing_area: ctx.rng.uniform(),
            };
            let step = escape_step(lift(params), ctx.space, t)?;
            let proposal = agent
                .position
                .iter()
                .zip(&step)
                .map(|(&x, &s)| if ctx.rng.uniform() < 0.5 { x + s } else { x - s })
                .collect();
            let candidate = ctx.propose(proposal)?;
            let agent = greedy_replace(agent, candidate)?;
            pop.offer(&agent)?;
            pop.agents[i] = agent;
        }
        Ok(())
    }
}
