//! Particle swarm optimization with linearly decreasing inertia.
//!
//! Per agent: two draws (`r1`, `r2`) per dimension, then one evaluation.
//! Positions are replaced unconditionally; personal and global bests are kept.

use crate::error::Result;
use crate::optimizer::{Optimizer, StepContext};
use crate::population::{improves, Agent, Population};
use crate::rng::DrawSource;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoParams {
    pub cognitive: f64,
    pub social: f64,
    pub inertia_start: f64,
    pub inertia_end: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self { cognitive: 2.0, social: 2.0, inertia_start: 0.9, inertia_end: 0.4 }
    }
}

impl PsoParams {
    /// Inertia at 1-based `iter`, linear from start to end over the run.
    pub fn inertia(&self, iter: usize, max_iter: usize) -> f64 {
        if max_iter <= 1 {
            return self.inertia_start;
        }
        let frac = (iter.saturating_sub(1)) as f64 / (max_iter - 1) as f64;
        self.inertia_start - (self.inertia_start - self.inertia_end) * frac
    }
}

/// `w v + c1 r1 (pbest − x) + c2 r2 (gbest − x)` with fresh `r1, r2` per component.
#[allow(clippy::too_many_arguments)]
pub fn pso_velocity(
    v: &[f64],
    x: &[f64],
    pbest: &[f64],
    gbest: &[f64],
    w: f64,
    cognitive: f64,
    social: f64,
    rng: &mut dyn DrawSource,
) -> Vec<f64> {
    (0..x.len())
        .map(|d| {
            let (r1, r2) = (rng.uniform(), rng.uniform());
            w * v[d] + cognitive * r1 * (pbest[d] - x[d]) + social * r2 * (gbest[d] - x[d])
        })
        .collect()
}

#[derive(Debug, Clone, Default)]
pub struct Pso {
    params: PsoParams,
    velocity: Vec<Vec<f64>>,
    personal: Vec<Agent>,
}

impl Pso {
    pub fn new(params: PsoParams) -> Self {
        Self { params, ..Self::default() }
    }

    pub fn personal_bests(&self) -> &[Agent] {
        &self.personal
    }

    pub fn velocities(&self) -> &[Vec<f64>] {
        &self.velocity
    }
}

impl Optimizer for Pso {
    fn initialize(&mut self, pop: &Population, ctx: &mut StepContext<'_>) -> Result<()> {
        self.velocity = vec![vec![0.0; ctx.dim()]; pop.len()];
        self.personal = pop.agents.clone();
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        let w = self.params.inertia(ctx.iteration, ctx.max_iterations);
        for i in 0..pop.len() {
            let gbest = pop.best()?.position.clone();
            let x = &pop.agents[i].position;
            let v = pso_velocity(
                &self.velocity[i],
                x,
                &self.personal[i].position,
                &gbest,
                w,
                self.params.cognitive,
                self.params.social,
                ctx.rng,
            );
            let moved = x.iter().zip(&v).map(|(a, b)| a + b).collect();
            self.velocity[i] = v;
            let agent = ctx.propose(moved)?;
            if improves(agent.value()?, self.personal[i].value()?) {
                self.personal[i] = agent.clone();
            }
            pop.offer(&agent)?;
            pop.agents[i] = agent;
        }
        Ok(())
    }
}
