//! Grey wolf optimizer.
//!
//! The three best distinct solutions seen so far lead as alpha, beta and
//! delta. Each wolf moves to the mean of the three encircling candidates
//! `X_k = L_k − A · |C · L_k − x|` with `A = 2a r₁ − a`, `C = 2 r₂` and `a`
//! falling linearly from 2 to 0.
//!
//! Draws per dimension, in order: `r₁, r₂` for alpha, beta, then delta. One
//! evaluation per wolf; the leaders see each wolf as soon as it is evaluated.

use crate::baselines::leaders::Leaders;
use crate::error::Result;
use crate::optimizer::{Optimizer, StepContext};
use crate::population::Population;

/// Coefficient `a` at 1-based `iter`: 2 on the first iteration, 0 on the last.
pub fn gwo_coefficient(iter: usize, max_iter: usize) -> f64 {
    if max_iter <= 1 {
        return 2.0;
    }
    2.0 * (1.0 - iter.saturating_sub(1) as f64 / (max_iter - 1) as f64)
}

/// New component from the alpha, beta, delta values and six draws `(r₁, r₂)` per leader.
pub fn gwo_component(x: f64, leaders: [f64; 3], a: f64, draws: [f64; 6]) -> f64 {
    let sum: f64 = (0..3)
        .map(|k| {
            let coeff_a = 2.0 * a * draws[2 * k] - a;
            let coeff_c = 2.0 * draws[2 * k + 1];
            leaders[k] - coeff_a * (coeff_c * leaders[k] - x).abs()
        })
        .sum();
    sum / 3.0
}

#[derive(Debug, Clone, Default)]
pub struct Gwo {
    leaders: Leaders<3>,
}

impl Gwo {
    pub fn leaders(&self) -> &Leaders<3> {
        &self.leaders
    }
}

impl Optimizer for Gwo {
    fn initialize(&mut self, pop: &Population, _ctx: &mut StepContext<'_>) -> Result<()> {
        self.leaders = Leaders::from_agents(&pop.agents)?;
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        let a = gwo_coefficient(ctx.iteration, ctx.max_iterations);
        for i in 0..pop.len() {
            let x = &pop.agents[i].position;
            let l = [self.leaders.get(0), self.leaders.get(1), self.leaders.get(2)];
            let moved = (0..x.len())
                .map(|d| {
                    let draws = [(); 6].map(|_| ctx.rng.uniform());
                    gwo_component(x[d], [l[0].position[d], l[1].position[d], l[2].position[d]], a, draws)
                })
                .collect();
            let agent = ctx.propose(moved)?;
            self.leaders.offer(&agent)?;
            pop.offer(&agent)?;
            pop.agents[i] = agent;
        }
        Ok(())
    }
}
