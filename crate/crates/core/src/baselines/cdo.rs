//! Chernobyl disaster optimizer.
//!
//! The best three distinct solutions seen so far play the alpha (best), beta
//! and gamma (third) particles. Each component of an agent moves to the
//! average of three gradient-descent factors, weighted 0.25 (alpha), 0.5
//! (beta) and 1 (gamma).
//!
//! Draws per component, in order: walking radius `r_h`, propagation radius
//! `r_A`, speeds for gamma, beta, alpha (uniform on `[1, K]`), then the three
//! walking-speed factors for gamma, beta, alpha. One evaluation per agent.

use crate::baselines::leaders::Leaders;
use crate::error::{config, Result};
use crate::optimizer::{Optimizer, StepContext};
use crate::population::Population;
use crate::rng::DrawSource;

pub const GAMMA_SPEED_MAX: f64 = 300_000.0;
pub const BETA_SPEED_MAX: f64 = 270_000.0;
pub const ALPHA_SPEED_MAX: f64 = 160_000.0;

/// Human walking speed, decreasing linearly from 3 at `iter = 0` to 0.
pub fn cdo_walk_speed(iter: usize, max_iter: usize) -> Result<f64> {
    if max_iter == 0 {
        return Err(config("max_iter must be at least 1"));
    }
    if iter > max_iter {
        return Err(config(format!("iteration {iter} exceeds max_iter {max_iter}")));
    }
    Ok(3.0 - iter as f64 * (3.0 / max_iter as f64))
}

/// Random factors of one component update. Order of the arrays: gamma, beta, alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdoDraws {
    pub walk_radius: f64,
    pub area_radius: f64,
    pub speed: [f64; 3],
    pub walk: [f64; 3],
}

impl CdoDraws {
    pub fn draw(rng: &mut dyn DrawSource) -> Self {
        let walk_radius = rng.uniform();
        let area_radius = rng.uniform();
        let speed = [GAMMA_SPEED_MAX, BETA_SPEED_MAX, ALPHA_SPEED_MAX].map(|k| rng.range(1.0, k));
        let walk = [(); 3].map(|_| rng.uniform());
        Self { walk_radius, area_radius, speed, walk }
    }
}

const DIVISOR: [f64; 3] = [1.0, 0.5, 0.25];
const WEIGHT: [f64; 3] = [1.0, 0.5, 0.25];

/// New value of one component given the gamma, beta and alpha leader values.
pub fn cdo_component(x: f64, leaders: [f64; 3], walk_speed: f64, draws: &CdoDraws) -> f64 {
    let xh = draws.walk_radius.powi(2) * std::f64::consts::PI;
    let area = draws.area_radius.powi(2) * std::f64::consts::PI;
    let total: f64 = (0..3)
        .map(|k| {
            let speed = draws.speed[k].ln();
            let rho = xh / (DIVISOR[k] * speed) - walk_speed * draws.walk[k];
            let delta = (area * leaders[k] - x).abs();
            WEIGHT[k] * (leaders[k] - rho * delta)
        })
        .sum();
    total / 3.0
}

#[derive(Debug, Clone, Default)]
pub struct Cdo {
    leaders: Leaders<3>,
}

impl Cdo {
    pub fn leaders(&self) -> &Leaders<3> {
        &self.leaders
    }
}

impl Optimizer for Cdo {
    fn initialize(&mut self, pop: &Population, _ctx: &mut StepContext<'_>) -> Result<()> {
        self.leaders = Leaders::from_agents(&pop.agents)?;
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        let ws = cdo_walk_speed(ctx.iteration, ctx.max_iterations)?;
        for i in 0..pop.len() {
            let x = &pop.agents[i].position;
            let (alpha, beta, gamma) = (self.leaders.get(0), self.leaders.get(1), self.leaders.get(2));
            let moved = (0..x.len())
                .map(|d| {
                    let draws = CdoDraws::draw(ctx.rng);
                    cdo_component(x[d], [gamma.position[d], beta.position[d], alpha.position[d]], ws, &draws)
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::ScriptedDraws;

    #[test]
    fn walk_speed() {
        assert_eq!(cdo_walk_speed(0, 10).unwrap(), 3.0);
        assert_eq!(cdo_walk_speed(10, 10).unwrap(), 0.0);
        assert_eq!(cdo_walk_speed(5, 10).unwrap(), 1.5);
        assert!(cdo_walk_speed(0, 0).is_err());
        assert!(cdo_walk_speed(11, 10).is_err());
    }

    fn zero_delta() -> CdoDraws {
        CdoDraws {
            walk_radius: 0.3,
            area_radius: 1.0 / std::f64::consts::PI.sqrt(),
            speed: [100.0, 200.0, 300.0],
            walk: [0.2, 0.4, 0.6],
        }
    }

    #[test]
    fn origin_is_fixed_point() {
        assert_eq!(cdo_component(0.0, [0.0; 3], 1.7, &zero_delta()), 0.0);
    }

    #[test]
    fn zero_delta_scales_by_weights() {
        let p = 2.4;
        let got = cdo_component(p, [p; 3], 1.7, &zero_delta());
        assert!((got - 7.0 / 12.0 * p).abs() < 1e-12, "{got}");
    }

    #[test]
    fn draw_count_and_ranges() {
        let mut d = ScriptedDraws::constant(0.5);
        let draws = CdoDraws::draw(&mut d);
        assert_eq!(d.consumed(), 8);
        assert_eq!(draws.speed[0], 1.0 + 0.5 * (GAMMA_SPEED_MAX - 1.0));
        assert_eq!(draws.speed[2], 1.0 + 0.5 * (ALPHA_SPEED_MAX - 1.0));
    }
}
