//! Sperm swarm optimization.
//!
//! Velocity is the sum of a damped initial term, a personal-best term and a
//! global-best term, each scaled by base-10 logarithms of pH and temperature
//! draws. Per agent the draws are: damping, pH₁, pH₂, pH₃, T₁, T₂, then one
//! evaluation of `x + v`.

use crate::error::{contract, Result};
use crate::optimizer::{Optimizer, StepContext};
use crate::population::{improves, Agent, Population};
use crate::rng::DrawSource;

pub const PH_RANGE: (f64, f64) = (7.0, 14.0);
pub const TEMPERATURE_RANGE: (f64, f64) = (35.1, 38.5);

/// Random factors of one velocity update.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SsoDraws {
    pub damping: f64,
    pub ph: [f64; 3],
    pub temperature: [f64; 2],
}

impl SsoDraws {
    pub fn draw(rng: &mut dyn DrawSource) -> Self {
        let damping = rng.uniform();
        let ph = [(); 3].map(|_| rng.range(PH_RANGE.0, PH_RANGE.1));
        let temperature = [(); 2].map(|_| rng.range(TEMPERATURE_RANGE.0, TEMPERATURE_RANGE.1));
        Self { damping, ph, temperature }
    }

    pub fn validate(&self) -> Result<()> {
        let within = |v: f64, (lo, hi): (f64, f64)| (lo..=hi).contains(&v);
        if !(0.0..=1.0).contains(&self.damping) {
            return Err(contract(format!("damping {} outside [0, 1]", self.damping)));
        }
        if let Some(ph) = self.ph.iter().find(|&&p| !within(p, PH_RANGE)) {
            return Err(contract(format!("pH {ph} outside [7, 14]")));
        }
        if let Some(t) = self.temperature.iter().find(|&&t| !within(t, TEMPERATURE_RANGE)) {
            return Err(contract(format!("temperature {t} outside [35.1, 38.5]")));
        }
        Ok(())
    }
}

/// `D v log pH₁ + log pH₂ log T₁ (sb − x) + log pH₃ log T₂ (sgb − x)`.
pub fn sso_velocity(v: &[f64], x: &[f64], personal: &[f64], global: &[f64], draws: &SsoDraws) -> Result<Vec<f64>> {
    draws.validate()?;
    let initial = draws.damping * draws.ph[0].log10();
    let own = draws.ph[1].log10() * draws.temperature[0].log10();
    let swarm = draws.ph[2].log10() * draws.temperature[1].log10();
    Ok((0..x.len())
        .map(|d| initial * v[d] + own * (personal[d] - x[d]) + swarm * (global[d] - x[d]))
        .collect())
}

#[derive(Debug, Clone, Default)]
pub struct Sso {
    velocity: Vec<Vec<f64>>,
    personal: Vec<Agent>,
}

impl Sso {
    pub fn personal_bests(&self) -> &[Agent] {
        &self.personal
    }
}

impl Optimizer for Sso {
    fn initialize(&mut self, pop: &Population, ctx: &mut StepContext<'_>) -> Result<()> {
        self.velocity = vec![vec![0.0; ctx.dim()]; pop.len()];
        self.personal = pop.agents.clone();
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        for i in 0..pop.len() {
            let draws = SsoDraws::draw(ctx.rng);
            let global = pop.best()?.position.clone();
            let x = &pop.agents[i].position;
            let v = sso_velocity(&self.velocity[i], x, &self.personal[i].position, &global, &draws)?;
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
