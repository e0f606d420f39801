//! Bermuda triangle optimizer.
//!
//! Every agent is pulled toward the best-so-far position scaled by a chaos
//! value, an area, the ocean acceleration and the force probability:
//! `x'_d = (chaos · area · acc · best_d − pof) · ((ub_d − lb_d) · zone + lb_d)`.
//! A prescience draw above 0.5 selects the triangle area, otherwise the
//! surrounding area. Agents are replaced unconditionally.
//!
//! Draws per agent, in order: prescience, mass 1, mass 2, distance, the
//! acceleration factor; then one evaluation. The chaos map advances once per
//! agent after its value is used.

use crate::error::{config, Result};
use crate::kernels::{ChaosMap, ChaosState};
use crate::optimizer::{Optimizer, StepContext};
use crate::population::Population;
use crate::space::SearchSpace;

pub const GRAVITATIONAL_CONSTANT: f64 = 6.67e-11;
/// Minimum and maximum area of the force zone in square miles.
pub const ZONE_MIN_AREA: f64 = 500_000.0;
pub const ZONE_MAX_AREA: f64 = 1_510_000.0;

fn check_counters(iter: usize, max_iter: usize) -> Result<()> {
    if max_iter == 0 {
        return Err(config("max_iter must be at least 1"));
    }
    if iter > max_iter {
        return Err(config(format!("iteration {iter} exceeds max_iter {max_iter}")));
    }
    Ok(())
}

/// Force-zone coefficient, interpolating `ln 500000` to `ln 1510000`.
pub fn bto_zone(iter: usize, max_iter: usize) -> Result<f64> {
    check_counters(iter, max_iter)?;
    let (lo, hi) = (ZONE_MIN_AREA.ln(), ZONE_MAX_AREA.ln());
    Ok(lo + iter as f64 * ((hi - lo) / max_iter as f64))
}

/// Ocean acceleration `r · exp(−20 · iter / max_iter)`.
pub fn bto_acc(iter: usize, max_iter: usize, r: f64) -> Result<f64> {
    check_counters(iter, max_iter)?;
    Ok(r * (-20.0 * iter as f64 / max_iter as f64).exp())
}

pub fn gravitational_force(m1: f64, m2: f64, distance: f64) -> f64 {
    let num = GRAVITATIONAL_CONSTANT * m1 * m2;
    if num == 0.0 {
        0.0
    } else {
        num / (distance * distance)
    }
}

/// Force probability `1 − (iter − 1/G) / (max_iter − 1/G)`, clamped to `[0, 1]`.
pub fn force_probability(force: f64, iter: usize, max_iter: usize) -> f64 {
    let inv = 1.0 / force;
    let pof = if inv.is_infinite() {
        0.0
    } else {
        1.0 - (iter as f64 - inv) / (max_iter as f64 - inv)
    };
    if pof.is_nan() {
        0.0
    } else {
        pof.clamp(0.0, 1.0)
    }
}

/// Proposal for one agent given all scalar factors.
pub fn bto_position(best: &[f64], space: &SearchSpace, chaos: f64, area: f64, acc: f64, pof: f64, zone: f64) -> Vec<f64> {
    best.iter()
        .enumerate()
        .map(|(d, &b)| (chaos * area * acc * b - pof) * (space.width(d) * zone + space.lower()[d]))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BtoParams {
    pub chaos_map: ChaosMap,
    /// Area of an equilateral triangle inscribed in the unit circle.
    pub triangle_area: f64,
    /// Unit circle area minus the triangle area.
    pub surround_area: f64,
}

impl Default for BtoParams {
    fn default() -> Self {
        let triangle = 3.0 * 3f64.sqrt() / 4.0;
        Self { chaos_map: ChaosMap::default(), triangle_area: triangle, surround_area: std::f64::consts::PI - triangle }
    }
}

#[derive(Debug, Clone)]
pub struct Bto {
    params: BtoParams,
    chaos: ChaosState,
}

impl Default for Bto {
    fn default() -> Self {
        Self::new(BtoParams::default())
    }
}

impl Bto {
    pub fn new(params: BtoParams) -> Self {
        Self { params, chaos: ChaosState::new(params.chaos_map) }
    }

    pub fn with_chaos(map: ChaosMap) -> Self {
        Self::new(BtoParams { chaos_map: map, ..BtoParams::default() })
    }

    pub fn chaos(&self) -> &ChaosState {
        &self.chaos
    }
}

impl Optimizer for Bto {
    fn initialize(&mut self, _pop: &Population, _ctx: &mut StepContext<'_>) -> Result<()> {
        self.chaos = ChaosState::new(self.params.chaos_map);
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        let (t, max) = (ctx.iteration, ctx.max_iterations);
        let zone = bto_zone(t, max)?;
        for i in 0..pop.len() {
            let prescience = ctx.rng.uniform();
            let m1 = ctx.rng.uniform();
            let m2 = ctx.rng.uniform();
            let distance = ctx.rng.uniform();
            let acc = bto_acc(t, max, ctx.rng.uniform())?;
            let area = if prescience > 0.5 { self.params.triangle_area } else { self.params.surround_area };
            let pof = force_probability(gravitational_force(m1, m2, distance), t, max);
            let chaos = self.chaos.value();
            self.chaos.advance();
            let moved = bto_position(&pop.best()?.position, ctx.space, chaos, area, acc, pof, zone);
            let agent = ctx.propose(moved)?;
            pop.offer(&agent)?;
            pop.agents[i] = agent;
        }
        Ok(())
    }
}
