//! Gravitational search algorithm in its standard formulation.
//!
//! Masses come from the current fitness values, normalized to sum to one.
//! Only the `Kbest` heaviest agents attract, `Kbest` shrinking linearly from
//! `N` to 2% of `N`. The gravitational constant decays as
//! `G(t) = G₀ exp(−α t / T)`.
//!
//! Draws: first, for every agent in order, one draw per attracting agent
//! (in `Kbest` order, skipping itself); then, per agent and dimension, one
//! velocity draw, followed by the agent's evaluation.

use crate::error::Result;
use crate::optimizer::{Optimizer, StepContext};
use crate::population::Population;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GsaParams {
    pub g0: f64,
    pub alpha: f64,
    /// Fraction of the population still attracting on the last iteration.
    pub final_fraction: f64,
    /// Added to the distance to avoid division by zero.
    pub epsilon: f64,
}

impl Default for GsaParams {
    fn default() -> Self {
        Self { g0: 1.0, alpha: 20.0, final_fraction: 0.02, epsilon: f64::EPSILON }
    }
}

/// `G₀ exp(−α · iter / max_iter)`.
pub fn gsa_gravity(iter: usize, max_iter: usize, params: &GsaParams) -> f64 {
    params.g0 * (-params.alpha * iter as f64 / max_iter.max(1) as f64).exp()
}

/// Normalized masses for minimization; equal fitness gives `1/N` each.
pub fn gsa_masses(fitness: &[f64]) -> Vec<f64> {
    let n = fitness.len();
    let finite = fitness.iter().copied().filter(|f| !f.is_nan());
    let best = finite.clone().fold(f64::INFINITY, f64::min);
    let worst = finite.fold(f64::NEG_INFINITY, f64::max);
    let raw: Vec<f64> = if worst <= best || !(worst - best).is_finite() {
        vec![1.0; n]
    } else {
        fitness
            .iter()
            .map(|&f| if f.is_nan() { 0.0 } else { (f - worst) / (best - worst) })
            .collect()
    };
    let total: f64 = raw.iter().sum();
    raw.iter().map(|m| m / total).collect()
}

/// Number of attracting agents at 1-based `iter`.
pub fn gsa_kbest(iter: usize, max_iter: usize, n: usize, params: &GsaParams) -> usize {
    let left = 1.0 - iter as f64 / max_iter.max(1) as f64;
    let frac = params.final_fraction + left * (1.0 - params.final_fraction);
    ((frac * n as f64).round() as usize).clamp(1, n)
}

#[derive(Debug, Clone, Default)]
pub struct Gsa {
    params: GsaParams,
    velocity: Vec<Vec<f64>>,
}

impl Gsa {
    pub fn new(params: GsaParams) -> Self {
        Self { params, velocity: Vec::new() }
    }
}

impl Optimizer for Gsa {
    fn initialize(&mut self, pop: &Population, ctx: &mut StepContext<'_>) -> Result<()> {
        self.velocity = vec![vec![0.0; ctx.dim()]; pop.len()];
        Ok(())
    }

    fn iterate(&mut self, pop: &mut Population, ctx: &mut StepContext<'_>) -> Result<()> {
        let n = pop.len();
        let dim = ctx.dim();
        let fitness = pop.agents.iter().map(|a| a.value()).collect::<Result<Vec<_>>>()?;
        let mass = gsa_masses(&fitness);
        let g = gsa_gravity(ctx.iteration, ctx.max_iterations, &self.params);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| mass[b].total_cmp(&mass[a]));
        order.truncate(gsa_kbest(ctx.iteration, ctx.max_iterations, n, &self.params));

        let mut acc = vec![vec![0.0; dim]; n];
        for (i, acc_i) in acc.iter_mut().enumerate() {
            let xi = &pop.agents[i].position;
            for &j in order.iter().filter(|&&j| j != i) {
                let xj = &pop.agents[j].position;
                let r = xi.iter().zip(xj).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
                let scale = ctx.rng.uniform() * g * mass[j] / (r + self.params.epsilon);
                for d in 0..dim {
                    acc_i[d] += scale * (xj[d] - xi[d]);
                }
            }
        }
        for (i, acc_i) in acc.iter().enumerate() {
            let x = &pop.agents[i].position;
            let v: Vec<f64> = (0..dim).map(|d| ctx.rng.uniform() * self.velocity[i][d] + acc_i[d]).collect();
            let moved = x.iter().zip(&v).map(|(a, b)| a + b).collect();
            self.velocity[i] = v;
            let agent = ctx.propose(moved)?;
            pop.offer(&agent)?;
            pop.agents[i] = agent;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_fitness_equal_mass() {
        assert_eq!(gsa_masses(&[2.0; 4]), vec![0.25; 4]);
    }

    #[test]
    fn masses_sum_to_one() {
        let m = gsa_masses(&[3.0, 1.0, 2.0, 5.0]);
        assert!((m.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert_eq!(m[3], 0.0);
        assert!(m[1] > m[2] && m[2] > m[0]);
    }

    #[test]
    fn gravity_schedule() {
        let p = GsaParams::default();
        assert_eq!(gsa_gravity(0, 100, &p), 1.0);
        assert!((gsa_gravity(100, 100, &p) - 2.061153622438558e-9).abs() < 1e-20);
    }

    #[test]
    fn kbest_schedule() {
        let p = GsaParams::default();
        assert_eq!(gsa_kbest(0, 100, 30, &p), 30);
        assert_eq!(gsa_kbest(100, 100, 30, &p), 1);
        assert_eq!(gsa_kbest(100, 100, 100, &p), 2);
    }
}
