//! Numeric building blocks of the beetle optimizer: threat-circle overlap,
//! chaotic modulation, the spray schedule and flapping lift.

mod chaos;
mod geometry;

pub use chaos::{chaos_next, ChaosMap, ChaosState, Domain};
pub use geometry::{circle_intersection_area, CirclePair};
pub(crate) use geometry::lens_area;

use crate::error::{config, Result};
use crate::space::SearchSpace;

/// Smallest spray magnitude; the defense update divides by the spray.
pub const SPRAY_FLOOR: f64 = 1e-12;

/// Base of the spray exponential.
pub const SPRAY_BASE: f64 = 2.7;

/// Sign of the spray exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SprayExponent {
    /// `2.7^(+100 t/T)`: the spray grows over the run.
    #[default]
    Growing,
    /// `2.7^(−100 t/T)`: the spray decays over the run.
    Decaying,
}

/// `chaos · 2.7^(±100 · iter / max_iter)`, floored at [`SPRAY_FLOOR`] in magnitude.
///
/// A zero chaos value floors to `+SPRAY_FLOOR`; negative values keep their sign.
pub fn spray(chaos_value: f64, iter: usize, max_iter: usize, exponent: SprayExponent) -> Result<f64> {
    if max_iter == 0 {
        return Err(config("max_iter must be positive"));
    }
    if iter > max_iter {
        return Err(config(format!("iteration {iter} exceeds max_iter {max_iter}")));
    }
    let sign = match exponent {
        SprayExponent::Growing => 1.0,
        SprayExponent::Decaying => -1.0,
    };
    let value = chaos_value * SPRAY_BASE.powf(sign * 100.0 * iter as f64 / max_iter as f64);
    Ok(if value.abs() >= SPRAY_FLOOR {
        value
    } else if value < 0.0 {
        -SPRAY_FLOOR
    } else {
        SPRAY_FLOOR
    })
}

/// Flapping-flight lift inputs, each drawn on `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftParams {
    pub coefficient: f64,
    pub air_density: f64,
    pub velocity: f64,
    pub wing_area: f64,
}

/// `L = LC · 0.5 · ρ · V² · A`.
pub fn lift(p: LiftParams) -> f64 {
    p.coefficient * 0.5 * p.air_density * p.velocity * p.velocity * p.wing_area
}

/// Per-dimension escape displacement `L · (ub_d − lb_d) / iter` (`iter` 1-based).
pub fn escape_step(lift: f64, space: &SearchSpace, iter: usize) -> Result<Vec<f64>> {
    if iter == 0 {
        return Err(config("escape step needs a 1-based iteration"));
    }
    Ok((0..space.dim()).map(|d| lift * space.width(d) / iter as f64).collect())
}
