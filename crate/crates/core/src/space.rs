use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

/// Box-constrained search domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(input("search space needs at least one dimension"));
        }
        if lower.len() != upper.len() {
            return Err(input(format!(
                "bound lengths differ: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(input(format!("dimension {d}: need finite lower < upper, got [{lo}, {hi}]")));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same `[lo, hi]` range in every one of `dim` dimensions.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, d: usize) -> f64 {
        self.upper[d] - self.lower[d]
    }

    pub fn contains(&self, position: &[f64]) -> bool {
        position.len() == self.dim()
            && position
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (lo, hi))| *lo <= *x && *x <= *hi)
    }
}

/// How out-of-box proposals are brought back into the domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundMode {
    /// Saturate at the violated bound.
    #[default]
    Clamp,
    /// Mirror once about the violated bound, then saturate.
    Reflect,
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundMode::Clamp => "clamp",
            BoundMode::Reflect => "reflect",
        })
    }
}

impl FromStr for BoundMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clamp" => Ok(BoundMode::Clamp),
            "reflect" => Ok(BoundMode::Reflect),
            _ => Err(Error::UnknownId { kind: "bound mode", id: s.to_string() }),
        }
    }
}

/// Brings every component of `position` into `[lower_d, upper_d]`.
///
/// NaN components are replaced by the midpoint of their range.
pub fn clamp_to_bounds(position: &[f64], space: &SearchSpace, mode: BoundMode) -> Vec<f64> {
    debug_assert_eq!(position.len(), space.dim());
    position
        .iter()
        .enumerate()
        .map(|(d, &x)| bound_component(x, space.lower[d], space.upper[d], mode))
        .collect()
}

/// In-place variant of [`clamp_to_bounds`].
pub fn clamp_in_place(position: &mut [f64], space: &SearchSpace, mode: BoundMode) {
    for (d, x) in position.iter_mut().enumerate() {
        *x = bound_component(*x, space.lower[d], space.upper[d], mode);
    }
}

fn bound_component(x: f64, lo: f64, hi: f64, mode: BoundMode) -> f64 {
    if x.is_nan() {
        return 0.5 * (lo + hi);
    }
    let x = match mode {
        BoundMode::Clamp => x,
        BoundMode::Reflect if x.is_infinite() => x,
        BoundMode::Reflect if x > hi => hi - (x - hi),
        BoundMode::Reflect if x < lo => lo + (lo - x),
        BoundMode::Reflect => x,
    };
    x.clamp(lo, hi)
}

pub(crate) fn check_dim(position: &[f64], dim: usize) -> Result<()> {
    if position.len() != dim {
        return Err(input(format!("expected {dim} components, got {}", position.len())));
    }
    Ok(())
}
