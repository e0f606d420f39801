//! One-dimensional chaotic maps used to modulate the spray and BTO schedules.
//!
//! | id            | rule                                              | domain   |
//! |---------------|---------------------------------------------------|----------|
//! | `sinusoidal`  | `2.3 x² sin(πx)`                                  | [0, 1]   |
//! | `chebyshev`   | `cos(k · acos x)`, `k` the step number            | [-1, 1]  |
//! | `circle`      | `x + 0.2 − (0.5 / 2π) sin(2πx)  mod 1`            | [0, 1)   |
//! | `singer`      | `1.07 (7.86x − 23.31x² + 28.75x³ − 13.302875x⁴)`  | [0, 1]   |
//! | `gauss-mouse` | `1/x mod 1`                                       | [0, 1)   |
//! | `tent`        | `x / 0.7` if `x < 0.7`, else `(10/3)(1 − x)`      | (0, 1)   |
//! | `iterative`   | `sin(0.7π / x)`                                   | [-1, 1]  |
//!
//! Every map starts from 0.7. When an image is undefined (`1/0`), non-finite or
//! falls outside the domain, the iterate is re-injected at an interior point
//! taken from a Weyl sequence on the step counter, so orbits never leave the
//! domain and never stall on a rounding artefact.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

const INITIAL_VALUE: f64 = 0.7;
const GOLDEN_FRACTION: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ChaosMap {
    Sinusoidal,
    Chebyshev,
    Circle,
    Singer,
    GaussMouse,
    #[default]
    Tent,
    Iterative,
}

/// Interval with per-end openness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Domain {
    const fn new(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Self {
        Self { lo, hi, lo_closed, hi_closed }
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }
}

impl ChaosMap {
    pub const ALL: [ChaosMap; 7] = [
        ChaosMap::Sinusoidal,
        ChaosMap::Chebyshev,
        ChaosMap::Circle,
        ChaosMap::Singer,
        ChaosMap::GaussMouse,
        ChaosMap::Tent,
        ChaosMap::Iterative,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ChaosMap::Sinusoidal => "sinusoidal",
            ChaosMap::Chebyshev => "chebyshev",
            ChaosMap::Circle => "circle",
            ChaosMap::Singer => "singer",
            ChaosMap::GaussMouse => "gauss-mouse",
            ChaosMap::Tent => "tent",
            ChaosMap::Iterative => "iterative",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            ChaosMap::Sinusoidal | ChaosMap::Singer => Domain::new(0.0, 1.0, true, true),
            ChaosMap::Chebyshev | ChaosMap::Iterative => Domain::new(-1.0, 1.0, true, true),
            ChaosMap::Circle | ChaosMap::GaussMouse => Domain::new(0.0, 1.0, true, false),
            ChaosMap::Tent => Domain::new(0.0, 1.0, false, false),
        }
    }

    /// Raw image of `x` under the map; `None` where the rule is undefined.
    /// `step` is the 1-based index of the step being taken.
    pub fn apply(self, x: f64, step: u64) -> Option<f64> {
        let y = match self {
            ChaosMap::Sinusoidal => 2.3 * x * x * (PI * x).sin(),
            ChaosMap::Chebyshev => (step as f64 * x.clamp(-1.0, 1.0).acos()).cos(),
            ChaosMap::Circle => (x + 0.2 - (0.5 / (2.0 * PI)) * (2.0 * PI * x).sin()).rem_euclid(1.0),
            ChaosMap::Singer => {
                1.07 * (7.86 * x - 23.31 * x.powi(2) + 28.75 * x.powi(3) - 13.302_875 * x.powi(4))
            }
            ChaosMap::GaussMouse if x == 0.0 => return None,
            ChaosMap::GaussMouse => (1.0 / x).fract(),
            ChaosMap::Tent if x < 0.7 => x / 0.7,
            ChaosMap::Tent => (10.0 / 3.0) * (1.0 - x),
            ChaosMap::Iterative if x == 0.0 => return None,
            ChaosMap::Iterative => (0.7 * PI / x).sin(),
        };
        Some(y)
    }
}

impl fmt::Display for ChaosMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ChaosMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChaosMap::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::UnknownId { kind: "chaos map", id: s.to_string() })
    }
}

/// Current iterate of a chaotic map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChaosState {
    map: ChaosMap,
    value: f64,
    step: u64,
}

impl ChaosState {
    /// Starts `map` from its default seed value 0.7.
    pub fn new(map: ChaosMap) -> Self {
        Self { map, value: INITIAL_VALUE, step: 0 }
    }

    /// Starts `map` from `value`, which must lie in the map's domain.
    pub fn with_value(map: ChaosMap, value: f64) -> Result<Self> {
        if !map.domain().contains(value) {
            return Err(input(format!("{value} is outside the {map} map domain")));
        }
        Ok(Self { map, value, step: 0 })
    }

    pub fn map(&self) -> ChaosMap {
        self.map
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    /// Advances one step and returns the new iterate.
    pub fn advance(&mut self) -> f64 {
        self.step += 1;
        let domain = self.map.domain();
        self.value = match self.map.apply(self.value, self.step) {
            Some(y) if y.is_finite() && domain.contains(y) => y,
            _ => {
                let w = (0.5 + self.step as f64 * GOLDEN_FRACTION).fract();
                // w is irrational-spaced and never hits 0 exactly for step < 2^52
                domain.lo + (domain.hi - domain.lo) * w.clamp(1e-9, 1.0 - 1e-9)
            }
        };
        self.value
    }
}

/// Functional form of [`ChaosState::advance`].
pub fn chaos_next(state: ChaosState) -> ChaosState {
    let mut next = state;
    next.advance();
    next
}
