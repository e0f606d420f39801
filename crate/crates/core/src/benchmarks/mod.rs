//! The 23 classic test functions.
//!
//! F1–F7 are unimodal, F8–F13 multimodal and scalable (default dimension 30),
//! F14–F23 multimodal with a fixed low dimension. Ranges and dimensions follow
//! the usual table; F12/F13 use the standard penalized forms
//! (`y_i = 1 + (x_i + 1)/4` and the three-branch [`penalty_u`]).

mod tables;

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};
use crate::objective::Objective;
use crate::rng::DrawSource;
use crate::space::{check_dim, SearchSpace};
use tables::*;

/// Benchmark identifier `f1`..`f23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BenchmarkId(u8);

impl BenchmarkId {
    pub const COUNT: u8 = 23;

    pub fn new(index: u8) -> Result<Self> {
        if (1..=Self::COUNT).contains(&index) {
            Ok(Self(index))
        } else {
            Err(Error::UnknownId { kind: "benchmark", id: format!("f{index}") })
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = BenchmarkId> {
        (1..=Self::COUNT).map(BenchmarkId)
    }

    pub fn block(self) -> Block {
        match self.0 {
            1..=7 => Block::Unimodal,
            8..=13 => Block::Multimodal,
            _ => Block::FixedDimension,
        }
    }

    /// Whether the function is defined for any dimension.
    pub fn is_scalable(self) -> bool {
        self.0 <= 13
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownId { kind: "benchmark", id: s.to_string() };
        let digits = s.strip_prefix('f').or_else(|| s.strip_prefix('F')).ok_or_else(unknown)?;
        if digits.starts_with('0') || digits.starts_with('+') {
            return Err(unknown());
        }
        let n: u8 = digits.parse().map_err(|_| unknown())?;
        Self::new(n).map_err(|_| unknown())
    }
}

/// Function groups reported as separate result tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    Unimodal,
    Multimodal,
    FixedDimension,
}

impl Block {
    pub const ALL: [Block; 3] = [Block::Unimodal, Block::Multimodal, Block::FixedDimension];

    pub fn id(self) -> &'static str {
        match self {
            Block::Unimodal => "unimodal",
            Block::Multimodal => "multimodal",
            Block::FixedDimension => "fixed-dimension",
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One benchmark instance: function, dimension and box.
#[derive(Debug, Clone, PartialEq)]
pub struct Benchmark {
    id: BenchmarkId,
    dim: usize,
    lower: f64,
    upper: f64,
}

impl Benchmark {
    /// The function at its standard dimension and range.
    pub fn get(id: BenchmarkId) -> Self {
        let (dim, lower, upper) = match id.0 {
            1 | 3 | 4 | 6 => (30, -100.0, 100.0),
            2 => (30, -10.0, 10.0),
            5 => (30, -30.0, 30.0),
            7 => (30, -1.28, 1.28),
            8 => (30, -500.0, 500.0),
            9 => (30, -5.12, 5.12),
            10 => (30, -32.0, 32.0),
            11 => (30, -600.0, 600.0),
            12 | 13 => (30, -50.0, 50.0),
            14 => (2, -65.536, 65.536),
            15 => (4, -5.0, 5.0),
            16 | 17 => (2, -5.0, 5.0),
            18 => (2, -2.0, 2.0),
            19 => (3, 1.0, 3.0),
            20 => (6, 0.0, 1.0),
            _ => (4, 0.0, 10.0),
        };
        Self { id, dim, lower, upper }
    }

    /// A scalable function (F1–F13) at a non-standard dimension.
    pub fn with_dim(id: BenchmarkId, dim: usize) -> Result<Self> {
        let base = Self::get(id);
        if dim == 0 || (!id.is_scalable() && dim != base.dim) {
            return Err(input(format!("{id} cannot be evaluated in dimension {dim}")));
        }
        Ok(Self { dim, ..base })
    }

    pub fn id(&self) -> BenchmarkId {
        self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn range(&self) -> (f64, f64) {
        (self.lower, self.upper)
    }

    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(self.dim, self.lower, self.upper).expect("benchmark ranges are valid")
    }

    pub fn known_optimum(&self) -> f64 {
        known_optimum(self.id)
    }

    /// Evaluates the function. Only F7 draws from `rng` (one uniform per call).
    pub fn evaluate(&self, x: &[f64], rng: &mut dyn DrawSource) -> Result<f64> {
        check_dim(x, self.dim)?;
        Ok(match self.id.0 {
            1 => sphere(x),
            2 => x.iter().map(|v| v.abs()).sum::<f64>() + x.iter().map(|v| v.abs()).product::<f64>(),
            3 => {
                let mut prefix = 0.0;
                x.iter()
                    .map(|v| {
                        prefix += v;
                        prefix * prefix
                    })
                    .sum()
            }
            4 => x.iter().fold(0.0, |m, v| m.max(v.abs())),
            5 => x
                .windows(2)
                .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
                .sum(),
            6 => x.iter().map(|v| (v + 0.5).floor().powi(2)).sum(),
            7 => {
                let quartic: f64 = x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v.powi(4)).sum();
                quartic + rng.uniform()
            }
            8 => x.iter().map(|v| -v * v.abs().sqrt().sin()).sum(),
            9 => x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0).sum(),
            10 => ackley(x),
            11 => {
                let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
                let prod: f64 = x.iter().enumerate().map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos()).product();
                sum - prod + 1.0
            }
            12 => penalized_1(x),
            13 => penalized_2(x),
            14 => foxholes(x),
            15 => kowalik(x),
            16 => {
                let (a, b) = (x[0], x[1]);
                4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
            }
            17 => {
                let (a, b) = (x[0], x[1]);
                (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
                    + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
                    + 10.0
            }
            18 => goldstein_price(x[0], x[1]),
            19 => hartman(x, &HARTMAN3_A, &HARTMAN3_P),
            20 => hartman(x, &HARTMAN6_A, &HARTMAN6_P),
            21 => shekel(x, 5),
            22 => shekel(x, 7),
            _ => shekel(x, 10),
        })
    }
}

impl Objective for Benchmark {
    fn evaluate(&self, position: &[f64], rng: &mut dyn DrawSource) -> Result<f64> {
        Benchmark::evaluate(self, position, rng)
    }
}

/// Target fitness used by acceptance checks.
///
/// Shekel and Hartman targets carry four decimals (the rounded −10.2, −10.4,
/// −10.5, −3.86, −3.32 are kept in [`reported_optimum`]).
pub fn known_optimum(id: BenchmarkId) -> f64 {
    match id.0 {
        1..=7 | 9..=13 => 0.0,
        8 => -12569.5,
        14 => 0.998,
        15 => 0.0003075,
        16 => -1.0316,
        17 => 0.398,
        18 => 3.0,
        19 => -3.86278,
        20 => -3.32237,
        21 => -10.1532,
        22 => -10.4029,
        _ => -10.5364,
    }
}

/// Optimum as commonly reported at low precision.
pub fn reported_optimum(id: BenchmarkId) -> f64 {
    match id.0 {
        19 => -3.86,
        20 => -3.32,
        21 => -10.2,
        22 => -10.4,
        23 => -10.5,
        _ => known_optimum(id),
    }
}

/// Boundary penalty: `k (z − a)^m` above `a`, `k (−z − a)^m` below `−a`, else 0.
pub fn penalty_u(z: f64, a: f64, k: f64, m_exp: f64) -> f64 {
    if z > a {
        k * (z - a).powf(m_exp)
    } else if z < -a {
        k * (-z - a).powf(m_exp)
    } else {
        0.0
    }
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

fn penalized_1(x: &[f64]) -> f64 {
    let n = x.len();
    let y = |v: f64| 1.0 + (v + 1.0) / 4.0;
    let mut body = 10.0 * (PI * y(x[0])).sin().powi(2);
    for i in 0..n - 1 {
        body += (y(x[i]) - 1.0).powi(2) * (1.0 + 10.0 * (PI * y(x[i + 1])).sin().powi(2));
    }
    body += (y(x[n - 1]) - 1.0).powi(2);
    PI / n as f64 * body + x.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4.0)).sum::<f64>()
}

fn penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut body = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        body += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    body += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    0.1 * body + x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum::<f64>()
}

fn foxholes(x: &[f64]) -> f64 {
    let holes: f64 = (0..25)
        .map(|j| {
            let dist: f64 = (0..2).map(|i| (x[i] - FOXHOLES[i][j]).powi(6)).sum();
            1.0 / ((j + 1) as f64 + dist)
        })
        .sum();
    1.0 / (1.0 / 500.0 + holes)
}

fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .map(|(a, b_inv)| {
            let b = 1.0 / b_inv;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

fn goldstein_price(a: f64, b: f64) -> f64 {
    let p = 1.0 + (a + b + 1.0).powi(2) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let q = 30.0 + (2.0 * a - 3.0 * b).powi(2) * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    p * q
}

fn hartman<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMAN_C[i] * (-inner).exp()
        })
        .sum::<f64>()
}

fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let dist: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (dist + SHEKEL_C[i])
        })
        .sum::<f64>()
}
